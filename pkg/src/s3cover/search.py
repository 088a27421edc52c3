"""Generation of constraint-satisfying parameter sets.

:func:`sample` draws random rational solutions deterministically from a
seed: a, b, c are drawn with b, c nonzero and a^2 + bc != 0, the two
linear conditions are solved for (e, f) with (d, g) free, and h is then
pinned by the cubic condition.  :func:`enumerate_integer` exhaustively
scans bounded integer tuples, pruning through the linear conditions
before testing the cubic one; the degenerate stratum a^2 + bc = 0 (where
h is unconstrained) is included but flagged.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction
from typing import Iterator

from .algebra import CoverParams, check_constraints, is_degenerate

SEED_ENV_VAR = "S3COVER_SEED"


def default_seed(fallback: int = 0) -> int:
    """Sampler seed for test utilities; overridable via S3COVER_SEED."""
    value = os.environ.get(SEED_ENV_VAR)
    return int(value) if value else fallback


def _rand_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def sample(seed: int, bound: int = 5) -> CoverParams:
    """One deterministic constraint-satisfying parameter set.

    Draws of height <= bound; resamples on degenerate draws (b = 0,
    c = 0 or a^2 + bc = 0), which the solving steps cannot handle.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    rng = random.Random(seed)
    while True:
        a = _rand_rational(rng, bound)
        b = _rand_rational(rng, bound)
        c = _rand_rational(rng, bound)
        if b != 0 and c != 0 and a * a + b * c != 0:
            break
    d = _rand_rational(rng, bound)
    g = _rand_rational(rng, bound)
    # linear conditions: c*e = b*g - 2*a*d and b*f = 2*a*g + c*d
    e = (b * g - 2 * a * d) / c
    f = (2 * a * g + c * d) / b
    h = (
        Fraction(3, 2)
        * (a * (e * f - d * g) + b * (g * g - d * f) + c * (e * g - d * d))
        / (a * a + b * c)
    )
    params = CoverParams(a, b, c, d, e, f, g, h)
    assert check_constraints(params).satisfied
    return params


def sample_many(seed: int, count: int, bound: int = 5) -> list[CoverParams]:
    return [sample(seed + k, bound) for k in range(count)]


def _divides(num: int, den: int) -> bool:
    return den != 0 and num % den == 0


def _candidate_e(a: int, b: int, c: int, d: int, g: int, bound: int) -> Iterator[int]:
    rhs = b * g - 2 * a * d
    if c != 0:
        if _divides(rhs, c) and abs(rhs // c) <= bound:
            yield rhs // c
    elif rhs == 0:
        yield from range(-bound, bound + 1)


def _candidate_f(a: int, b: int, c: int, d: int, g: int, bound: int) -> Iterator[int]:
    rhs = 2 * a * g + c * d
    if b != 0:
        if _divides(rhs, b) and abs(rhs // b) <= bound:
            yield rhs // b
    elif rhs == 0:
        yield from range(-bound, bound + 1)


def enumerate_integer(bound: int) -> list[CoverParams]:
    """All integer tuples with entries in [-bound, bound] satisfying the
    three constraints exactly, lexicographically ordered.

    Includes the degenerate a^2 + bc = 0 stratum (h free when the cubic
    right-hand side vanishes); use :func:`algebra.is_degenerate` or the
    CLI flag to separate it.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    span = range(-bound, bound + 1)
    # cache the Fraction objects: the scan constructs millions of fields
    frac = {k: Fraction(k) for k in span}
    out: list[CoverParams] = []
    for a in span:
        for b in span:
            for c in span:
                abc = a * a + b * c
                fa, fb, fc = frac[a], frac[b], frac[c]
                for d in span:
                    for g in span:
                        fd, fg = frac[d], frac[g]
                        for e in _candidate_e(a, b, c, d, g, bound):
                            for f in _candidate_f(a, b, c, d, g, bound):
                                rhs2 = 3 * (
                                    a * (e * f - d * g)
                                    + b * (g * g - d * f)
                                    + c * (e * g - d * d)
                                )
                                # cubic condition: 2*abc*h = rhs2
                                if abc != 0:
                                    if _divides(rhs2, 2 * abc):
                                        h = rhs2 // (2 * abc)
                                        if abs(h) <= bound:
                                            out.append(
                                                CoverParams(
                                                    fa, fb, fc, fd, frac[e],
                                                    frac[f], fg, frac[h],
                                                )
                                            )
                                elif rhs2 == 0:
                                    fe, ff = frac[e], frac[f]
                                    out.extend(
                                        CoverParams(fa, fb, fc, fd, fe, ff, fg, frac[h])
                                        for h in span
                                    )
    out.sort(key=CoverParams.astuple)
    return out


def enumerate_nondegenerate(bound: int) -> list[CoverParams]:
    return [p for p in enumerate_integer(bound) if not is_degenerate(p)]


def enumerate_degenerate(bound: int) -> list[CoverParams]:
    return [p for p in enumerate_integer(bound) if is_degenerate(p)]
