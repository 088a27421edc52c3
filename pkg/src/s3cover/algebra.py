"""Multiplication tables on the rank-6 algebra.

Two constructions are provided.  :func:`build_pre_associative` takes the
17-parameter family of commutative, equivariant (but generally
non-associative) structures.  :func:`build_cover` takes the canonical
eight parameters (a..h) and produces the table that is associative
exactly when the three compatibility constraints vanish; the constraints
themselves live in :func:`check_constraints` and are deliberately not
folded into the builder, so that violating tables can be built for
negative tests.  :func:`verify` is the brute-force axiom scan over basis
tuples, which suffices by multilinearity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from . import rational, representation
from .elements import BASIS, DIM, AlgebraElement
from .group_ring import ELEMENTS, GroupElement

PAIRS: tuple[tuple[int, int], ...] = tuple(
    (i, j) for i in range(DIM) for j in range(i, DIM)
)


def pair_key(i: int, j: int) -> str:
    return f"{BASIS[i]}*{BASIS[j]}"


class TableShapeError(ValueError):
    """A table does not have the canonical eight-parameter shape."""


@dataclass(frozen=True)
class CoverParams:
    """The eight scalars parameterizing a cover algebra."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction
    g: Fraction
    h: Fraction

    @staticmethod
    def of(a, b, c, d, e, f, g, h) -> "CoverParams":
        return CoverParams(*(Fraction(x) for x in (a, b, c, d, e, f, g, h)))

    @staticmethod
    def zero() -> "CoverParams":
        return CoverParams.of(0, 0, 0, 0, 0, 0, 0, 0)

    def astuple(self) -> tuple[Fraction, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f, self.g, self.h)

    def to_json(self) -> dict[str, int | str]:
        return {k: rational.to_json(v) for k, v in zip("abcdefgh", self.astuple())}

    @staticmethod
    def from_json(obj: Mapping[str, object]) -> "CoverParams":
        missing = [k for k in "abcdefgh" if k not in obj]
        if missing:
            raise ValueError(f"params document missing keys: {missing}")
        return CoverParams(*(rational.from_json(obj[k]) for k in "abcdefgh"))


@dataclass(frozen=True)
class PreAssocParams:
    """The 17 scalars of the commutative equivariant family.

    eps1/eps3/eps4 are the coefficients of the v1*v2 row (renamed from
    the idempotent-colliding letters).
    """

    a: Fraction
    b1: Fraction
    b2: Fraction
    c1: Fraction
    c2: Fraction
    d1: Fraction
    d3: Fraction
    d4: Fraction
    eps1: Fraction
    eps3: Fraction
    eps4: Fraction
    f1: Fraction
    f3: Fraction
    f4: Fraction
    h2: Fraction
    h3: Fraction
    h4: Fraction

    @staticmethod
    def of(**kwargs) -> "PreAssocParams":
        fields = (
            "a b1 b2 c1 c2 d1 d3 d4 eps1 eps3 eps4 f1 f3 f4 h2 h3 h4".split()
        )
        vals = {k: Fraction(kwargs.pop(k, 0)) for k in fields}
        if kwargs:
            raise ValueError(f"unknown parameters: {sorted(kwargs)}")
        return PreAssocParams(**vals)


@dataclass(frozen=True)
class MultiplicationTable:
    """Structure constants for each unordered basis pair (21 entries)."""

    products: Mapping[tuple[int, int], AlgebraElement]
    params: CoverParams | None = None

    def __post_init__(self) -> None:
        if set(self.products) != set(PAIRS):
            raise ValueError("table must define all 21 unordered basis pairs")

    def entry(self, i: int, j: int) -> AlgebraElement:
        return self.products[(i, j) if i <= j else (j, i)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiplicationTable):
            return NotImplemented
        return all(self.products[p] == other.products[p] for p in PAIRS)

    def to_json(self) -> dict:
        doc: dict = {"basis": list(BASIS)}
        if self.params is not None:
            doc["params"] = self.params.to_json()
        doc["products"] = {
            pair_key(i, j): self.products[(i, j)].to_json() for i, j in PAIRS
        }
        return doc

    @staticmethod
    def from_json(obj: Mapping[str, object]) -> "MultiplicationTable":
        products_doc = obj.get("products")
        if not isinstance(products_doc, Mapping):
            raise ValueError("table document missing 'products'")
        products = {}
        for i, j in PAIRS:
            key = pair_key(i, j)
            if key not in products_doc:
                raise ValueError(f"table document missing product {key!r}")
            products[(i, j)] = AlgebraElement.from_json(products_doc[key])
        params = None
        if isinstance(obj.get("params"), Mapping):
            params = CoverParams.from_json(obj["params"])  # type: ignore[arg-type]
        return MultiplicationTable(products, params)


def _el(one=0, t=0, v1=0, v2=0, w1=0, w2=0) -> AlgebraElement:
    return AlgebraElement.from_coords((one, t, v1, v2, w1, w2))


def _with_unit_row(rows: dict[tuple[int, int], AlgebraElement]) -> dict:
    for k in range(DIM):
        rows[(0, k)] = AlgebraElement.basis(k)
    return rows


def build_pre_associative(p: PreAssocParams) -> MultiplicationTable:
    """Table of the 17-parameter commutative equivariant family.

    Commutativity and equivariance hold for every parameter choice;
    associativity is not guaranteed.
    """
    half = Fraction(1, 2)
    rows = {
        (1, 1): _el(one=p.a),
        (1, 2): _el(v1=p.b1, v2=p.b2, w1=-2 * p.b1, w2=-2 * p.b2),
        (1, 3): _el(v1=p.c1, v2=p.c2, w1=-2 * p.c1, w2=-2 * p.c2),
        (1, 4): _el(v1=2 * p.b1, v2=2 * p.b2, w1=-p.b1, w2=-p.b2),
        (1, 5): _el(v1=2 * p.c1, v2=2 * p.c2, w1=-p.c1, w2=-p.c2),
        (2, 2): _el(one=p.d1, v1=p.d3, v2=p.d4, w1=-2 * p.d3, w2=-2 * p.d4),
        (2, 3): _el(one=p.eps1, v1=p.eps3, v2=p.eps4, w1=-2 * p.eps3, w2=-2 * p.eps4),
        (3, 3): _el(one=p.f1, v1=p.f3, v2=p.f4, w1=-2 * p.f3, w2=-2 * p.f4),
        (2, 4): _el(one=half * p.d1, v1=-p.d3, v2=-p.d4, w1=-p.d3, w2=-p.d4),
        (2, 5): _el(
            one=half * p.eps1, t=p.h2, v1=p.h3, v2=p.h4, w1=-p.eps3, w2=-p.eps4
        ),
        (3, 4): _el(
            one=half * p.eps1, t=-p.h2, v1=-p.eps3, v2=-p.eps4, w1=p.h3, w2=p.h4
        ),
        (3, 5): _el(one=half * p.f1, v1=-p.f3, v2=-p.f4, w1=-p.f3, w2=-p.f4),
        (4, 4): _el(one=p.d1, v1=-2 * p.d3, v2=-2 * p.d4, w1=p.d3, w2=p.d4),
        (4, 5): _el(one=p.eps1, v1=-2 * p.eps3, v2=-2 * p.eps4, w1=p.eps3, w2=p.eps4),
        (5, 5): _el(one=p.f1, v1=-2 * p.f3, v2=-2 * p.f4, w1=p.f3, w2=p.f4),
    }
    return MultiplicationTable(_with_unit_row(rows))


def cover_to_pre_associative(p: CoverParams) -> PreAssocParams:
    """The substitution identifying the eight-parameter table inside the
    17-parameter family."""
    a, b, c, d, e, f, g, h = p.astuple()
    return PreAssocParams.of(
        a=-3 * a * a - 3 * b * c,
        b1=a,
        b2=b,
        c1=c,
        c2=-a,
        d1=6 * (d * d - e * g),
        d3=d,
        d4=e,
        eps1=3 * (e * f - d * g),
        eps3=-g,
        eps4=-d,
        f1=6 * (g * g - d * f),
        f3=f,
        f4=g,
        h2=h,
        h3=g,
        h4=d,
    )


def build_cover(p: CoverParams) -> MultiplicationTable:
    """The canonical eight-parameter table.

    Associativity holds exactly when :func:`check_constraints` reports
    all residuals zero; the table itself is built unconditionally.
    """
    a, b, c, d, e, f, g, h = p.astuple()
    th = Fraction(3, 2)
    rows = {
        (1, 1): _el(one=-3 * a * a - 3 * b * c),
        (1, 2): _el(v1=a, v2=b, w1=-2 * a, w2=-2 * b),
        (1, 3): _el(v1=c, v2=-a, w1=-2 * c, w2=2 * a),
        (1, 4): _el(v1=2 * a, v2=2 * b, w1=-a, w2=-b),
        (1, 5): _el(v1=2 * c, v2=-2 * a, w1=-c, w2=a),
        (2, 2): _el(one=6 * (d * d - e * g), v1=d, v2=e, w1=-2 * d, w2=-2 * e),
        (2, 3): _el(one=3 * (e * f - d * g), v1=-g, v2=-d, w1=2 * g, w2=2 * d),
        (3, 3): _el(one=6 * (g * g - d * f), v1=f, v2=g, w1=-2 * f, w2=-2 * g),
        (2, 4): _el(one=3 * (d * d - e * g), v1=-d, v2=-e, w1=-d, w2=-e),
        (2, 5): _el(one=th * (e * f - d * g), t=h, v1=g, v2=d, w1=g, w2=d),
        (3, 4): _el(one=th * (e * f - d * g), t=-h, v1=g, v2=d, w1=g, w2=d),
        (3, 5): _el(one=3 * (g * g - d * f), v1=-f, v2=-g, w1=-f, w2=-g),
        (4, 4): _el(one=6 * (d * d - e * g), v1=-2 * d, v2=-2 * e, w1=d, w2=e),
        (4, 5): _el(one=3 * (e * f - d * g), v1=2 * g, v2=2 * d, w1=-g, w2=-d),
        (5, 5): _el(one=6 * (g * g - d * f), v1=-2 * f, v2=-2 * g, w1=f, w2=g),
    }
    return MultiplicationTable(_with_unit_row(rows), params=p)


@dataclass(frozen=True)
class ConstraintReport:
    r1: Fraction
    r2: Fraction
    r3: Fraction

    @property
    def satisfied(self) -> bool:
        return self.r1 == 0 and self.r2 == 0 and self.r3 == 0

    def residuals(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.r1, self.r2, self.r3)

    def to_json(self) -> dict:
        return {
            "residuals": [rational.to_json(r) for r in self.residuals()],
            "satisfied": self.satisfied,
        }


def check_constraints(p: CoverParams) -> ConstraintReport:
    """The three compatibility residuals; all zero iff the cover table is
    associative."""
    a, b, c, d, e, f, g, h = p.astuple()
    r1 = -b * g + 2 * a * d + c * e
    r2 = -b * f + 2 * a * g + c * d
    r3 = (a * a + b * c) * h - Fraction(3, 2) * (
        a * (e * f - d * g) + b * (g * g - d * f) + c * (e * g - d * d)
    )
    return ConstraintReport(r1, r2, r3)


def is_degenerate(p: CoverParams) -> bool:
    """Heuristic degeneracy flag: t^2 = 0, i.e. a^2 + bc = 0.

    On this stratum the h parameter is not pinned down by the third
    constraint; it does not decide integrality.
    """
    return p.a * p.a + p.b * p.c == 0


def multiply(
    x: AlgebraElement, y: AlgebraElement, table: MultiplicationTable
) -> AlgebraElement:
    """Bilinear extension of the table to arbitrary elements."""
    out = [Fraction(0)] * DIM
    for i, xc in enumerate(x.coords):
        if xc == 0:
            continue
        for j, yc in enumerate(y.coords):
            if yc == 0:
                continue
            c = xc * yc
            entry = table.entry(i, j).coords
            for k in range(DIM):
                if entry[k] != 0:
                    out[k] += c * entry[k]
    return AlgebraElement(tuple(out))


@dataclass(frozen=True)
class VerifyReport:
    """Axiom scan result; each failed axiom carries its first witness."""

    unit_ok: bool
    commutative_ok: bool
    associative_ok: bool
    equivariant_ok: bool
    unit_witness: str | None = None
    commutative_witness: str | None = None
    associative_witness: str | None = None
    equivariant_witness: str | None = None

    @property
    def all_ok(self) -> bool:
        return (
            self.unit_ok
            and self.commutative_ok
            and self.associative_ok
            and self.equivariant_ok
        )

    def to_json(self) -> dict:
        return {
            "unit": {"ok": self.unit_ok, "witness": self.unit_witness},
            "commutativity": {
                "ok": self.commutative_ok,
                "witness": self.commutative_witness,
            },
            "associativity": {
                "ok": self.associative_ok,
                "witness": self.associative_witness,
            },
            "equivariance": {
                "ok": self.equivariant_ok,
                "witness": self.equivariant_witness,
            },
            "all_ok": self.all_ok,
        }


def _basis_elements() -> Iterator[tuple[int, AlgebraElement]]:
    for k in range(DIM):
        yield k, AlgebraElement.basis(k)


def verify(table: MultiplicationTable) -> VerifyReport:
    """Brute-force axiom verification on basis tuples.

    Unit on 6 vectors, commutativity on 36 ordered pairs, associativity
    on 216 ordered triples, equivariance on 6 group elements x 36 pairs.
    Multilinearity extends each check to arbitrary elements.
    """
    unit_ok, unit_w = True, None
    for k, bk in _basis_elements():
        if table.entry(0, k) != bk:
            unit_ok, unit_w = False, pair_key(0, k)
            break

    comm_ok, comm_w = True, None
    for i in range(DIM):
        for j in range(DIM):
            lhs = multiply(AlgebraElement.basis(i), AlgebraElement.basis(j), table)
            rhs = multiply(AlgebraElement.basis(j), AlgebraElement.basis(i), table)
            if lhs != rhs:
                comm_ok, comm_w = False, pair_key(i, j)
                break
        if not comm_ok:
            break

    assoc_ok, assoc_w = True, None
    for i, j, k in itertools.product(range(DIM), repeat=3):
        bi, bj, bk = (AlgebraElement.basis(m) for m in (i, j, k))
        lhs = multiply(multiply(bi, bj, table), bk, table)
        rhs = multiply(bi, multiply(bj, bk, table), table)
        if lhs != rhs:
            assoc_ok = False
            assoc_w = f"({BASIS[i]}*{BASIS[j]})*{BASIS[k]} != {BASIS[i]}*({BASIS[j]}*{BASIS[k]})"
            break

    equiv_ok, equiv_w = True, None
    for g in ELEMENTS:
        for i in range(DIM):
            for j in range(DIM):
                bi, bj = AlgebraElement.basis(i), AlgebraElement.basis(j)
                lhs = representation.apply(g, multiply(bi, bj, table))
                rhs = multiply(
                    representation.apply(g, bi), representation.apply(g, bj), table
                )
                if lhs != rhs:
                    equiv_ok = False
                    equiv_w = f"{g.name}: {pair_key(i, j)}"
                    break
            if not equiv_ok:
                break
        if not equiv_ok:
            break

    return VerifyReport(
        unit_ok,
        comm_ok,
        assoc_ok,
        equiv_ok,
        unit_w,
        comm_w,
        assoc_w,
        equiv_w,
    )


def verify_equivariance(table: MultiplicationTable) -> bool:
    report = verify(table)
    return report.equivariant_ok and report.commutative_ok


def extract_params(table: MultiplicationTable) -> CoverParams:
    """Read the eight parameters off a table of the canonical shape.

    Every other entry is re-derived from the extracted parameters and
    compared; the first mismatching entry is reported as a shape error.
    """
    a = table.entry(1, 2).coords[2]
    b = table.entry(1, 2).coords[3]
    c = table.entry(1, 3).coords[2]
    d = table.entry(2, 2).coords[2]
    e = table.entry(2, 2).coords[3]
    f = table.entry(3, 3).coords[2]
    g = table.entry(3, 3).coords[3]
    h = table.entry(2, 5).coords[1]
    params = CoverParams(a, b, c, d, e, f, g, h)
    rebuilt = build_cover(params)
    for i, j in PAIRS:
        if table.entry(i, j) != rebuilt.entry(i, j):
            raise TableShapeError(
                f"table entry {pair_key(i, j)} does not match the canonical shape"
            )
    return params


def apply_matrix(m: "linalg.Matrix", x: AlgebraElement) -> AlgebraElement:
    from . import linalg

    return AlgebraElement(linalg.mat_vec(m, x.coords))
