"""The S3-action on the rank-6 algebra and the idempotent projectors.

The generators act on the fixed basis [1, t, v1, v2, w1, w2] by

    sigma:  1 -> 1,  t -> t,   v_i -> -w_i,  w_i -> v_i - w_i
    tau:    1 -> 1,  t -> -t,  v_i <-> w_i

(the unit is invariant, t carries the sign character, and the 4x4 block
realizes the standard two-dimensional action doubled over the v/w split).
Matrices use the column-image convention, so mapping a group element in
normal form sigma^i tau^j to S^i T^j is a left action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .elements import AlgebraElement
from .group_ring import ELEMENTS, GroupElement, GroupRingElement
from .linalg import Matrix


@dataclass(frozen=True)
class ActionMatrix:
    sigma: Matrix
    tau: Matrix


@lru_cache(maxsize=1)
def standard_action() -> ActionMatrix:
    sigma = linalg.from_rows(
        [
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 0, -1, 0, -1, 0],
            [0, 0, 0, -1, 0, -1],
        ]
    )
    tau = linalg.from_rows(
        [
            [1, 0, 0, 0, 0, 0],
            [0, -1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
        ]
    )
    return ActionMatrix(sigma, tau)


@lru_cache(maxsize=None)
def matrix_for(g: GroupElement) -> Matrix:
    act = standard_action()
    m = linalg.mat_pow(act.sigma, g.i)
    if g.j:
        m = linalg.mat_mul(m, act.tau)
    return m


def apply(g: GroupElement, x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(linalg.mat_vec(matrix_for(g), x.coords))


def projector(z: GroupRingElement) -> Matrix:
    """Linear extension of the action over a group ring element."""
    out = linalg.zero(6)
    for g in ELEMENTS:
        c = z.coeffs[g.index]
        if c != 0:
            out = linalg.mat_add(out, linalg.mat_scale(c, matrix_for(g)))
    return out


def is_idempotent(p: Matrix) -> bool:
    return linalg.mat_mul(p, p) == p


def image_basis(p: Matrix) -> list[tuple[Fraction, ...]]:
    """A basis (as coordinate vectors) of the column space of p."""
    cols = [tuple(row[j] for row in p) for j in range(len(p[0]))]
    basis: list[tuple[Fraction, ...]] = []
    for col in cols:
        trial = basis + [col]
        if linalg.rank(tuple(trial)) > len(basis):
            basis.append(col)
    return basis
