"""Parameter transformation under change of generator and basis.

A change of data is a nonzero unit u rescaling the rank-1 generator
(s = u*t) together with an invertible 2x2 matrix C giving the new basis
of the rank-2 block by rows: w1 = l1*v1 + m1*v2, w2 = l2*v1 + m2*v2.
The rows convention is the one under which the printed parameter
formulas are covariant; the tests pin this down by conjugation.
The eight cover parameters transform covariantly; the induced rank-6
module map conjugates the old multiplication table into the new one,
which the tests verify independently of the printed formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import linalg, rational
from .algebra import CoverParams
from .linalg import Matrix


@dataclass(frozen=True)
class BasisChange:
    """u: unit scaling of the rank-1 generator; c: 2x2 change matrix
    ((l1, m1), (l2, m2)), rows giving the new basis vectors."""

    u: Fraction
    c: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]

    def __post_init__(self) -> None:
        if self.u == 0:
            raise ValueError("unit scaling must be nonzero")
        if self.det == 0:
            raise ValueError("change of basis matrix must be invertible")

    @staticmethod
    def of(u, c) -> "BasisChange":
        rows = tuple(tuple(Fraction(x) for x in row) for row in c)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("change of basis matrix must be 2x2")
        return BasisChange(Fraction(u), rows)  # type: ignore[arg-type]

    @staticmethod
    def identity() -> "BasisChange":
        return BasisChange.of(1, ((1, 0), (0, 1)))

    @property
    def det(self) -> Fraction:
        (l1, m1), (l2, m2) = self.c
        return l1 * m2 - l2 * m1

    def compose(self, then: "BasisChange") -> "BasisChange":
        """First apply self, then the other change; units multiply and
        the later matrix multiplies on the left (rows convention)."""
        c = linalg.mat_mul(then.c, self.c)
        return BasisChange(self.u * then.u, (tuple(c[0]), tuple(c[1])))

    def to_json(self) -> dict:
        return {
            "u": rational.to_json(self.u),
            "C": [[rational.to_json(x) for x in row] for row in self.c],
        }

    @staticmethod
    def from_json(obj: Mapping[str, object]) -> "BasisChange":
        if "u" not in obj or "C" not in obj:
            raise ValueError("basis-change document needs keys 'u' and 'C'")
        rows = obj["C"]
        if not isinstance(rows, list) or len(rows) != 2:
            raise ValueError("'C' must be a 2x2 matrix")
        c = tuple(tuple(rational.from_json(x) for x in row) for row in rows)
        if any(len(r) != 2 for r in c):
            raise ValueError("'C' must be a 2x2 matrix")
        return BasisChange(rational.from_json(obj["u"]), c)  # type: ignore[arg-type]


def transform(p: CoverParams, bc: BasisChange) -> CoverParams:
    """The eight primed parameters in the new generator and basis."""
    a, b, c, d, e, f, g, h = p.astuple()
    (l1, m1), (l2, m2) = bc.c
    u = bc.u
    det = bc.det
    ua = u / det
    a2 = ua * (-l1 * l2 * b + l1 * m2 * a + l2 * m1 * a + m1 * m2 * c)
    b2 = ua * (l1 * l1 * b - 2 * l1 * m1 * a - m1 * m1 * c)
    c2 = ua * (-l2 * l2 * b + 2 * l2 * m2 * a + m2 * m2 * c)
    d2 = (
        -l1 * l1 * l2 * e
        + l1 * l1 * m2 * d
        + 2 * l1 * l2 * m1 * d
        - 2 * l1 * m1 * m2 * g
        - l2 * m1 * m1 * g
        + m1 * m1 * m2 * f
    ) / det
    e2 = (l1**3 * e - 3 * l1 * l1 * m1 * d + 3 * l1 * m1 * m1 * g - m1**3 * f) / det
    f2 = (-(l2**3) * e + 3 * l2 * l2 * m2 * d - 3 * l2 * m2 * m2 * g + m2**3 * f) / det
    g2 = (
        l1 * l2 * l2 * e
        - 2 * l1 * l2 * m2 * d
        + l1 * m2 * m2 * g
        - l2 * l2 * m1 * d
        + 2 * l2 * m1 * m2 * g
        - m1 * m2 * m2 * f
    ) / det
    h2 = (det / u) * h
    return CoverParams(a2, b2, c2, d2, e2, f2, g2, h2)


def induced_module_map(bc: BasisChange) -> Matrix:
    """The rank-6 change of basis: fixes the unit, scales t by u, and acts
    by C simultaneously on the (v1, v2) and (w1, w2) blocks.

    Column k holds the old coordinates of the k-th new basis vector, so
    the v-block is C transposed (new vectors are the rows of C).
    """
    (l1, m1), (l2, m2) = bc.c
    return linalg.from_rows(
        [
            [1, 0, 0, 0, 0, 0],
            [0, bc.u, 0, 0, 0, 0],
            [0, 0, l1, l2, 0, 0],
            [0, 0, m1, m2, 0, 0],
            [0, 0, 0, 0, l1, l2],
            [0, 0, 0, 0, m1, m2],
        ]
    )
