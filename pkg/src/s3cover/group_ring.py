"""The symmetric group S3 and its rational group ring.

The presentation is fixed once and for all: sigma^3 = tau^2 = e and
tau*sigma = sigma^2*tau, with every element written in the normal form
sigma^i tau^j (i in 0..2, j in 0..1).  Group ring elements are dense
length-6 coefficient vectors; multiplication is convolution through the
Cayley table.  :func:`constants` returns the distinguished idempotents
and the rank-4 block basis used by the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

ELEMENT_NAMES = ("e", "s", "s2", "t", "st", "s2t")


@dataclass(frozen=True, order=True)
class GroupElement:
    """Normal form sigma^i tau^j."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not (0 <= self.i <= 2 and 0 <= self.j <= 1):
            raise ValueError(f"exponents out of range: ({self.i}, {self.j})")

    @property
    def index(self) -> int:
        return self.i + 3 * self.j

    @property
    def name(self) -> str:
        return ELEMENT_NAMES[self.index]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return group_mul(self, other)

    @staticmethod
    def from_name(name: str) -> "GroupElement":
        try:
            idx = ELEMENT_NAMES.index(name)
        except ValueError:
            raise ValueError(f"unknown group element name: {name!r}") from None
        return ELEMENTS[idx]


def group_mul(g: GroupElement, h: GroupElement) -> GroupElement:
    # tau * sigma^k = sigma^(-k) * tau, so sigma^i tau^j sigma^k tau^l
    # = sigma^(i + (-1)^j k) tau^(j+l)
    i = (g.i + (h.i if g.j == 0 else -h.i)) % 3
    return GroupElement(i, (g.j + h.j) % 2)


ELEMENTS: tuple[GroupElement, ...] = tuple(
    GroupElement(i, j) for j in (0, 1) for i in (0, 1, 2)
)
E, S, S2, T, ST, S2T = ELEMENTS

_ZERO6 = (Fraction(0),) * 6


@dataclass(frozen=True)
class GroupRingElement:
    """Dense rational coefficient vector indexed by ELEMENTS."""

    coeffs: tuple[Fraction, Fraction, Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 6:
            raise ValueError("group ring element needs 6 coefficients")

    @staticmethod
    def zero() -> "GroupRingElement":
        return GroupRingElement(_ZERO6)

    @staticmethod
    def of(g: GroupElement) -> "GroupRingElement":
        coeffs = list(_ZERO6)
        coeffs[g.index] = Fraction(1)
        return GroupRingElement(tuple(coeffs))

    @staticmethod
    def from_coeffs(coeffs: Iterable[object]) -> "GroupRingElement":
        return GroupRingElement(tuple(Fraction(c) for c in coeffs))  # type: ignore[arg-type]

    def coeff(self, g: GroupElement) -> Fraction:
        return self.coeffs[g.index]

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(tuple(-a for a in self.coeffs))

    def scale(self, c: Fraction) -> "GroupRingElement":
        return GroupRingElement(tuple(c * a for a in self.coeffs))

    def __rmul__(self, c: object) -> "GroupRingElement":
        if isinstance(c, (int, Fraction)):
            return self.scale(Fraction(c))
        return NotImplemented

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        return ring_mul(self, other)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)


def ring_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """Bilinear convolution extension of the group law."""
    out = [Fraction(0)] * 6
    for g in ELEMENTS:
        a = x.coeffs[g.index]
        if a == 0:
            continue
        for h in ELEMENTS:
            b = y.coeffs[h.index]
            if b == 0:
                continue
            out[group_mul(g, h).index] += a * b
    return GroupRingElement(tuple(out))


def _span(*pairs: tuple[object, GroupElement]) -> GroupRingElement:
    coeffs = [Fraction(0)] * 6
    for c, g in pairs:
        coeffs[g.index] += Fraction(c)  # type: ignore[arg-type]
    return GroupRingElement(tuple(coeffs))


@lru_cache(maxsize=1)
def constants() -> dict[str, GroupRingElement]:
    """The distinguished group ring elements.

    e1, e2, e3 are the central idempotents splitting the ring into its
    isotypic blocks; e31, e32 split the rank-4 block (non-centrally);
    u11..u22 form a basis of that block; sgn is the sign element.
    """
    sixth = Fraction(1, 6)
    third = Fraction(1, 3)
    e1 = _span((1, E), (1, S), (1, S2), (1, T), (1, ST), (1, S2T)).scale(sixth)
    e2 = _span((1, E), (1, S), (1, S2), (-1, T), (-1, ST), (-1, S2T)).scale(sixth)
    e3 = _span((2, E), (-1, S), (-1, S2)).scale(third)
    e31 = _span((1, E), (-1, S), (1, ST), (-1, S2T)).scale(third)
    e32 = _span((1, E), (-1, S2), (-1, ST), (1, S2T)).scale(third)
    u11 = _span((-1, E), (1, S), (1, T), (-1, S2T))
    u12 = _span((-1, S), (1, S2), (-1, T), (1, ST))
    u21 = _span((-1, E), (1, S2), (1, T), (-1, ST))
    u22 = _span((1, E), (-1, S), (1, ST), (-1, S2T))
    sgn = _span((1, E), (1, S), (1, S2), (-1, T), (-1, ST), (-1, S2T))
    return {
        "e1": e1,
        "e2": e2,
        "e3": e3,
        "e31": e31,
        "e32": e32,
        "u11": u11,
        "u12": u12,
        "u21": u21,
        "u22": u22,
        "sgn": sgn,
    }


def is_central(x: GroupRingElement) -> bool:
    """True iff x commutes with all six group elements."""
    for g in ELEMENTS:
        gr = GroupRingElement.of(g)
        if ring_mul(x, gr) != ring_mul(gr, x):
            return False
    return True
