"""Elements of the rank-6 algebra A over the fixed basis [1, t, v1, v2, w1, w2].

``w1``/``w2`` are shorthand for the tau-images of ``v1``/``v2``.  The basis
order is global: every matrix, multiplication table and JSON document in
this package indexes against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import rational

BASIS = ("1", "t", "v1", "v2", "w1", "w2")
DIM = 6

# basis positions, for readability at call sites
ONE_IDX, T_IDX, V1_IDX, V2_IDX, W1_IDX, W2_IDX = range(6)

_ZEROS = (Fraction(0),) * 6


@dataclass(frozen=True)
class AlgebraElement:
    """Immutable coefficient vector over [1, t, v1, v2, w1, w2]."""

    coords: tuple[Fraction, Fraction, Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        if len(self.coords) != DIM:
            raise ValueError(f"expected {DIM} coordinates, got {len(self.coords)}")

    @staticmethod
    def from_coords(coords: Iterable[object]) -> "AlgebraElement":
        return AlgebraElement(tuple(Fraction(c) for c in coords))  # type: ignore[arg-type]

    @staticmethod
    def zero() -> "AlgebraElement":
        return AlgebraElement(_ZEROS)

    @staticmethod
    def unit() -> "AlgebraElement":
        return AlgebraElement.basis(ONE_IDX)

    @staticmethod
    def basis(k: int) -> "AlgebraElement":
        coords = list(_ZEROS)
        coords[k] = Fraction(1)
        return AlgebraElement(tuple(coords))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(tuple(-a for a in self.coords))

    def scale(self, c: Fraction) -> "AlgebraElement":
        return AlgebraElement(tuple(c * a for a in self.coords))

    def __rmul__(self, c: object) -> "AlgebraElement":
        if isinstance(c, (int, Fraction)):
            return self.scale(Fraction(c))
        return NotImplemented

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __str__(self) -> str:
        terms = []
        for c, name in zip(self.coords, BASIS):
            if c == 0:
                continue
            terms.append(f"{c}" if name == "1" else f"{c}*{name}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> list[int | str]:
        return [rational.to_json(c) for c in self.coords]

    @staticmethod
    def from_json(obj: Sequence[object]) -> "AlgebraElement":
        if not isinstance(obj, (list, tuple)) or len(obj) != DIM:
            raise ValueError(f"expected a list of {DIM} rationals, got {obj!r}")
        return AlgebraElement(tuple(rational.from_json(c) for c in obj))
