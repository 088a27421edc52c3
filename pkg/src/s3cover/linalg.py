"""Small exact-matrix helpers over the rationals.

Matrices are tuples of row tuples of Fractions, column-image convention:
column k holds the image of basis vector k.  Everything here is exact;
rank is computed by Gaussian elimination over the field of fractions, so
there are no numerical rank issues.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


def from_rows(rows: Iterable[Sequence[object]]) -> Matrix:
    return tuple(tuple(Fraction(c) for c in row) for row in rows)  # type: ignore[arg-type]


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def zero(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple((Fraction(0),) * m for _ in range(n))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: Fraction, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    return tuple(
        tuple(sum((a[i][l] * b[l][j] for l in range(k)), Fraction(0)) for j in range(m))
        for i in range(n)
    )


def mat_vec(a: Matrix, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((row[j] * x[j] for j in range(len(x))), Fraction(0)) for row in a)


def mat_pow(a: Matrix, k: int) -> Matrix:
    out = identity(len(a))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def rank(a: Matrix) -> int:
    rows = [list(row) for row in a]
    n = len(rows)
    m = len(rows[0]) if n else 0
    r = 0
    for col in range(m):
        pivot = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == n:
            break
    return r


def det2(a: Sequence[Sequence[Fraction]]) -> Fraction:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def to_json(a: Matrix) -> list[list[int | str]]:
    from . import rational

    return [[rational.to_json(c) for c in row] for row in a]
