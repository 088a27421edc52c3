"""The 15x5 ramification matrix and its exact 5x5 minors.

Rows are the gradients of the fifteen quadratic relations
X_i*X_j - (table entry), one per unordered pair of non-unit basis
vectors, with respect to (t, v1, v2, w1, w2); entries are degree-<=1
algebra elements.  The matrix is built twice -- once from the hand-written
row formulas, once as the symbolic Jacobian of the relations -- and the
two must agree entry by entry or construction aborts.

Minors are determinants over the commutative ring A itself: cofactor
expansion with every product reduced to normal form through the
multiplication table.  Division is never used (A has zero divisors in
general).  All C(15,5) = 3003 minors share sub-determinants through a
column-prefix Laplace expansion, so the full sweep stays desk-scale.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import CoverParams, MultiplicationTable, build_cover, multiply
from .elements import AlgebraElement

N_ROWS = 15
N_COLS = 5

# unordered pairs of non-unit basis indices (1=t .. 5=w2), in row order
_RELATION_PAIRS: tuple[tuple[int, int], ...] = (
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 2),
    (2, 3),
    (3, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 4),
    (4, 5),
    (5, 5),
)


@dataclass(frozen=True)
class RamificationMatrix:
    rows: tuple[tuple[AlgebraElement, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != N_ROWS or any(len(r) != N_COLS for r in self.rows):
            raise ValueError("ramification matrix must be 15x5")

    def entry(self, row: int, col: int) -> AlgebraElement:
        """1-based row, 1-based column."""
        return self.rows[row - 1][col - 1]


def _el(one=0, t=0, v1=0, v2=0, w1=0, w2=0) -> AlgebraElement:
    return AlgebraElement.from_coords((one, t, v1, v2, w1, w2))


def _verbatim_rows(p: CoverParams) -> tuple[tuple[AlgebraElement, ...], ...]:
    a, b, c, d, e, f, g, h = p.astuple()
    z = _el()
    return (
        (_el(t=2), z, z, z, z),
        (_el(v1=1), _el(one=-a, t=1), _el(one=-b), _el(one=2 * a), _el(one=2 * b)),
        (_el(v2=1), _el(one=-c), _el(one=a, t=1), _el(one=2 * c), _el(one=-2 * a)),
        (_el(w1=1), _el(one=-2 * a), _el(one=-2 * b), _el(one=a, t=1), _el(one=b)),
        (_el(w2=1), _el(one=-2 * c), _el(one=2 * a), _el(one=c), _el(one=-a, t=1)),
        (z, _el(one=-d, v1=2), _el(one=-e), _el(one=2 * d), _el(one=2 * e)),
        (z, _el(one=g, v2=1), _el(one=d, v1=1), _el(one=-2 * g), _el(one=-2 * d)),
        (z, _el(one=-f), _el(one=-g, v2=2), _el(one=2 * f), _el(one=2 * g)),
        (z, _el(one=d, w1=1), _el(one=e), _el(one=d, v1=1), _el(one=e)),
        (
            _el(one=-h),
            _el(one=-g, w2=1),
            _el(one=-d),
            _el(one=-g),
            _el(one=-d, v1=1),
        ),
        (
            _el(one=h),
            _el(one=-g),
            _el(one=-d, w1=1),
            _el(one=-g, v2=1),
            _el(one=-d),
        ),
        (z, _el(one=f), _el(one=g, w2=1), _el(one=f), _el(one=g, v2=1)),
        (z, _el(one=2 * d), _el(one=2 * e), _el(one=-d, w1=2), _el(one=-e)),
        (z, _el(one=-2 * g), _el(one=-2 * d), _el(one=g, w2=1), _el(one=d, w1=1)),
        (z, _el(one=2 * f), _el(one=2 * g), _el(one=-f), _el(one=-g, w2=2)),
    )


def _jacobian_rows(
    table: MultiplicationTable,
) -> tuple[tuple[AlgebraElement, ...], ...]:
    """Gradient of each relation X_i X_j - table(i, j) wrt (t, v1, v2, w1, w2)."""
    rows = []
    for i, j in _RELATION_PAIRS:
        entry = table.entry(i, j)
        row = []
        for m in range(1, 6):
            grad = AlgebraElement.zero()
            if i == m:
                grad = grad + AlgebraElement.basis(j)
            if j == m:
                grad = grad + AlgebraElement.basis(i)
            # minus the linear part of the table entry in variable m
            grad = grad - entry.coords[m] * AlgebraElement.unit()
            row.append(grad)
        rows.append(tuple(row))
    return tuple(rows)


def build_matrix(p: CoverParams) -> RamificationMatrix:
    """Build the 15x5 matrix, cross-checking the hand-written rows against
    the symbolic Jacobian; any mismatch is a transcription bug."""
    verbatim = _verbatim_rows(p)
    jac = _jacobian_rows(build_cover(p))
    for r in range(N_ROWS):
        for c in range(N_COLS):
            if verbatim[r][c] != jac[r][c]:
                raise RuntimeError(
                    f"ramification matrix mismatch at row {r + 1}, column {c + 1}: "
                    f"verbatim {verbatim[r][c]} vs jacobian {jac[r][c]}"
                )
    return RamificationMatrix(verbatim)


def _validate_rows(rows: Sequence[int]) -> tuple[int, ...]:
    rows = tuple(rows)
    if len(rows) != N_COLS:
        raise ValueError(f"need exactly {N_COLS} row indices, got {len(rows)}")
    if len(set(rows)) != N_COLS:
        raise ValueError(f"row indices must be distinct: {rows}")
    for r in rows:
        if not 1 <= r <= N_ROWS:
            raise ValueError(f"row index out of range 1..{N_ROWS}: {r}")
    return rows


def det_cofactor(
    entries: Sequence[Sequence[AlgebraElement]], table: MultiplicationTable
) -> AlgebraElement:
    """Determinant over A by cofactor expansion along the first row."""
    n = len(entries)
    if n == 1:
        return entries[0][0]
    out = AlgebraElement.zero()
    for col in range(n):
        head = entries[0][col]
        if head.is_zero():
            continue
        sub = [
            [entries[r][c] for c in range(n) if c != col] for r in range(1, n)
        ]
        cof = multiply(head, det_cofactor(sub, table), table)
        out = out + cof if col % 2 == 0 else out - cof
    return out


def det_permutation(
    entries: Sequence[Sequence[AlgebraElement]], table: MultiplicationTable
) -> AlgebraElement:
    """Independent determinant oracle: signed sum over all permutations,
    products folded left to right through the table."""
    n = len(entries)
    out = AlgebraElement.zero()
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        prod = AlgebraElement.unit()
        for r, c in enumerate(perm):
            prod = multiply(prod, entries[r][c], table)
        out = out + prod if sign > 0 else out - prod
    return out


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def minor(p: CoverParams, rows: Sequence[int]) -> AlgebraElement:
    """The 5x5 minor on the given (1-based) row set, as a normal-form
    element of A."""
    rows = _validate_rows(rows)
    matrix = build_matrix(p)
    table = build_cover(p)
    entries = [[matrix.entry(r, c) for c in range(1, 6)] for r in rows]
    return det_cofactor(entries, table)


def _minors_shared(
    matrix: RamificationMatrix,
    table: MultiplicationTable,
    row_sets: Iterable[tuple[int, ...]],
) -> list[tuple[tuple[int, ...], AlgebraElement]]:
    """Laplace expansion over column prefixes with shared sub-determinants.

    level[S] holds the determinant of the submatrix with rows S (sorted,
    1-based) and the first len(S) columns.
    """
    wanted = sorted(set(row_sets))
    needed_rows = sorted({r for s in wanted for r in s})
    level: dict[tuple[int, ...], AlgebraElement] = {
        (r,): matrix.entry(r, 1) for r in needed_rows
    }
    for k in range(2, N_COLS + 1):
        nxt: dict[tuple[int, ...], AlgebraElement] = {}
        col_parity = k - 1
        for s in itertools.combinations(needed_rows, k):
            acc = AlgebraElement.zero()
            for idx, r in enumerate(s):
                entry = matrix.entry(r, k)
                sub = level[s[:idx] + s[idx + 1 :]]
                if entry.is_zero() or sub.is_zero():
                    continue
                term = multiply(entry, sub, table)
                acc = acc + term if (idx + col_parity) % 2 == 0 else acc - term
            nxt[s] = acc
        level = nxt
    return [(s, level[s]) for s in wanted]


def _scalar_normalize(x: AlgebraElement) -> tuple[Fraction, ...] | None:
    """Canonical representative of x up to nonzero scalar multiple."""
    lead = next((c for c in x.coords if c != 0), None)
    if lead is None:
        return None
    return tuple(c / lead for c in x.coords)


def all_minors(
    p: CoverParams,
    nonzero: bool = False,
    dedup: bool = False,
    jobs: int = 1,
) -> list[tuple[tuple[int, ...], AlgebraElement]]:
    """All C(15,5) minors in lexicographic row-set order.

    nonzero drops vanishing minors; dedup keeps one representative per
    scalar-multiple class (first in row-set order).  Results do not
    depend on the number of jobs.
    """
    matrix = build_matrix(p)
    table = build_cover(p)
    row_sets = list(itertools.combinations(range(1, N_ROWS + 1), N_COLS))
    if jobs <= 1:
        results = _minors_shared(matrix, table, row_sets)
    else:
        chunks = [row_sets[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                _minors_shared,
                itertools.repeat(matrix),
                itertools.repeat(table),
                chunks,
            )
            merged = [item for part in parts for item in part]
        merged.sort(key=lambda item: item[0])
        results = merged
    if nonzero:
        results = [(s, v) for s, v in results if not v.is_zero()]
    if dedup:
        seen: set[tuple[Fraction, ...]] = set()
        kept = []
        for s, v in results:
            key = _scalar_normalize(v)
            if key is None:
                kept.append((s, v))
                continue
            if key in seen:
                continue
            seen.add(key)
            kept.append((s, v))
        results = kept
    return results


def minors_to_json(
    results: Iterable[tuple[tuple[int, ...], AlgebraElement]]
) -> list[dict]:
    return [{"rows": list(rows), "value": value.to_json()} for rows, value in results]
