"""Exact sparse Gauss-Jordan elimination over the rationals.

Rows are dictionaries ``{column: coefficient}``; columns may be any
hashable keys. No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Sequence


class SparseSystem:
    """Incrementally row-reduced linear system ``A x = b``.

    ``order`` fixes the pivoting preference: a new row pivots on the first
    of its columns in that order. Columns missing from ``order`` come last.
    """

    def __init__(self, order: Sequence[Hashable] | None = None):
        self._pos = {c: i for i, c in enumerate(order)} if order is not None else None
        self.pivots: dict[Hashable, tuple[dict, Fraction]] = {}
        self.consistent = True

    def _key(self, c):
        if self._pos is None:
            return 0
        return self._pos.get(c, len(self._pos))

    def add(self, row: dict, rhs) -> bool:
        """Add one equation; return False if it contradicts earlier ones."""
        row = {c: Fraction(v) for c, v in row.items() if v}
        rhs = Fraction(rhs)
        for c in [c for c in row if c in self.pivots]:
            coef = row.get(c)
            if not coef:
                continue
            prow, prhs = self.pivots[c]
            for pc, pv in prow.items():
                nv = row.get(pc, 0) - coef * pv
                if nv:
                    row[pc] = nv
                else:
                    row.pop(pc, None)
            rhs -= coef * prhs
        if not row:
            if rhs:
                self.consistent = False
                return False
            return True
        if self._pos is None:
            pc = next(iter(row))
        else:
            pc = min(row, key=self._key)
        pv = row[pc]
        row = {c: v / pv for c, v in row.items()}
        rhs = rhs / pv
        # Jordan step: clear the new pivot column from the older rows.
        for c, (prow, prhs) in list(self.pivots.items()):
            coef = prow.get(pc)
            if coef:
                for rc, rv in row.items():
                    nv = prow.get(rc, 0) - coef * rv
                    if nv:
                        prow[rc] = nv
                    else:
                        prow.pop(rc, None)
                self.pivots[c] = (prow, prhs - coef * rhs)
        self.pivots[pc] = (row, rhs)
        return True

    def solution(self) -> dict | None:
        """One solution with every free variable set to zero."""
        if not self.consistent:
            return None
        return {c: rhs for c, (_, rhs) in self.pivots.items() if rhs}

    @property
    def rank(self) -> int:
        return len(self.pivots)


def solve(rows: Iterable[dict], rhs: Iterable, order: Sequence | None = None) -> dict | None:
    """Solve a sparse system; ``None`` if it is inconsistent."""
    system = SparseSystem(order)
    for row, b in zip(rows, rhs):
        if not system.add(row, b):
            return None
    return system.solution()


def span_coordinates(columns: Sequence[Sequence[int]], target: Sequence[int]) -> list[Fraction] | None:
    """Coefficients ``a`` with ``sum_j a[j] * columns[j] == target``, or ``None``.

    Columns are dense vectors of equal length. Zero coefficients are returned
    for any free column.
    """
    system = SparseSystem(range(len(columns)))
    for i, value in enumerate(target):
        row = {j: col[i] for j, col in enumerate(columns) if col[i]}
        if not system.add(row, value):
            return None
    sol = system.solution()
    return [sol.get(j, Fraction(0)) for j in range(len(columns))]


def matrix_rank(rows: Iterable[Sequence]) -> int:
    system = SparseSystem()
    for row in rows:
        system.add({j: v for j, v in enumerate(row) if v}, 0)
    return system.rank
