"""Sparse exact row reduction over the rationals.

Rows are dicts ``column -> Fraction``; columns are any hashable keys with
a total order supplied by ``key``.  Used for ideal-membership tests and for
the Schur-expansion solver.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable


class SparseEchelon:
    """Incrementally built echelon basis of a row space.

    Each stored row has a pivot (its largest column under ``key``) with
    coefficient 1, and no other stored row shares that pivot.
    """

    def __init__(self, key: Callable[[Hashable], object] | None = None):
        self._key = key or (lambda c: c)
        self.pivots: dict = {}

    def __len__(self):
        return len(self.pivots)

    def _lead(self, row: dict):
        return max(row, key=self._key)

    def reduce(self, row: dict) -> dict:
        """Return ``row`` reduced modulo the stored span (a new dict)."""
        r = {c: Fraction(v) for c, v in row.items() if v}
        done = {}
        while r:
            lead = self._lead(r)
            coef = r.pop(lead)
            prow = self.pivots.get(lead)
            if prow is None:
                done[lead] = coef
                continue
            for c, v in prow.items():
                if c == lead:
                    continue
                s = r.get(c, 0) - coef * v
                if s:
                    r[c] = s
                else:
                    r.pop(c, None)
        return done

    def add(self, row: dict) -> bool:
        """Insert a row; return True iff it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        lead = self._lead(r)
        inv = 1 / r[lead]
        self.pivots[lead] = {c: v * inv for c, v in r.items()}
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def solve_exact(columns: list, rhs: dict, key=None):
    """Solve ``sum_j x_j * columns[j] = rhs`` exactly.

    ``columns`` are sparse dicts.  Returns ``(solution, residual)`` where
    ``solution`` maps column index to Fraction and ``residual`` is what is
    left of ``rhs`` outside the column span (empty iff solvable).
    """
    # augment each column with a unit coordinate to track combinations
    aug_rows = []
    for j, col in enumerate(columns):
        row = dict(col)
        row[("__x", j)] = Fraction(1)
        aug_rows.append(row)
    # eliminate on the original coordinates only; the tracking coordinates
    # sort below every real coordinate
    def k2(c):
        if isinstance(c, tuple) and len(c) == 2 and c[0] == "__x":
            return (0, c[1])
        return (1, key(c) if key else c)

    ech = SparseEchelon(key=k2)
    for row in aug_rows:
        ech.add(row)
    r = ech.reduce(dict(rhs))
    residual = {c: v for c, v in r.items() if not (isinstance(c, tuple) and len(c) == 2 and c[0] == "__x")}
    # r = rhs - sum(coeffs * columns) restricted; tracking part gives -x
    solution = {c[1]: -v for c, v in r.items() if isinstance(c, tuple) and len(c) == 2 and c[0] == "__x"}
    return solution, residual
