"""Exact two-phase simplex over the rationals.

Problems are given in standard form: minimise ``c.x`` subject to ``A x = b``
and ``x >= 0``.  Bland's rule is used throughout so the method terminates on
degenerate problems; all arithmetic is in :class:`fractions.Fraction`.
The instances arising here have a few dozen variables at most.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
OPTIMAL = "optimal"


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows
        self.basis = basis

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        piv = row[c]
        if piv != 1:
            row[:] = [v / piv for v in row]
        for i, other in enumerate(self.rows):
            if i != r and other[c] != 0:
                f = other[c]
                other[:] = [x - f * y for x, y in zip(other, row)]
        self.basis[r] = c

    def optimise(self, obj: list[Fraction], allowed: int) -> bool:
        """Minimise; ``obj`` is the reduced-cost row (last entry = -value).

        Returns False when unbounded.
        """
        while True:
            col = next((j for j in range(allowed) if obj[j] < 0), None)
            if col is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                if row[col] > 0:
                    ratio = row[-1] / row[col]
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            r = best[1]
            self.pivot(r, col)
            f = obj[col]
            row = self.rows[r]
            obj[:] = [x - f * y for x, y in zip(obj, row)]


def solve(A: Sequence[Sequence], b: Sequence, c: Optional[Sequence] = None):
    """Minimise ``c.x`` s.t. ``A x = b, x >= 0``.

    Returns ``(status, value, x)``; ``value`` and ``x`` are ``None`` unless the
    status is ``OPTIMAL``.  With ``c`` omitted this is a pure feasibility test
    and the value is 0.
    """
    n = len(A[0]) if A else 0
    m = len(A)
    if c is None:
        c = [0] * n
    rows = []
    for i in range(m):
        coeffs = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            coeffs = [-v for v in coeffs]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(coeffs + art + [rhs])
    tab = _Tableau(rows, [n + i for i in range(m)])

    # phase one: minimise the sum of artificials
    obj = [Fraction(0)] * (n + m + 1)
    for row in rows:
        for j in range(n):
            obj[j] -= row[j]
        obj[-1] -= row[-1]
    tab.optimise(obj, n + m)
    if obj[-1] != 0:
        return INFEASIBLE, None, None

    # drive remaining artificials out of the basis; drop redundant rows
    keep = []
    for i, bv in enumerate(tab.basis):
        if bv >= n:
            col = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if col is None:
                continue
            tab.pivot(i, col)
        keep.append(i)
    tab.rows = [tab.rows[i] for i in keep]
    tab.basis = [tab.basis[i] for i in keep]
    for row in tab.rows:
        row[n:n + m] = [Fraction(0)] * m

    obj = [Fraction(v) for v in c] + [Fraction(0)] * m + [Fraction(0)]
    for i, bv in enumerate(tab.basis):
        f = obj[bv]
        if f != 0:
            row = tab.rows[i]
            obj[:] = [x - f * y for x, y in zip(obj, row)]
    if not tab.optimise(obj, n):
        return UNBOUNDED, None, None
    x = [Fraction(0)] * n
    for i, bv in enumerate(tab.basis):
        x[bv] = tab.rows[i][-1]
    return OPTIMAL, -obj[-1], x


def feasible(A: Sequence[Sequence], b: Sequence) -> bool:
    return solve(A, b)[0] == OPTIMAL


def minimise(A: Sequence[Sequence], b: Sequence, c: Sequence) -> Optional[Fraction]:
    """Optimal value, or ``None`` when infeasible.  Unboundedness is an error."""
    status, value, _ = solve(A, b, c)
    if status == INFEASIBLE:
        return None
    if status == UNBOUNDED:
        raise ArithmeticError("linear program is unbounded")
    return value
