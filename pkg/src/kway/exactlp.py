"""Exact rational LP feasibility via phase-1 simplex.

Solves: find x >= 0 with A x = b, all arithmetic in Fraction.  Bland's rule
guarantees termination.  Only feasibility is needed here, so no phase 2.
"""
from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def solve_feasibility(rows, rhs):
    """Return x (list of Fraction, x >= 0, A x = b) or None if infeasible.

    rows: list of m lists of Fractions (the matrix A, row-wise)
    rhs:  list of m Fractions (b)
    """
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])

    # Tableau: n structural columns, m artificial columns, 1 rhs column.
    tab = []
    for i in range(m):
        row = [Fraction(v) for v in rows[i]]
        b = Fraction(rhs[i])
        if b < 0:
            row = [-v for v in row]
            b = -b
        row.extend([ZERO] * m)
        row.append(b)
        tab.append(row)
    for i in range(m):
        tab[i][n + i] = ONE
    basis = list(range(n, n + m))

    # Reduced-cost row for minimizing the sum of artificials (cost 1 each,
    # structural cost 0); last entry is the negated objective value.
    obj = [ZERO] * (n + m + 1)
    for j in range(n + m + 1):
        obj[j] = -sum(tab[i][j] for i in range(m))
    for j in range(n, n + m):
        obj[j] += ONE

    while True:
        enter = next((j for j in range(n + m) if obj[j] < 0), None)
        if enter is None:
            break
        # Ratio test, Bland tie-break on the leaving basic variable index.
        leave = None
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise RuntimeError("phase-1 objective unbounded; malformed input")
        _pivot(tab, obj, leave, enter)
        basis[leave] = enter

    if -obj[-1] != 0:  # residual artificial mass
        return None
    x = [ZERO] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = tab[i][-1]
    return x


def _pivot(tab, obj, r, c):
    piv = tab[r][c]
    tab[r] = [v / piv for v in tab[r]]
    prow = tab[r]
    for i in range(len(tab)):
        if i != r and tab[i][c] != 0:
            f = tab[i][c]
            tab[i] = [v - f * p for v, p in zip(tab[i], prow)]
    if obj[c] != 0:
        f = obj[c]
        for j in range(len(obj)):
            obj[j] -= f * prow[j]
