"""Exact rational linear programming via two-phase simplex with Bland's rule.

Standard form: minimize c.x subject to A x = b, x >= 0, all entries Fraction.
Problem sizes here are tiny (tens of rows/columns), so a dense tableau is
plenty; Bland's rule guarantees termination without any tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _pivot(tableau: list[list[Fraction]], cost: list[Fraction],
           basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    inv = Fraction(1) / piv
    tableau[row] = [inv * v for v in tableau[row]]
    prow = tableau[row]
    for r in range(len(tableau)):
        if r == row:
            continue
        factor = tableau[r][col]
        if factor != 0:
            tableau[r] = [v - factor * p for v, p in zip(tableau[r], prow)]
    factor = cost[col]
    if factor != 0:
        for j in range(len(cost)):
            cost[j] -= factor * prow[j]
    basis[row] = col


def _bland_iterate(tableau: list[list[Fraction]], cost: list[Fraction],
                   basis: list[int], ncols: int) -> str:
    """Pivot until no entering column among the first ncols remains."""
    while True:
        col = next((j for j in range(ncols) if cost[j] < 0), None)
        if col is None:
            return FEASIBLE
        best_row = None
        best_ratio = None
        for r, vec in enumerate(tableau):
            a = vec[col]
            if a <= 0:
                continue
            ratio = vec[-1] / a
            if (best_ratio is None or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[best_row])):
                best_ratio = ratio
                best_row = r
        if best_row is None:
            return UNBOUNDED
        _pivot(tableau, cost, basis, best_row, col)


def solve_lp(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction],
             c: Sequence[Fraction]) -> tuple[str, list[Fraction] | None, Fraction | None]:
    """Solve min c.x, A x = b, x >= 0.  Returns (status, x, value)."""
    m = len(A)
    n = len(c)
    tableau = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tableau.append(row + art + [bi])
    basis = [n + i for i in range(m)]
    width = n + m

    # Phase 1: minimize the sum of artificials.
    cost1 = [Fraction(0)] * (width + 1)
    for j in range(n, width):
        cost1[j] = Fraction(1)
    for i in range(m):
        cost1 = [cj - ti for cj, ti in zip(cost1, tableau[i])]
    if _bland_iterate(tableau, cost1, basis, width) == UNBOUNDED:
        raise RuntimeError("phase-1 objective cannot be unbounded")
    if -cost1[-1] != 0:
        return INFEASIBLE, None, None

    # Drive artificials out of the basis where the row allows it; a fully
    # zero row is redundant and its artificial stays basic at zero.
    zero_cost = [Fraction(0)] * (width + 1)
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if tableau[r][j] != 0), None)
            if col is not None:
                _pivot(tableau, zero_cost, basis, r, col)

    # Phase 2 over the original columns only (artificials cannot re-enter).
    cost2 = [Fraction(v) for v in c] + [Fraction(0)] * (m + 1)
    for r, j in enumerate(basis):
        factor = cost2[j]
        if factor != 0:
            cost2 = [cj - factor * ti for cj, ti in zip(cost2, tableau[r])]
    if _bland_iterate(tableau, cost2, basis, n) == UNBOUNDED:
        return UNBOUNDED, None, None

    x = [Fraction(0)] * n
    for r, j in enumerate(basis):
        if j < n:
            x[j] = tableau[r][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return FEASIBLE, x, value


def feasible(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction], n: int) -> bool:
    """Phase-1 feasibility of A x = b, x >= 0 with n variables."""
    status, _, _ = solve_lp(A, b, [Fraction(0)] * n)
    return status == FEASIBLE
