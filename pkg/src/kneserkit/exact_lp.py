"""Exact convex-hull membership via a rational phase-one simplex."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction


def in_convex_hull(points: Sequence[Sequence[int]], target: Sequence[int]) -> list[Fraction] | None:
    """Convex weights expressing ``target`` from ``points``, or None.

    Solves ``sum_j w_j p_j = target``, ``sum_j w_j = 1``, ``w >= 0`` exactly
    with Bland's rule, so the answer never depends on a tolerance.
    """
    if not points:
        return None
    dim = len(target)
    k = len(points)
    rows = dim + 1
    # constraint matrix [p_j; 1] | rhs, plus one artificial per row
    a = [[Fraction(points[j][i]) for j in range(k)] for i in range(dim)]
    a.append([Fraction(1)] * k)
    b = [Fraction(x) for x in target] + [Fraction(1)]
    for i in range(rows):
        if b[i] < 0:
            a[i] = [-x for x in a[i]]
            b[i] = -b[i]
    ncols = k + rows
    tab = [a[i] + [Fraction(int(i == t)) for t in range(rows)] + [b[i]] for i in range(rows)]
    basis = [k + i for i in range(rows)]
    # reduced costs for minimizing the sum of artificials
    cost = [Fraction(0)] * (ncols + 1)
    for i in range(rows):
        for j in range(ncols + 1):
            cost[j] -= tab[i][j]
    for i in range(rows):
        cost[k + i] += 1

    while True:
        entering = next((j for j in range(ncols) if cost[j] < 0), None)
        if entering is None:
            break
        best_row, best_ratio = None, None
        for i in range(rows):
            coef = tab[i][entering]
            if coef > 0:
                ratio = tab[i][-1] / coef
                if best_ratio is None or ratio < best_ratio or (ratio == best_ratio and basis[i] < basis[best_row]):
                    best_row, best_ratio = i, ratio
        if best_row is None:  # pragma: no cover - phase one is bounded below by 0
            break
        piv = tab[best_row][entering]
        tab[best_row] = [x / piv for x in tab[best_row]]
        for i in range(rows):
            if i != best_row and tab[i][entering] != 0:
                f = tab[i][entering]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[best_row])]
        f = cost[entering]
        cost = [x - f * y for x, y in zip(cost, tab[best_row])]
        basis[best_row] = entering

    if -cost[-1] != 0:
        return None
    weights = [Fraction(0)] * k
    for i, var in enumerate(basis):
        if var < k:
            weights[var] = tab[i][-1]
    return weights
