"""Exact rational simplex for the coalition-cover program behind core decisions.

The core of a TU game is nonempty exactly when the cheapest efficient way to
honor every proper coalition's claim costs no more than the grand coalition's
worth. That minimum is computed here through the dual program

    maximize   sum_S worth(S) * y_S
    subject to sum_{S containing i} y_S = 1   for every player i,
               y_S >= 0                        over proper nonempty S,

whose columns are coalition incidence vectors. The singleton coalitions form
a feasible identity basis, so no artificial variables are needed, and all
arithmetic stays in ``fractions.Fraction`` so tight cores are never
misclassified by rounding.
"""

from __future__ import annotations

from fractions import Fraction

_MAX_PIVOTS = 100_000


def minimal_coalition_cover(n: int, worth: dict[int, Fraction]) -> tuple[Fraction, list[Fraction]]:
    """Solve the program above with Bland's rule (revised simplex, exact).

    ``worth`` maps every proper nonempty coalition mask to its claim.
    Returns the optimal value and the simplex multipliers, which form the
    cheapest allocation satisfying every coalition claim.
    """
    if n < 2:
        raise ValueError("cover program needs at least two players")
    columns = sorted(worth)
    if len(columns) != (1 << n) - 2:
        raise ValueError("worth must cover every proper nonempty coalition")

    zero = Fraction(0)
    one = Fraction(1)
    binv = [[one if r == i else zero for i in range(n)] for r in range(n)]
    basis = [1 << r for r in range(n)]
    xb = [one] * n

    for _ in range(_MAX_PIVOTS):
        cb = [worth[m] for m in basis]
        prices = [sum(cb[r] * binv[r][i] for r in range(n)) for i in range(n)]

        entering = None
        for mask in columns:
            reduced = worth[mask]
            m = mask
            while m:
                low = m & -m
                reduced -= prices[low.bit_length() - 1]
                m ^= low
            if reduced > 0:
                entering = mask
                break  # Bland: first improving column in ascending mask order
        if entering is None:
            value = sum(cb[r] * xb[r] for r in range(n))
            return value, prices

        direction = []
        for r in range(n):
            d = zero
            m = entering
            while m:
                low = m & -m
                d += binv[r][low.bit_length() - 1]
                m ^= low
            direction.append(d)

        leave = None
        best_ratio = None
        for r in range(n):
            if direction[r] > 0:
                ratio = xb[r] / direction[r]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = r
        if leave is None:
            raise AssertionError("cover program cannot be unbounded: covers are capped at 1")

        pivot = direction[leave]
        binv[leave] = [v / pivot for v in binv[leave]]
        xb[leave] /= pivot
        for r in range(n):
            if r != leave and direction[r] != 0:
                d = direction[r]
                row_l = binv[leave]
                binv[r] = [binv[r][i] - d * row_l[i] for i in range(n)]
                xb[r] -= d * xb[leave]
        basis[leave] = entering

    raise AssertionError("simplex failed to terminate; Bland's rule should prevent this")
