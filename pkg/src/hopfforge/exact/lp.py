"""Exact rational LP feasibility and strict linear separation."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def phase_one(a: Sequence[Sequence], b: Sequence) -> tuple[bool, list[Fraction], list[Fraction]]:
    """Decide feasibility of ``A x = b, x >= 0`` by the phase-one simplex.

    Bland's rule is used for entering and leaving variables, so the method
    terminates.  Returns ``(feasible, x, y)``; ``y`` are the final simplex
    multipliers, which form a Farkas certificate (``y A <= 0``, ``y b > 0``)
    when the system is infeasible.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    rows = []
    signs = []
    for i in range(m):
        s = -1 if Fraction(b[i]) < 0 else 1
        signs.append(s)
        rows.append([Fraction(s * x) for x in a[i]] + [Fraction(int(i == j)) for j in range(m)]
                    + [Fraction(s * b[i])])
    total = n + m
    basis = [n + i for i in range(m)]
    # reduced costs of the auxiliary objective sum(artificials)
    cost = [Fraction(0)] * (total + 1)
    for r in rows:
        for j in range(n):
            cost[j] -= r[j]
        cost[total] -= r[total]
    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        best, leave = None, None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[total] / r[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # cannot happen: the auxiliary problem is bounded below
            raise ArithmeticError("unbounded phase-one problem")
        prow = rows[leave]
        p = prow[enter]
        if p != 1:
            prow[:] = [x / p for x in prow]
        for i, r in enumerate(rows):
            if i != leave and r[enter] != 0:
                f = r[enter]
                rows[i] = [x - f * y for x, y in zip(r, prow)]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, prow)]
        basis[leave] = enter
    value = -cost[total]
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][total]
    # multipliers: reduced cost of artificial i is 1 - y_i' in the sign-normalized system
    y = [(1 - cost[n + i]) * signs[i] for i in range(m)]
    return value == 0, x, y


def strict_separation_feasible(inside: Sequence[Sequence], outside: Sequence[Sequence],
                               with_witness: bool = False):
    """Is there ``(a, c)`` with ``a.v > c`` on ``inside`` and ``a.v < c`` on ``outside``?

    Decided on the normalized form ``a.v >= c + 1`` / ``a.v <= c - 1`` via its
    Farkas alternative: separation fails iff some convex combination of the
    rows ``(v, -1)`` (inside) and ``(-v, 1)`` (outside) vanishes.
    """
    pts = [tuple(Fraction(x) for x in v) for v in list(inside) + list(outside)]
    if not pts:
        return (True, ([], Fraction(0))) if with_witness else True
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of different dimensions")
    k = len(inside)
    gens = [p + (Fraction(-1),) for p in pts[:k]] + [tuple(-x for x in p) + (Fraction(1),) for p in pts[k:]]
    # A lam = (0,...,0,1): columns are the g_j, plus a row of ones
    a = [[g[r] for g in gens] for r in range(d + 1)] + [[Fraction(1)] * len(gens)]
    rhs = [Fraction(0)] * (d + 1) + [Fraction(1)]
    feasible, _, y = phase_one(a, rhs)
    if feasible:
        return (False, None) if with_witness else False
    # y.A <= 0 and y.rhs = y_last > 0 give g_j . (-y[:d+1]) >= y_last for all j
    scale = y[-1]
    w = [-t / scale for t in y[: d + 1]]
    normal, offset = w[:d], w[d]
    for g in gens:
        if sum(gi * wi for gi, wi in zip(g, w)) < 1:
            raise ArithmeticError("separation witness failed exact verification")
    return (True, (normal, offset)) if with_witness else True
