"""Cyclic, bi-cyclic and k-cyclic polytope boundaries."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np
from mpmath import iv

from ..complex import SimplicialComplex, Simplex
from ..errors import DegenerateHullError, MalformedInputError
from ..exact.interval import PRECISION_SCHEDULE, trig_point_iv, working_precision
from ..recognition import CERTIFIED, FAIL, CertStatus, is_closed_pseudomanifold
from ..symmetry import expand_orbits


def cyclic_polytope_boundary(n: int, d: int) -> SimplicialComplex:
    """Boundary of C(n, d) on vertices 0..n-1 by Gale's evenness condition."""
    if not n > d >= 2:
        raise MalformedInputError("need n > d >= 2")
    facets = []
    for s in combinations(range(n), d):
        ss = set(s)
        ok = True
        outside = [v for v in range(n) if v not in ss]
        for i, j in zip(outside, outside[1:]):
            if sum(1 for v in s if i < v < j) % 2:
                ok = False
                break
        if ok:
            facets.append(s)
    return SimplicialComplex(facets, modulus=n)


def bicyclic_hopf(m: int) -> tuple[SimplicialComplex, dict]:
    """Z_n-symmetric Hopf 3-sphere on ``n = m^2 + m + 1`` vertices.

    Returns the sphere and its pieces ``{"1": A1, "2": A2, "12": torus}``.
    """
    if m < 2:
        raise MalformedInputError("m must be at least 2")
    n = m * m + m + 1
    gens1 = [(0, 1, j, j + 1) for j in range(2, m + 1)]
    gens2 = [tuple(sorted((m * x) % n for x in g)) for g in gens1]
    a1 = SimplicialComplex(expand_orbits(gens1, n), modulus=n)
    a2 = SimplicialComplex(expand_orbits(gens2, n), modulus=n)
    torus = SimplicialComplex(expand_orbits([(0, 1, m + 1), (0, m, m + 1)], n), modulus=n)
    sphere = SimplicialComplex(list(a1.facets) + list(a2.facets), modulus=n)
    return sphere, {"1": a1, "2": a2, "12": torus}


@dataclass(frozen=True)
class KCyclicSpec:
    frequencies: tuple[int, ...]
    n: int

    def __post_init__(self):
        k = len(self.frequencies)
        if k < 1 or any(f <= 0 for f in self.frequencies):
            raise MalformedInputError("frequencies must be positive")
        if self.n < 2 * k + 1:
            raise MalformedInputError("need n >= 2k + 1")
        if len({f % self.n for f in self.frequencies}) != k:
            raise MalformedInputError("frequencies must be distinct mod n")

    @property
    def k(self) -> int:
        return len(self.frequencies)

    def float_points(self) -> np.ndarray:
        j = np.arange(self.n)[:, None]
        f = np.asarray(self.frequencies)[None, :]
        ang = 2 * np.pi * ((f * j) % self.n) / self.n
        pts = np.empty((self.n, 2 * self.k))
        pts[:, 0::2] = np.cos(ang)
        pts[:, 1::2] = np.sin(ang)
        return pts


def propose_facets(spec: KCyclicSpec) -> list[Simplex]:
    """Floating-point hull proposal (never trusted without certification)."""
    from scipy.spatial import ConvexHull

    hull = ConvexHull(spec.float_points())
    return sorted({tuple(sorted(int(v) for v in s)) for s in hull.simplices})


def _solve_iv(a: list[list], b: list):
    """Interval Gaussian elimination; ``None`` if a pivot cannot be separated from 0."""
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        best, mag = None, None
        for r in range(col, n):
            x = m[r][col]
            lo, hi = x.a, x.b
            if lo <= 0 <= hi:
                continue
            v = min(abs(lo), abs(hi))
            if mag is None or v > mag:
                best, mag = r, v
        if best is None:
            return None
        m[col], m[best] = m[best], m[col]
        p = m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / p
            for c in range(col, n + 1):
                m[r][c] = m[r][c] - f * m[col][c]
    x = [None] * n
    for r in range(n - 1, -1, -1):
        acc = m[r][n]
        for c in range(r + 1, n):
            acc = acc - m[r][c] * x[c]
        x[r] = acc / m[r][r]
    return x


def certify_facet(points_iv: list[list], facet: Simplex, others: Sequence[int]):
    """Sign pattern of the supporting hyperplane ``a.x = 1`` through ``facet``.

    Returns ``True`` when every other point is certified strictly inside,
    ``False`` when some point is certified outside, ``None`` if undecided.
    """
    a = _solve_iv([points_iv[v] for v in facet], [iv.mpf(1)] * len(facet))
    if a is None:
        return None
    undecided = False
    for q in others:
        val = sum((ai * qi for ai, qi in zip(a, points_iv[q])), iv.mpf(0)) - 1
        if val.b < 0:
            continue
        if val.a > 0:
            return False
        undecided = True
    return None if undecided else True


def k_cyclic_boundary(spec: KCyclicSpec, precision: int = 128,
                      schedule: Sequence[int] = PRECISION_SCHEDULE) -> tuple[SimplicialComplex, CertStatus]:
    """Boundary of kC(f_1..f_k; n): float proposal plus interval certification.

    Every proposed facet is checked with the interval hyperplane test at
    ``precision`` bits, escalating along ``schedule``.  The certified facet
    set must also form a closed pseudomanifold, which rules out missing facets.
    """
    proposal = propose_facets(spec)
    levels = [precision] + [b for b in schedule if b > precision]
    cache: dict[int, list] = {}

    def points(bits):
        if bits not in cache:
            with working_precision(bits):
                cache[bits] = [trig_point_iv(j, spec.n, spec.frequencies, bits) for j in range(spec.n)]
        return cache[bits]

    used = {}
    for f in proposal:
        others = [v for v in range(spec.n) if v not in f]
        verdict = None
        for bits in levels:
            with working_precision(bits):
                verdict = certify_facet(points(bits), f, others)
            if verdict is not None:
                used[bits] = used.get(bits, 0) + 1
                break
        if verdict is None:
            raise DegenerateHullError(f"cannot certify face {f} at {levels[-1]} bits")
        if verdict is False:
            return SimplicialComplex(proposal, modulus=spec.n), CertStatus(
                FAIL, {"reason": "proposed facet has points on both sides", "face": f})
    c = SimplicialComplex(proposal, modulus=spec.n)
    if not is_closed_pseudomanifold(c, 2 * spec.k - 1):
        return c, CertStatus(FAIL, {"reason": "certified facets do not close up"})
    return c, CertStatus(CERTIFIED, {"facets": len(proposal), "precision_used": used})
