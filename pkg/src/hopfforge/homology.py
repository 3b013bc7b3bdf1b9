"""Simplicial chain complexes, GF(2) Betti numbers, integral homology and
inclusion-induced maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .complex import SimplicialComplex, Simplex, euler_characteristic, is_subcomplex, simplex
from .errors import HopfForgeError, NotACycleError, NotASubcomplexError


@dataclass(frozen=True)
class HomologyProfile:
    ring: str
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...] = ()

    def euler(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))

    def to_dict(self) -> dict:
        out = {"ring": self.ring, "betti": list(self.betti)}
        if self.ring == "int":
            out["torsion"] = [list(t) for t in self.torsion]
        return out


class ChainComplex:
    """Face bases per dimension and sparse boundary columns of a complex."""

    def __init__(self, c: SimplicialComplex, check: bool = False):
        self.complex = c
        self.dim = c.dim
        self.bases: list[tuple[Simplex, ...]] = [c.faces(k) for k in range(c.dim + 1)]
        self._index: dict[int, dict[Simplex, int]] = {}
        self._cols: dict[int, list[list[int]]] = {}
        if check:
            self.check_boundary_squared()

    def size(self, k: int) -> int:
        return len(self.bases[k]) if 0 <= k <= self.dim else 0

    def index(self, k: int) -> dict[Simplex, int]:
        if k not in self._index:
            self._index[k] = {f: i for i, f in enumerate(self.bases[k])}
        return self._index[k]

    def boundary_columns(self, k: int) -> list[list[int]]:
        """Column ``j`` lists the (sorted) row indices of the faces of ``bases[k][j]``."""
        if k not in self._cols:
            if k <= 0 or k > self.dim:
                self._cols[k] = [[] for _ in range(self.size(k))]
            else:
                idx = self.index(k - 1)
                cols = []
                for f in self.bases[k]:
                    cols.append(sorted(idx[f[:i] + f[i + 1:]] for i in range(len(f))))
                self._cols[k] = cols
        return self._cols[k]

    def signed_boundary(self, k: int) -> list[dict[int, int]]:
        idx = self.index(k - 1)
        out = []
        for f in self.bases[k]:
            out.append({idx[f[:i] + f[i + 1:]]: (-1) ** i for i in range(len(f))})
        return out

    def check_boundary_squared(self) -> None:
        for k in range(2, self.dim + 1):
            low = self.signed_boundary(k - 1)
            for col in self.signed_boundary(k):
                acc: dict[int, int] = {}
                for r, a in col.items():
                    for r2, b in low[r].items():
                        acc[r2] = acc.get(r2, 0) + a * b
                if any(acc.values()):
                    raise HopfForgeError("boundary of boundary is non-zero")

    def gf2_ranks(self) -> list[int]:
        """``ranks[k]`` = GF(2) rank of the boundary map from dim ``k`` to ``k-1``.

        Dimensions are reduced top-down; pivot rows found in dimension ``k+1``
        mark columns of dimension ``k`` that are known to reduce to zero.
        """
        ranks = [0] * (self.dim + 2)
        cleared = None
        for k in range(self.dim, 0, -1):
            lows = kernels.gf2_reduce(self.boundary_columns(k), self.size(k - 1), cleared)
            pivots = lows[lows >= 0]
            ranks[k] = int(pivots.size)
            mask = np.zeros(self.size(k - 1), dtype=np.uint8)
            mask[pivots] = 1
            cleared = mask
        return ranks


def betti_gf2(c: SimplicialComplex) -> HomologyProfile:
    if not c.facets:
        return HomologyProfile("gf2", ())
    cc = ChainComplex(c)
    ranks = cc.gf2_ranks()
    betti = tuple(cc.size(k) - ranks[k] - ranks[k + 1] for k in range(c.dim + 1))
    prof = HomologyProfile("gf2", betti)
    if prof.euler() != euler_characteristic(c):
        raise HopfForgeError("Betti numbers disagree with the Euler characteristic")
    return prof


# -- integral homology --------------------------------------------------------


def _dense_snf_divisors(rows: list[dict[int, int]], ncols: int) -> list[int]:
    """Non-zero invariant factors of a small dense integer matrix."""
    cols = sorted({c for r in rows for c in r})
    cmap = {c: i for i, c in enumerate(cols)}
    a = [[0] * len(cols) for _ in rows]
    for i, r in enumerate(rows):
        for c, v in r.items():
            a[i][cmap[c]] = v
    a = [r for r in a if any(r)]
    m, n = len(a), len(cols)
    divisors = []
    t = 0
    while t < min(m, n):
        # choose the smallest non-zero entry as pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        done = False
        while not done:
            done = True
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        done = False
                        break
            if not done:
                continue
            p = a[t][t]
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for r in a:
                        r[j] -= q * r[t]
                    if a[t][j]:
                        for r in a:
                            r[t], r[j] = r[j], r[t]
                        done = False
                        break
            if not done:
                continue
            # pivot must divide the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None)
            if bad is not None:
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                done = False
        divisors.append(abs(a[t][t]))
        t += 1
    return divisors


def integer_invariant_factors(columns: Sequence[dict[int, int]]) -> list[int]:
    """Invariant factors of a sparse integer matrix given by columns.

    Unit pivots are eliminated sparsely (each costs no fill-in beyond the
    pivot row); whatever is left is handed to a dense Smith normal form.
    """
    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for j, col in enumerate(columns):
        for r, v in col.items():
            if v:
                rows.setdefault(r, {})[j] = v
                col_rows.setdefault(j, set()).add(r)
    units = 0
    changed = True
    while changed:
        changed = False
        for j in sorted(col_rows, key=lambda c: (len(col_rows[c]), c)):
            rs = col_rows.get(j)
            if not rs:
                col_rows.pop(j, None)
                continue
            cand = [r for r in rs if abs(rows[r][j]) == 1]
            if not cand:
                continue
            r = min(cand, key=lambda x: (len(rows[x]), x))
            prow = rows.pop(r)
            u = prow[j]
            for r2 in list(rs):
                if r2 == r:
                    continue
                row2 = rows[r2]
                f = row2[j] * u
                for c, v in prow.items():
                    nv = row2.get(c, 0) - f * v
                    if nv:
                        if c not in row2:
                            col_rows[c].add(r2)
                        row2[c] = nv
                    else:
                        if c in row2:
                            del row2[c]
                            col_rows[c].discard(r2)
                if not row2:
                    del rows[r2]
            for c in prow:
                if c != j:
                    col_rows[c].discard(r)
            del col_rows[j]
            units += 1
            changed = True
        for j in [c for c, rs in col_rows.items() if not rs]:
            del col_rows[j]
    rest = _dense_snf_divisors([r for r in rows.values() if r], len(columns)) if rows else []
    return [1] * units + rest


def homology_integral(c: SimplicialComplex) -> HomologyProfile:
    if not c.facets:
        return HomologyProfile("int", (), ())
    cc = ChainComplex(c)
    factors: list[list[int]] = [[] for _ in range(c.dim + 2)]
    for k in range(1, c.dim + 1):
        factors[k] = integer_invariant_factors(cc.signed_boundary(k))
    betti = []
    torsion = []
    for k in range(c.dim + 1):
        betti.append(cc.size(k) - len(factors[k]) - len(factors[k + 1]))
        torsion.append(tuple(sorted(d for d in factors[k + 1] if d > 1)))
    prof = HomologyProfile("int", tuple(betti), tuple(torsion))
    if prof.euler() != euler_characteristic(c):
        raise HopfForgeError("integral Betti numbers disagree with the Euler characteristic")
    return prof


def rational_betti(c: SimplicialComplex) -> tuple[int, ...]:
    return homology_integral(c).betti


# -- cycles and inclusion maps -------------------------------------------------


def _xor_insert(basis: dict[int, int], v: int) -> bool:
    while v:
        h = v.bit_length() - 1
        b = basis.get(h)
        if b is None:
            basis[h] = v
            return True
        v ^= b
    return False


def _reduce(basis: dict[int, int], v: int) -> int:
    while v:
        b = basis.get(v.bit_length() - 1)
        if b is None:
            return v
        v ^= b
    return 0


def _chain_bits(cc: ChainComplex, k: int, chain: Iterable[Iterable[int]]) -> int:
    idx = cc.index(k)
    v = 0
    for s in chain:
        s = simplex(s)
        if s not in idx:
            raise NotACycleError(f"{s} is not a {k}-face of the complex")
        v ^= 1 << idx[s]
    return v


def _boundary_bits(cc: ChainComplex, k: int, v: int) -> int:
    cols = cc.boundary_columns(k)
    out = 0
    while v:
        low = v & -v
        for r in cols[low.bit_length() - 1]:
            out ^= 1 << r
        v ^= low
    return out


def _boundary_basis(cc: ChainComplex, k: int) -> dict[int, int]:
    """XOR basis of the GF(2) boundary space in dimension ``k``."""
    basis: dict[int, int] = {}
    if k + 1 <= cc.dim:
        for col in cc.boundary_columns(k + 1):
            v = 0
            for r in col:
                v |= 1 << r
            _xor_insert(basis, v)
    return basis


def cycle_basis(c: SimplicialComplex, k: int) -> list[list[Simplex]]:
    """GF(2) basis of the ``k``-cycles, deterministic in the face order."""
    from .exact.gf2 import GF2Matrix, gf2_nullspace

    cc = ChainComplex(c)
    if k < 0 or k > cc.dim:
        return []
    if k == 0:
        return [[f] for f in cc.bases[0]]
    cols = cc.boundary_columns(k)
    rows = [0] * cc.size(k - 1)
    for j, col in enumerate(cols):
        for r in col:
            rows[r] |= 1 << j
    out = []
    for v in gf2_nullspace(GF2Matrix(rows, cc.size(k))):
        out.append([cc.bases[k][j] for j in range(cc.size(k)) if (v >> j) & 1])
    return out


def is_null_homologous(c: SimplicialComplex, z: Iterable[Iterable[int]], k: int | None = None) -> bool:
    z = [simplex(s) for s in z]
    if not z:
        return True
    if k is None:
        k = len(z[0]) - 1
    cc = ChainComplex(c)
    v = _chain_bits(cc, k, z)
    if k > 0 and _boundary_bits(cc, k, v):
        raise NotACycleError("chain has non-zero boundary")
    if k == 0 and bin(v).count("1") % 2:
        # in unreduced homology a single point is never a boundary
        return False
    return _reduce(_boundary_basis(cc, k), v) == 0


def induced_map_injective(a: SimplicialComplex, c: SimplicialComplex, k: int) -> bool:
    """Is ``H_k(A; GF(2)) -> H_k(C; GF(2))`` injective for the inclusion A in C?"""
    if not is_subcomplex(a, c):
        raise NotASubcomplexError("A is not a subcomplex of C")
    if not a.facets or k > a.dim:
        return True
    cc = ChainComplex(c)
    idx_c = cc.index(k)
    bdry = _boundary_basis(cc, k)
    b_dim = len(bdry)
    span = dict(bdry)
    cycles = cycle_basis(a, k)
    for z in cycles:
        v = 0
        for s in z:
            v ^= 1 << idx_c[s]
        _xor_insert(span, v)
    image_rank = len(span) - b_dim
    return image_rank == betti_gf2(a).betti[k]


def nontrivial_gf2_cocycle(c: SimplicialComplex) -> dict[Simplex, int] | None:
    """An edge 1-cocycle over GF(2) that is not a coboundary, if H^1 is non-zero."""
    from .exact.gf2 import GF2Matrix, gf2_nullspace

    cc = ChainComplex(c)
    if cc.dim < 1:
        return None
    edges = cc.bases[1]
    ne = len(edges)
    # cocycle condition: for each triangle, sum of its edge values is zero
    rows = []
    for col in cc.boundary_columns(2) if cc.dim >= 2 else []:
        r = 0
        for e in col:
            r |= 1 << e
        rows.append(r)
    cocycles = gf2_nullspace(GF2Matrix(rows, ne)) if rows else [1 << j for j in range(ne)]
    cob: dict[int, int] = {}
    for col_vertex in range(cc.size(0)):
        v = 0
        vert = cc.bases[0][col_vertex][0]
        for j, e in enumerate(edges):
            if vert in e:
                v |= 1 << j
        _xor_insert(cob, v)
    for w in cocycles:
        if _reduce(cob, w):
            return {edges[j]: (w >> j) & 1 for j in range(ne)}
    return None
