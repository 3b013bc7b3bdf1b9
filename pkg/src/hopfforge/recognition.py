"""Manifold and sphere recognition: pseudomanifold tests, Dehn-Sommerville
residuals, bistellar-flip reduction, random discrete Morse functions and
collapses."""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .complex import SimplicialComplex, Simplex, cone, euler_characteristic, f_vector, link, simplex
from .homology import betti_gf2

CERTIFIED = "Certified"
HEURISTIC = "HeuristicPass"
FAIL = "Fail"
_RANK = {FAIL: 0, HEURISTIC: 1, CERTIFIED: 2}


@dataclass
class CertStatus:
    status: str
    evidence: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.status != FAIL

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED

    def to_dict(self) -> dict:
        return {"status": self.status, "evidence": _jsonable(self.evidence)}


def weakest(statuses: Iterable[CertStatus]) -> str:
    return min((s.status for s in statuses), key=_RANK.__getitem__, default=CERTIFIED)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, CertStatus):
        return x.to_dict()
    return x


@dataclass(frozen=True, order=True)
class MorseVector:
    counts: tuple[int, ...]

    def euler(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.counts))

    def __iter__(self):
        return iter(self.counts)


# -- pseudomanifolds ------------------------------------------------------------


def _ridge_counts(c: SimplicialComplex) -> dict[Simplex, int]:
    counts: dict[Simplex, int] = defaultdict(int)
    for f in c.facets:
        for i in range(len(f)):
            counts[f[:i] + f[i + 1:]] += 1
    return counts


def boundary_faces(c: SimplicialComplex) -> list[Simplex]:
    """Ridges lying in exactly one facet (for a pure complex)."""
    return sorted(r for r, k in _ridge_counts(c).items() if k == 1)


def boundary_complex(c: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(boundary_faces(c))


def is_closed_pseudomanifold(c: SimplicialComplex, d: int | None = None) -> bool:
    if not c.facets or not c.is_pure:
        return False
    if d is not None and c.dim != d:
        return False
    return all(k == 2 for k in _ridge_counts(c).values())


def is_pseudomanifold_with_boundary(c: SimplicialComplex) -> bool:
    return bool(c.facets) and c.is_pure and all(k <= 2 for k in _ridge_counts(c).values())


def is_connected(c: SimplicialComplex) -> bool:
    verts = c.vertices
    if not verts:
        return True
    adj: dict[int, set] = defaultdict(set)
    for f in c.facets:
        for v in f:
            adj[v].update(f)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def h_vector(fvec: Sequence[int]) -> list[int]:
    d = len(fvec) - 1
    f = [1] + list(fvec)  # f[i] = f_{i-1}
    return [sum((-1) ** (k - i) * comb(d + 1 - i, k - i) * f[i] for i in range(k + 1))
            for k in range(d + 2)]


def dehn_sommerville_residual(c: SimplicialComplex, d: int | None = None,
                              chi: int | None = None) -> list[Fraction]:
    """Residuals of ``h_{d+1-k} - h_k = (-1)^k C(d+1,k) (chi - chi(S^d))``."""
    fvec = list(f_vector(c))
    if d is None:
        d = c.dim
    fvec = (fvec + [0] * (d + 1))[: d + 1]
    if chi is None:
        chi = euler_characteristic(c)
    h = h_vector(fvec)
    sphere_chi = 1 + (-1) ** d
    return [Fraction(h[d + 1 - k] - h[k] - (-1) ** k * comb(d + 1, k) * (chi - sphere_chi))
            for k in range(d + 2)]


# -- low-dimensional exact classification ---------------------------------------------


def _is_cycle(c: SimplicialComplex) -> bool:
    if c.dim != 1 or not c.is_pure:
        return False
    deg: dict[int, int] = defaultdict(int)
    for a, b in c.facets:
        deg[a] += 1
        deg[b] += 1
    return all(x == 2 for x in deg.values()) and is_connected(c)


def _is_path(c: SimplicialComplex) -> bool:
    if c.dim != 1 or not c.is_pure:
        return False
    deg: dict[int, int] = defaultdict(int)
    for a, b in c.facets:
        deg[a] += 1
        deg[b] += 1
    ends = sum(1 for x in deg.values() if x == 1)
    return all(x <= 2 for x in deg.values()) and ends == 2 and is_connected(c)


def _low_dim_sphere(c: SimplicialComplex, d: int) -> tuple[bool, str]:
    if d == 0:
        return (len(c.facets) == 2 and c.dim == 0), "two points"
    if d == 1:
        return _is_cycle(c), "connected cycle"
    if not is_closed_pseudomanifold(c, 2):
        return False, "not a closed 2-pseudomanifold"
    for v in c.vertices:
        if not _is_cycle(link(c, (v,))):
            return False, f"vertex link of {v} is not a cycle"
    if not is_connected(c):
        return False, "disconnected"
    return euler_characteristic(c) == 2, "closed surface with Euler characteristic 2"


def _low_dim_ball(c: SimplicialComplex, d: int) -> tuple[bool, str]:
    if d == 0:
        return (len(c.facets) == 1 and c.dim == 0), "point"
    if d == 1:
        return _is_path(c), "path"
    if not is_pseudomanifold_with_boundary(c) or c.dim != 2:
        return False, "not a 2-pseudomanifold"
    for v in c.vertices:
        lk = link(c, (v,))
        if not (_is_cycle(lk) or _is_path(lk)):
            return False, f"vertex link of {v} is neither a cycle nor a path"
    bd = boundary_complex(c)
    ok = is_connected(c) and bool(bd.facets) and _is_cycle(bd) and euler_characteristic(c) == 1
    return ok, "disk"


# -- bistellar flips --------------------------------------------------------------


class _FlipState:
    """Facets of a closed pseudomanifold with incremental face -> cofacet sets."""

    def __init__(self, facets: Iterable[Simplex], d: int):
        self.d = d
        self.facets: dict[Simplex, None] = {}
        self.cofacets: dict[Simplex, set] = {}
        self.cand: list[dict[Simplex, None]] = [dict() for _ in range(d + 2)]
        for f in facets:
            self._add(f)

    def _sync(self, s: Simplex) -> None:
        a = len(s)
        cof = self.cofacets.get(s)
        want = cof is not None and len(cof) == self.d + 2 - a
        bucket = self.cand[a]
        if want:
            if s not in bucket:
                bucket[s] = None
        elif s in bucket:
            del bucket[s]

    def _add(self, f: Simplex) -> None:
        self.facets[f] = None
        for r in range(1, len(f) + 1):
            for s in combinations(f, r):
                cs = self.cofacets.get(s)
                if cs is None:
                    cs = self.cofacets[s] = set()
                cs.add(f)
                self._sync(s)

    def _remove(self, f: Simplex) -> None:
        del self.facets[f]
        for r in range(1, len(f) + 1):
            for s in combinations(f, r):
                cs = self.cofacets[s]
                cs.discard(f)
                if not cs:
                    del self.cofacets[s]
                self._sync(s)

    def move_for(self, a_face: Simplex) -> Simplex | None:
        """Complementary face ``B`` when the flip at ``A`` is admissible."""
        cof = self.cofacets.get(a_face)
        if cof is None:
            return None
        aset = set(a_face)
        b = set()
        for f in cof:
            b.update(f)
        b -= aset
        if len(b) != self.d + 2 - len(a_face) or len(cof) != len(b):
            return None
        bt = tuple(sorted(b))
        if len(bt) > 1 and bt in self.cofacets:
            return None
        if len(bt) == 1 and bt in self.cofacets:
            return None
        return bt

    def apply(self, a_face: Simplex, b_face: Simplex) -> None:
        old = list(self.cofacets[a_face])
        for f in old:
            self._remove(f)
        for y in a_face:
            self._add(tuple(sorted(set(a_face) - {y} | set(b_face))))

    def is_simplex_boundary(self) -> bool:
        return len(self.facets) == self.d + 2 and sum(1 for s in self.cofacets if len(s) == 1) == self.d + 2

    def vertex_count(self) -> int:
        return sum(1 for s in self.cofacets if len(s) == 1)


def bistellar_reduce(c: SimplicialComplex, seed: int = 0, rounds: int = 20, moves: int = 5000,
                     heat: float = 0.02) -> dict:
    """Try to flip a closed pseudomanifold down to the boundary of a simplex.

    Each round restarts from ``c`` with its own seed ``seed + round``.
    Moves that remove facets are preferred (largest removal first); level
    moves are taken when nothing decreases; increasing moves are taken when
    stuck, or with probability ``heat``.  Returns a dict with ``success``,
    the winning round's ``seed`` and its ``trace`` of (A, B) flips.
    """
    d = c.dim
    best = None
    for r in range(rounds):
        rng = random.Random(seed + r)
        st = _FlipState(c.facets, d)
        trace: list[tuple[Simplex, Simplex]] = []
        min_facets = len(st.facets)
        for _ in range(moves):
            if st.is_simplex_boundary():
                return {"success": True, "seed": seed + r, "round": r, "trace": trace,
                        "flips": len(trace)}
            mv = _pick_move(st, rng, heat)
            if mv is None:
                break
            st.apply(*mv)
            trace.append(mv)
            min_facets = min(min_facets, len(st.facets))
        if st.is_simplex_boundary():
            return {"success": True, "seed": seed + r, "round": r, "trace": trace, "flips": len(trace)}
        if best is None or min_facets < best["min_facets"]:
            best = {"success": False, "seed": seed + r, "round": r, "min_facets": min_facets,
                    "final_vertices": st.vertex_count()}
    return best or {"success": False}


def _pick_move(st: _FlipState, rng: random.Random, heat: float):
    d = st.d
    # a ranges over |A|; the flip replaces d+2-a facets by a facets
    decreasing = [a for a in range(1, d + 2) if a < d + 2 - a]
    level = [a for a in range(1, d + 2) if a == d + 2 - a]
    increasing = [a for a in range(2, d + 1) if a > d + 2 - a]
    if rng.random() >= heat:
        for a in decreasing:
            mv = _random_valid(st, a, rng)
            if mv:
                return mv
        for a in level:
            mv = _random_valid(st, a, rng)
            if mv:
                return mv
    for a in increasing:
        mv = _random_valid(st, a, rng)
        if mv:
            return mv
    for a in decreasing + level:
        mv = _random_valid(st, a, rng)
        if mv:
            return mv
    return None


def _random_valid(st: _FlipState, a: int, rng: random.Random):
    bucket = st.cand[a]
    if not bucket:
        return None
    items = list(bucket)
    rng.shuffle(items)
    for s in items:
        b = st.move_for(s)
        if b is not None:
            return (s, b)
    return None


# -- spheres, balls and manifolds ------------------------------------------------


def _sphere_betti(d: int) -> tuple[int, ...]:
    return (2,) if d == 0 else tuple([1] + [0] * (d - 1) + [1])


def sphere_check(c: SimplicialComplex, d: int | None = None, seed: int = 0, rounds: int = 20,
                 moves: int = 5000) -> CertStatus:
    if d is None:
        d = c.dim
    if not c.facets or c.dim != d or not c.is_pure:
        return CertStatus(FAIL, {"reason": "not a pure complex of the expected dimension"})
    if d <= 2:
        ok, why = _low_dim_sphere(c, d)
        return CertStatus(CERTIFIED if ok else FAIL, {"method": "exact", "reason": why})
    if not is_closed_pseudomanifold(c, d):
        return CertStatus(FAIL, {"reason": "not a closed pseudomanifold"})
    betti = betti_gf2(c).betti
    if betti != _sphere_betti(d):
        return CertStatus(FAIL, {"reason": "GF(2) homology is not that of a sphere", "betti": betti})
    res = bistellar_reduce(c, seed=seed, rounds=rounds, moves=moves)
    if res["success"]:
        return CertStatus(CERTIFIED, {"method": "bistellar", "seed": res["seed"], "flips": res["flips"],
                                      "trace": [list(map(list, m)) for m in res["trace"]]})
    return CertStatus(HEURISTIC, {"method": "homology sphere", "betti": betti, "seed": res.get("seed"),
                                  "min_facets": res.get("min_facets")})


def ball_check(c: SimplicialComplex, d: int | None = None, seed: int = 0, rounds: int = 20,
               moves: int = 5000) -> CertStatus:
    """A ball is recognized through the sphere ``B + cone(boundary of B)``."""
    if d is None:
        d = c.dim
    if not c.facets or c.dim != d or not c.is_pure:
        return CertStatus(FAIL, {"reason": "not a pure complex of the expected dimension"})
    if d <= 2:
        ok, why = _low_dim_ball(c, d)
        return CertStatus(CERTIFIED if ok else FAIL, {"method": "exact", "reason": why})
    if not is_pseudomanifold_with_boundary(c):
        return CertStatus(FAIL, {"reason": "not a pseudomanifold"})
    bd = boundary_complex(c)
    if not bd.facets:
        return CertStatus(FAIL, {"reason": "no boundary"})
    common = set(c.facets[0]).intersection(*c.facets)
    if common:
        # a cone over a PL sphere or ball is a PL ball
        v = min(common)
        base = link(c, (v,))
        st = (sphere_check if is_closed_pseudomanifold(base, d - 1) else ball_check)(
            base, d - 1, seed=seed, rounds=rounds, moves=moves)
        return CertStatus(st.status, {**st.evidence, "method": f"cone from {v} over " + st.evidence.get("method", "")})
    apex = max(c.vertices) + 1
    closed = SimplicialComplex(list(c.facets) + list(cone(bd, apex).facets))
    st = sphere_check(closed, d, seed=seed, rounds=rounds, moves=moves)
    st.evidence["method"] = "capped " + st.evidence.get("method", "")
    return st


def _local_failure(c: SimplicialComplex, with_boundary: bool) -> Simplex | None:
    """Highest-dimensional face whose link fails cheap sphere (or ball) tests."""
    d = c.dim
    for k in range(d - 1, -1, -1):
        for s in c.faces(k):
            lk = link(c, s)
            ld = d - k - 1
            if lk.dim != ld or not lk.is_pure:
                return s
            if is_closed_pseudomanifold(lk, ld):
                ok = (_low_dim_sphere(lk, ld)[0] if ld <= 2
                      else is_connected(lk) and betti_gf2(lk).betti == _sphere_betti(ld))
            elif with_boundary and is_pseudomanifold_with_boundary(lk):
                ok = (_low_dim_ball(lk, ld)[0] if ld <= 2
                      else is_connected(lk) and betti_gf2(lk).betti == (1,) + (0,) * ld)
            else:
                ok = False
            if not ok:
                return s
    return None


def is_combinatorial_manifold(c: SimplicialComplex, with_boundary: bool = False, seed: int = 0,
                              rounds: int = 20, moves: int = 5000, workers: int = 1) -> CertStatus:
    """Check every vertex link; a certified link certifies all links through it."""
    if not c.facets or not c.is_pure:
        return CertStatus(FAIL, {"reason": "empty or impure complex"})
    d = c.dim
    if d == 0:
        return CertStatus(CERTIFIED, {"method": "exact"})
    if not (is_pseudomanifold_with_boundary(c) if with_boundary else is_closed_pseudomanifold(c)):
        bad = _local_failure(c, with_boundary)
        return CertStatus(FAIL, {"reason": "not a pseudomanifold", "witness": bad})
    bd_vertices = set()
    if with_boundary:
        for r in boundary_faces(c):
            bd_vertices.update(r)
    jobs = [(v, link(c, (v,)), v in bd_vertices) for v in c.vertices]
    results = _map(_vertex_link_job, [(lk, ball, seed, rounds, moves) for _, lk, ball in jobs], workers)
    per_vertex = {v: st for (v, _, _), st in zip(jobs, results)}
    status = weakest(per_vertex.values())
    evidence: dict = {"links": {v: st.status for v, st in per_vertex.items()}}
    if status == FAIL:
        evidence["witness"] = _local_failure(c, with_boundary)
    by_dim = defaultdict(list)
    for v, st in per_vertex.items():
        by_dim[st.status].append(v)
    evidence["counts"] = {k: len(v) for k, v in sorted(by_dim.items())}
    return CertStatus(status, evidence)


def _vertex_link_job(args) -> CertStatus:
    lk, ball, seed, rounds, moves = args
    if ball:
        return ball_check(lk, seed=seed, rounds=rounds, moves=moves)
    return sphere_check(lk, seed=seed, rounds=rounds, moves=moves)


def _map(fn, items, workers: int):
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


# -- discrete Morse theory ---------------------------------------------------------


class HasseDiagram:
    """Faces of a complex with CSR face / coface incidences (codimension one)."""

    def __init__(self, c: SimplicialComplex):
        faces = c.all_faces()
        self.faces = faces
        self.index = {f: i for i, f in enumerate(faces)}
        n = len(faces)
        dims = np.fromiter((len(f) - 1 for f in faces), dtype=np.int32, count=n)
        face_lists = []
        cof: list[list[int]] = [[] for _ in range(n)]
        for i, f in enumerate(faces):
            if len(f) > 1:
                sub = [self.index[f[:j] + f[j + 1:]] for j in range(len(f))]
            else:
                sub = []
            face_lists.append(sub)
            for s in sub:
                cof[s].append(i)
        self.dims = dims
        self.face_ptr, self.face_idx = _csr(face_lists)
        self.coface_ptr, self.coface_idx = _csr(cof)

    def run(self, seed: int, protected: np.ndarray | None = None):
        if protected is None:
            protected = np.zeros(len(self.faces), dtype=np.uint8)
        return kernels.morse_run(self.dims, self.face_ptr, self.face_idx, self.coface_ptr,
                                 self.coface_idx, protected, seed)


def _csr(lists: list[list[int]]):
    ptr = np.zeros(len(lists) + 1, dtype=np.int32)
    ptr[1:] = np.cumsum([len(x) for x in lists])
    idx = np.fromiter((v for x in lists for v in x), dtype=np.int32, count=int(ptr[-1]))
    return ptr, idx


def _run_seed(seed: int, i: int) -> int:
    return (seed * 1_000_003 + i) & ((1 << 64) - 1)


def random_discrete_morse(c: SimplicialComplex, seed: int = 0, tries: int = 10) -> tuple[MorseVector, int]:
    """Best (lexicographically smallest) Morse vector over ``tries`` random runs.

    Returns the vector and the run seed that produced it.
    """
    if tries < 1:
        raise ValueError("tries must be at least 1")
    hd = HasseDiagram(c)
    best = None
    for i in range(tries):
        s = _run_seed(seed, i)
        crit, _ = hd.run(s)
        counts = [0] * (c.dim + 1)
        for f in crit:
            counts[int(hd.dims[f])] += 1
        key = tuple(counts)
        if best is None or key < best[0]:
            best = (key, s)
    return MorseVector(best[0]), best[1]


def collapse_onto(c: SimplicialComplex, target: Iterable[int], avoid: Iterable[Iterable[int]] = (),
                  seed: int = 0, tries: int = 50) -> dict | None:
    """Random collapses of ``c`` keeping ``target`` (and ``avoid``) in place.

    If ``target`` is not itself a face (an empty simplex whose boundary lies
    in ``c``) its boundary is kept instead.  Returns the run with the fewest
    critical cells: their faces, counts per dimension and the run seed.
    """
    target = simplex(target)
    keep: set[Simplex] = set()
    if c.has_face(target):
        keep.update(s for r in range(1, len(target) + 1) for s in combinations(target, r))
    else:
        for r in range(1, len(target)):
            for s in combinations(target, r):
                if not c.has_face(s):
                    return None
                keep.add(s)
    for a in avoid:
        a = simplex(a)
        keep.update(s for r in range(1, len(a) + 1) for s in combinations(a, r))
    hd = HasseDiagram(c)
    prot = np.zeros(len(hd.faces), dtype=np.uint8)
    for s in keep:
        prot[hd.index[s]] = 1
    best = None
    for i in range(tries):
        s = _run_seed(seed, i)
        crit, pairs = hd.run(s, prot)
        key = (len(crit), sorted(int(hd.dims[f]) for f in crit))
        if best is None or key < best[0]:
            best = (key, s, crit, pairs)
    _, s, crit, pairs = best
    counts = [0] * (c.dim + 1)
    for f in crit:
        counts[int(hd.dims[f])] += 1
    return {"seed": s, "critical": sorted(hd.faces[f] for f in crit), "counts": tuple(counts),
            "pairs": pairs, "kept": sorted(keep)}


# -- handlebodies ----------------------------------------------------------------


def handlebody_check(c: SimplicialComplex, ball_dim: int, circles: int, seed: int = 0,
                     tries: int = 10) -> CertStatus:
    """Evidence that ``c`` is ``B^ball_dim x (S^1)^circles``.

    Homology and Morse-level evidence only, so the best outcome is HeuristicPass.
    """
    d = ball_dim + circles
    ev: dict = {"signature": f"B^{ball_dim} x (S^1)^{circles}"}
    if c.dim != d or not c.is_pure:
        return CertStatus(FAIL, {**ev, "reason": f"dimension {c.dim} != {d} or impure"})
    if not is_pseudomanifold_with_boundary(c):
        return CertStatus(FAIL, {**ev, "reason": "not a pseudomanifold"})
    bd = boundary_complex(c)
    if ball_dim > 0 and (not bd.facets or not is_closed_pseudomanifold(bd)):
        return CertStatus(FAIL, {**ev, "reason": "boundary is empty or not closed"})
    want = tuple(comb(circles, i) for i in range(d + 1))
    betti = betti_gf2(c).betti
    ev["betti"] = betti
    if betti != want:
        return CertStatus(FAIL, {**ev, "reason": "GF(2) homology mismatch"})
    mv, run_seed = random_discrete_morse(c, seed=seed, tries=tries)
    ev["morse"] = mv.counts
    ev["morse_seed"] = run_seed
    if mv.counts != want:
        return CertStatus(FAIL, {**ev, "reason": "no perfect Morse vector found"})
    return CertStatus(HEURISTIC, ev)
