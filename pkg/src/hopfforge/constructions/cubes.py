"""Cubical decompositions of real projective spaces and their triangulations.

The cubical RP^k is the boundary of the (k+1)-cube with antipodal corners
identified.  Corners are labelled by their coordinates read as a binary
number; after the quotient a corner keeps the smaller of the two labels
``x`` and ``2^(k+1) - 1 - x``.  Cells are addressed by patterns over
``01*`` in their canonical (lexicographically smaller) antipodal form.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .. import kernels
from ..complex import (CubicalComplex, Simplex, SimplicialComplex, canonical_pattern, cone, cube_boundary,
                       euler_characteristic, pattern_facets, simplex, union)
from ..errors import BuildError, MalformedInputError, NoAdaptorNeededError, SearchExhaustedError
from ..recognition import (CertStatus, boundary_complex, is_closed_pseudomanifold, is_combinatorial_manifold,
                           is_connected, sphere_check)


def rp_cubical(k: int) -> CubicalComplex:
    """Cubical RP^k from the boundary of the (k+1)-cube."""
    if k < 1:
        raise MalformedInputError("k must be at least 1")
    return cube_boundary(k + 1).quotient()


def _corner_label(bits: str) -> int:
    x = int(bits, 2)
    return min(x, (1 << len(bits)) - 1 - x)


def _local_corners(pattern: str) -> list[int]:
    """Corner labels of a cell indexed by the local bitstring of its free coordinates."""
    free = [i for i, ch in enumerate(pattern) if ch == "*"]
    out = []
    for b in range(1 << len(free)):
        chars = list(pattern)
        for j, pos in enumerate(free):
            chars[pos] = "1" if (b >> (len(free) - 1 - j)) & 1 else "0"
        out.append(_corner_label("".join(chars)))
    return out


@dataclass
class PyramidDecomposition:
    """RP^k as pyramids over (k-1)-cubes coned to the centres of the k-cubes."""

    k: int
    cubical: CubicalComplex
    apex: dict[str, int]
    pyramids: list[tuple[int, str]]

    @property
    def vertex_count(self) -> int:
        return len(self.cubical.vertices()) + len(self.apex)

    def pyramid_vertices(self, i: int) -> frozenset:
        a, base = self.pyramids[i]
        return self.cubical.vertices_of[base] | {a}


def pyramid_decomposition(k: int) -> PyramidDecomposition:
    q = rp_cubical(k)
    top = q.cells_of_dim(k)
    first = 1 << k
    apex = {p: first + i for i, p in enumerate(top)}
    pyramids = [(apex[p], f) for p in top for f in q.faces_of[p]]
    return PyramidDecomposition(k, q, apex, pyramids)


# -- triangulated 3-cubes and adaptors --------------------------------------

@dataclass
class CubeTriangulation:
    tetrahedra: list[Simplex]
    diagonals: dict[frozenset, Simplex]

    @property
    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.tetrahedra)


def _parity(b: int) -> int:
    return bin(b).count("1") & 1


def five_tet_local(mirror: int) -> tuple[list[tuple[int, ...]], dict[tuple[int, int], tuple[int, int]]]:
    """Five-tetrahedra triangulation of [0,1]^3 in local corner indices.

    The central tetrahedron is spanned by the corners of parity ``mirror``;
    the other four cut off the remaining corners.  Returns the tetrahedra
    and, per face ``(axis, side)``, the diagonal it induces.
    """
    p = 1 if mirror else 0
    tets = [tuple(b for b in range(8) if _parity(b) == p)]
    for v in range(8):
        if _parity(v) != p:
            tets.append(tuple(sorted((v, v ^ 1, v ^ 2, v ^ 4))))
    diags = {}
    for axis in range(3):
        bit = 1 << (2 - axis)
        for side in (0, 1):
            face = [b for b in range(8) if bool(b & bit) == bool(side)]
            diags[(axis, side)] = tuple(b for b in face if _parity(b) == p)
    return tets, diags


def cube3_five_tet(mirror: int | bool = 0, corners: Sequence[int] = tuple(range(8))) -> CubeTriangulation:
    """One of the two mirror triangulations of a 3-cube without a main diagonal.

    ``corners[b]`` is the label of the corner with local coordinates ``b``
    (three bits, first coordinate most significant).
    """
    corners = list(corners)
    if len(corners) != 8 or len(set(corners)) != 8:
        raise MalformedInputError("a 3-cube needs 8 distinct corner labels")
    tets, diags = five_tet_local(int(mirror))
    out = CubeTriangulation([simplex(corners[b] for b in t) for t in tets], {})
    for (axis, side), d in diags.items():
        bit = 1 << (2 - axis)
        square = frozenset(corners[b] for b in range(8) if bool(b & bit) == bool(side))
        out.diagonals[square] = simplex(corners[b] for b in d)
    return out


def flat_adaptor(square: Iterable[int], diag_a: Iterable[int], diag_b: Iterable[int]) -> Simplex:
    """Tetrahedron on a square's corners joining its two diagonal triangulations."""
    sq = simplex(square)
    a, b = simplex(diag_a), simplex(diag_b)
    if len(sq) != 4 or not (set(a) <= set(sq) and set(b) <= set(sq)) or len(a) != 2 or len(b) != 2:
        raise MalformedInputError("diagonals must be vertex pairs of the square")
    if a == b:
        raise NoAdaptorNeededError(f"square {sq} has the same diagonal {a} on both sides")
    if set(a) & set(b):
        raise MalformedInputError(f"{a} and {b} are not the two diagonals of {sq}")
    return sq


def square_triangles(square: Iterable[int], diag: Iterable[int]) -> list[Simplex]:
    sq = set(square)
    d = set(diag)
    rest = sorted(sq - d)
    return [simplex(d | {r}) for r in rest]


# -- cube data for a cubical RP^k -------------------------------------------

class CubeData:
    """Incidences of the cubical RP^k used by the triangulation pipelines."""

    def __init__(self, k: int):
        self.k = k
        self.cubical = rp_cubical(k)
        self.cubes = self.cubical.cells_of_dim(3)
        self.squares = self.cubical.cells_of_dim(2)
        self.tops = self.cubical.cells_of_dim(k)
        self.cube_index = {c: i for i, c in enumerate(self.cubes)}
        self.square_cubes: dict[str, list[str]] = defaultdict(list)
        # (cube, square) -> local five-tet diagonal for mirror 0
        self._diag0: dict[tuple[str, str], Simplex] = {}
        self.corners: dict[str, list[int]] = {}
        for c in self.cubes:
            corners = _local_corners(c)
            self.corners[c] = corners
            _, diags = five_tet_local(0)
            free = [i for i, ch in enumerate(c) if ch == "*"]
            for (axis, side), d in diags.items():
                pos = free[axis]
                face = c[:pos] + str(side) + c[pos + 1:]
                s = canonical_pattern(face)
                self.square_cubes[s].append(c)
                self._diag0[(c, s)] = simplex(corners[b] for b in d)
        self.diagonal_pair: dict[str, tuple[Simplex, Simplex]] = {}
        for s in self.squares:
            verts = sorted(self.cubical.vertices_of[s])
            a = min(self._diag0[(c, s)] for c in self.square_cubes[s])
            b = simplex(set(verts) - set(a))
            self.diagonal_pair[s] = (a, b)

    def diagonal(self, cube: str, square: str, mirror: int) -> Simplex:
        d0 = self._diag0[(cube, square)]
        if not mirror:
            return d0
        return simplex(set(self.cubical.vertices_of[square]) - set(d0))

    def diagonal_id(self, cube: str, square: str, mirror: int) -> int:
        return self.diagonal_pair[square].index(self.diagonal(cube, square, mirror))

    def cube_triangulation(self, cube: str, mirror: int) -> CubeTriangulation:
        return cube3_five_tet(mirror, self.corners[cube])

    def top_cubes(self, top: str) -> list[str]:
        return sorted({canonical_pattern(f) for f in pattern_facets(top)})

    def top_squares(self, top: str) -> list[str]:
        return sorted({canonical_pattern(g) for f in pattern_facets(top) for g in pattern_facets(f)})

    def square_rows(self) -> np.ndarray:
        """Rows ``(c, d0, d1) x 3`` describing each square's three diagonals."""
        rows = []
        for s in self.squares:
            cs = self.square_cubes[s]
            if len(cs) != 3:
                raise BuildError(f"square {s} lies in {len(cs)} cubes")
            row = []
            for c in cs:
                row += [self.cube_index[c], self.diagonal_id(c, s, 0), self.diagonal_id(c, s, 1)]
            rows.append(row)
        return np.asarray(rows, dtype=np.int32)


@dataclass(frozen=True)
class CubeAssignment:
    """Mirror flag per 3-cube; bit ``i`` of ``mask`` belongs to cube ``i``."""

    flags: tuple[int, ...]

    @classmethod
    def from_mask(cls, mask: int, n: int = 20) -> "CubeAssignment":
        return cls(tuple((mask >> i) & 1 for i in range(n)))

    @classmethod
    def coerce(cls, a, n: int = 20) -> "CubeAssignment":
        if isinstance(a, CubeAssignment):
            out = a
        elif isinstance(a, (int, np.integer)):
            out = cls.from_mask(int(a), n)
        else:
            out = cls(tuple(int(x) for x in a))
        if len(out.flags) != n or any(f not in (0, 1) for f in out.flags):
            raise MalformedInputError(f"assignment needs {n} flags in {{0, 1}}")
        return out

    @property
    def mask(self) -> int:
        return sum(f << i for i, f in enumerate(self.flags))


# -- RP^4 with 21 vertices ----------------------------------------------------

_RP4_DATA: CubeData | None = None


def rp4_cube_data() -> CubeData:
    global _RP4_DATA
    if _RP4_DATA is None:
        _RP4_DATA = CubeData(4)
    return _RP4_DATA


@dataclass
class RP4NiceBuild:
    complex: SimplicialComplex
    assignment: CubeAssignment
    data: CubeData
    cube_tets: dict[str, list[Simplex]]
    diagonals: dict[tuple[str, str], Simplex]
    adaptors: dict[str, Simplex]
    apex: dict[str, int]
    top_boundaries: dict[str, list[Simplex]]
    sphere_status: dict[str, CertStatus] = field(default_factory=dict)

    @property
    def incoherent(self) -> list[str]:
        return sorted(self.adaptors)

    def skeleton3(self) -> SimplicialComplex:
        tets = [t for ts in self.cube_tets.values() for t in ts] + list(self.adaptors.values())
        return SimplicialComplex(tets)

    def zones(self) -> dict[int, SimplicialComplex]:
        """The cone balls ``B_i`` over the 4-cube boundaries."""
        return {i: cone(SimplicialComplex(self.top_boundaries[q]), self.apex[q])
                for i, q in enumerate(self.data.tops)}

    def adaptor_spheres(self) -> dict[str, list[str]]:
        """For each adaptor, the 4-cubes whose boundary sphere contains it."""
        return {s: [q for q, bd in self.top_boundaries.items() if t in bd] for s, t in self.adaptors.items()}


def incoherent_squares(assignment, data: CubeData | None = None) -> list[str]:
    data = data or rp4_cube_data()
    a = CubeAssignment.coerce(assignment, len(data.cubes))
    out = []
    for s in data.squares:
        ds = {data.diagonal(c, s, a.flags[data.cube_index[c]]) for c in data.square_cubes[s]}
        if len(ds) > 1:
            out.append(s)
    return out


def build_rp4_nice_data(assignment=0, verify: bool = True, seed: int = 0) -> RP4NiceBuild:
    data = rp4_cube_data()
    a = CubeAssignment.coerce(assignment, len(data.cubes))
    cube_tets = {}
    diagonals = {}
    for c in data.cubes:
        m = a.flags[data.cube_index[c]]
        cube_tets[c] = data.cube_triangulation(c, m).tetrahedra
        for s in data.square_cubes:
            if c in data.square_cubes[s]:
                diagonals[(c, s)] = data.diagonal(c, s, m)
    adaptors = {}
    for s in data.squares:
        ds = [diagonals[(c, s)] for c in data.square_cubes[s]]
        if len(set(ds)) == 1:
            continue
        if len(set(ds)) > 2:  # pragma: no cover - a square has only two diagonals
            raise BuildError(f"square {s} carries three distinct diagonals")
        odd = next(d for d in ds if ds.count(d) == 1)
        major = next(d for d in ds if ds.count(d) == 2)
        adaptors[s] = flat_adaptor(data.cubical.vertices_of[s], major, odd)
    first = 1 << data.k
    apex = {q: first + i for i, q in enumerate(data.tops)}
    facets = []
    top_boundaries = {}
    statuses = {}
    for q in data.tops:
        qcubes = data.top_cubes(q)
        bd = [t for c in qcubes for t in cube_tets[c]]
        for s in data.top_squares(q):
            pair = [c for c in data.square_cubes[s] if c in qcubes]
            if len(pair) != 2:
                raise BuildError(f"square {s} meets 4-cube {q} in {len(pair)} cubes")
            if diagonals[(pair[0], s)] != diagonals[(pair[1], s)]:
                bd.append(adaptors[s])
        top_boundaries[q] = sorted(bd)
        sphere = SimplicialComplex(bd)
        if verify:
            st = sphere_check(sphere, 3, seed=seed)
            statuses[q] = st
            if not st:
                raise BuildError(f"boundary of 4-cube {q} is not a 3-sphere: {st.evidence}")
        facets.extend(cone(sphere, apex[q]).facets)
    return RP4NiceBuild(SimplicialComplex(facets), a, data, cube_tets, diagonals, adaptors, apex,
                        top_boundaries, statuses)


def build_rp4_nice(assignment=0, verify: bool = True, seed: int = 0) -> SimplicialComplex:
    return build_rp4_nice_data(assignment, verify=verify, seed=seed).complex


def _search_block(args):
    rows, ncubes, fixed_bits, prefix = args
    rows = np.array(rows, dtype=np.int32)
    free = ncubes - fixed_bits
    for r in rows:
        for j in range(3):
            c = r[3 * j]
            if c >= free:
                bit = (prefix >> (c - free)) & 1
                d = r[3 * j + 1 + bit]
                r[3 * j: 3 * j + 3] = (0, d, d)
    counts = np.asarray(kernels.incoherence_counts(rows, free))
    best = int(counts.min())
    hits = np.flatnonzero(counts == best)
    return best, [int(h) | (prefix << free) for h in hits]


def incoherence_table(data: CubeData | None = None) -> np.ndarray:
    """Number of incoherent squares for every assignment mask."""
    data = data or rp4_cube_data()
    return np.asarray(kernels.incoherence_counts(data.square_rows(), len(data.cubes)))


def search_min_incoherent(workers: int = 1, fixed_bits: int = 4, progress=None) -> tuple[int, list[int]]:
    """Exhaustive search over all mirror assignments.

    The space is split on the top ``fixed_bits`` cube flags; blocks are
    reduced in prefix order, so the result does not depend on ``workers``.
    Returns the minimum count and all minimizing masks in increasing order.
    """
    data = rp4_cube_data()
    n = len(data.cubes)
    fixed_bits = max(0, min(fixed_bits, n))
    rows = data.square_rows().tolist()
    jobs = [(rows, n, fixed_bits, p) for p in range(1 << fixed_bits)]
    results = []
    with ProcessPoolExecutor(max_workers=workers) if workers > 1 else nullcontext() as ex:
        for r in (ex.map(_search_block, jobs) if ex is not None else map(_search_block, jobs)):
            results.append(r)
            if progress is not None:
                progress(len(results), len(jobs), r[0])
    best = min(r[0] for r in results)
    arg = sorted(m for b, ms in results if b == best for m in ms)
    return best, arg


# -- RP^3 with 12 and 11 vertices --------------------------------------------

# Square diagonals of the 12-vertex equilibrium RP^3, keyed by the square's
# corner labels in the quotient of the 4-cube.
RP3_DIAGONALS: dict[frozenset, Simplex] = {
    frozenset(k): v for k, v in [
        ((0, 1, 4, 5), (1, 4)), ((2, 3, 6, 7), (2, 7)), ((0, 1, 2, 3), (1, 2)),
        ((4, 5, 6, 7), (4, 7)), ((0, 2, 4, 6), (2, 4)), ((1, 3, 5, 7), (1, 7)),
        ((0, 2, 5, 7), (0, 5)), ((1, 3, 4, 6), (3, 6)), ((1, 2, 5, 6), (5, 6)),
        ((0, 3, 4, 7), (0, 3)), ((0, 1, 6, 7), (0, 6)), ((2, 3, 4, 5), (3, 5)),
    ]
}


def rp3_cube_boundaries(diagonals: dict[frozenset, Simplex] | None = None) -> dict[str, list[Simplex]]:
    """Triangulated boundary of each 3-cube of the cubical RP^3."""
    diagonals = RP3_DIAGONALS if diagonals is None else diagonals
    q = rp_cubical(3)
    out = {}
    for c in q.cells_of_dim(3):
        tris = []
        for s in q.faces_of[c]:
            verts = q.vertices_of[s]
            if verts not in diagonals:
                raise BuildError(f"no diagonal chosen for square {sorted(verts)}")
            tris.extend(square_triangles(verts, diagonals[verts]))
        out[c] = sorted(tris)
    return out


def rp3_nice_zones() -> dict[int, SimplicialComplex]:
    """Cones ``B_i`` from apex ``8 + i`` over the triangulated cube boundaries."""
    bds = rp3_cube_boundaries()
    return {i: cone(SimplicialComplex(bds[c]), 8 + i) for i, c in enumerate(sorted(bds))}


def build_rp3_nice_12() -> SimplicialComplex:
    return union(*rp3_nice_zones().values())


def _tet_faces(t: Simplex) -> list[Simplex]:
    return [t[:i] + t[i + 1:] for i in range(4)]


def ball_fillings(boundary: Iterable[Iterable[int]], forbidden: Iterable[Iterable[int]] = (),
                  max_tets: int | None = None) -> Iterator[list[Simplex]]:
    """Triangulated 3-balls with the given boundary and no interior vertices.

    Tetrahedra are added one at a time across the lexicographically first
    open triangle; a triangle may be opened and closed once.  Fillings are
    yielded in order of increasing size and none uses a triangle from
    ``forbidden`` in its interior.
    """
    bd = {simplex(t) for t in boundary}
    verts = sorted({v for t in bd for v in t})
    forb = {simplex(t) for t in forbidden} - bd
    n = len(verts)
    limit = max_tets if max_tets is not None else 3 * n
    lo = max(1, n - 3)

    def dfs(front: set, closed: set, tets: list, budget: int):
        if not front:
            yield list(tets)
            return
        if len(tets) >= budget:
            return
        t = min(front)
        for w in verts:
            if w in t:
                continue
            tet = simplex(t + (w,))
            if tet in tets:
                continue
            new_front = set(front)
            new_closed = set(closed)
            ok = True
            for f in _tet_faces(tet):
                if f in new_front:
                    new_front.discard(f)
                    new_closed.add(f)
                elif f in new_closed or f in forb:
                    ok = False
                    break
                else:
                    new_front.add(f)
            if not ok:
                continue
            tets.append(tet)
            yield from dfs(new_front, new_closed, tets, budget)
            tets.pop()

    for size in range(lo, limit + 1):
        seen = set()
        for sol in dfs(set(bd), set(), [], size):
            key = tuple(sorted(sol))
            if len(key) == size and key not in seen:
                seen.add(key)
                yield sorted(sol)


def build_rp3_11(seed: int = 0) -> SimplicialComplex:
    """Replace the cone over one cube of the 12-vertex RP^3 by a filling."""
    bds = rp3_cube_boundaries()
    order = sorted(bds)
    base = {c: cone(SimplicialComplex(bds[c]), 8 + i).facets for i, c in enumerate(order)}
    for c in order:
        rest = [f for d in order if d != c for f in base[d]]
        rest_tris = {t for f in rest for t in _tet_faces(f)}
        for filling in ball_fillings(bds[c], forbidden=rest_tris, max_tets=10):
            out = SimplicialComplex(rest + filling)
            if is_combinatorial_manifold(out, seed=seed):
                return out
    raise SearchExhaustedError("no cube of the 12-vertex RP^3 admits a filling without new vertices")


# -- Klein bottles inside the 21-vertex RP^4 ----------------------------------

def extract_klein_bottles(build: RP4NiceBuild, tops: tuple[int, int] = (0, 1)
                          ) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Hypersurface bounding two 4-cube stars, and a Klein bottle splitting it.

    The hypersurface is the boundary of the union of the cones over two
    4-cube boundaries; it is made of twelve 3-cubes.  The surface is the
    common boundary of the lexicographically first half of six cubes whose
    boundary is a Klein bottle; its squares are triangulated
    by the diagonals of the cubes of that half.
    """
    data = build.data
    qa, qb = data.tops[tops[0]], data.tops[tops[1]]
    both = [f for q in (qa, qb) for f in cone(SimplicialComplex(build.top_boundaries[q]), build.apex[q]).facets]
    hyper = boundary_complex(SimplicialComplex(both))
    cubes = sorted(set(data.top_cubes(qa)) ^ set(data.top_cubes(qb)))
    for half in combinations(cubes, len(cubes) // 2):
        count: dict[str, list[str]] = defaultdict(list)
        for c in half:
            for sq in data.cubical.faces_of[c]:
                count[sq].append(c)
        squares = [(sq, cs[0]) for sq, cs in sorted(count.items()) if len(cs) == 1]
        tris = [t for sq, c in squares for t in square_triangles(data.cubical.vertices_of[sq], build.diagonals[(c, sq)])]
        surface = SimplicialComplex(tris)
        if (is_closed_pseudomanifold(surface, 2) and is_connected(surface)
                and euler_characteristic(surface) == 0 and not _orientable(surface)):
            return hyper, surface
    raise SearchExhaustedError("no splitting Klein bottle found in the hypersurface")


def _orientable(c: SimplicialComplex) -> bool:
    """Orientability of a closed pseudomanifold by propagating facet signs."""
    d = c.dim
    sign: dict[Simplex, int] = {}
    ridges: dict[Simplex, list[tuple[Simplex, int]]] = defaultdict(list)
    for f in c.facets:
        for i in range(d + 1):
            ridges[f[:i] + f[i + 1:]].append((f, i))
    for start in c.facets:
        if start in sign:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            f = stack.pop()
            for i in range(d + 1):
                r = f[:i] + f[i + 1:]
                for g, j in ridges[r]:
                    if g == f:
                        continue
                    # induced orientations on r must be opposite
                    want = -sign[f] * (-1) ** (i + j)
                    if g in sign:
                        if sign[g] != want:
                            return False
                    else:
                        sign[g] = want
                        stack.append(g)
    return True
