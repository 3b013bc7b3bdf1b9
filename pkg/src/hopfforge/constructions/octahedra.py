"""Octahedral cells of 3-dimensional triangulations and the 24-cell cover."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from ..complex import Simplex, SimplicialComplex, double_cover, link, simplex
from ..errors import StructureError
from ..homology import nontrivial_gf2_cocycle
from ..recognition import CERTIFIED, FAIL, CertStatus


@dataclass(frozen=True)
class Octahedron:
    """Octahedron given by its three pairs of opposite vertices."""

    axes: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for a in self.axes for v in a)

    def opposite(self, v: int) -> int:
        for a, b in self.axes:
            if v == a:
                return b
            if v == b:
                return a
        raise KeyError(v)

    def vertex_figure(self, v: int) -> tuple[int, int, int, int]:
        """The square of neighbours of ``v`` in cyclic order."""
        (a, b), (c, d) = [ax for ax in self.axes if v not in ax]
        return (a, c, b, d)


@dataclass
class OctahedralDecomposition:
    complex: SimplicialComplex
    diagonals: list[Simplex]
    octahedra: list[Octahedron]


def _cycle_order(lk: SimplicialComplex) -> list[int] | None:
    adj = defaultdict(list)
    for e in lk.facets:
        if len(e) != 2:
            return None
        adj[e[0]].append(e[1])
        adj[e[1]].append(e[0])
    if any(len(v) != 2 for v in adj.values()):
        return None
    start = min(adj)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order if len(order) == len(adj) else None


def octahedral_edges(c: SimplicialComplex) -> list[tuple[Simplex, list[int]]]:
    """Edges of valence 4 whose link is a 4-cycle, with the cycle in order."""
    out = []
    for e in c.faces(1):
        if len(c.facets_containing(e)) != 4:
            continue
        order = _cycle_order(link(c, e))
        if order is not None and len(order) == 4:
            out.append((e, order))
    return out


def octahedralize(c: SimplicialComplex) -> OctahedralDecomposition:
    """Merge the four tetrahedra around each subdividing diagonal into an octahedron.

    The diagonals are the edges of valence 4 with a 4-cycle link; their stars
    must partition the tetrahedra.
    """
    if c.dim != 3:
        raise StructureError("octahedralization needs a 3-dimensional complex")
    cands = octahedral_edges(c)
    stars = {e: frozenset(c.facets_containing(e)) for e, _ in cands}
    chosen = _exact_cover(set(c.facets), [e for e, _ in cands], stars)
    if chosen is None:
        raise StructureError("the tetrahedra are not partitioned by stars of 4-valent edges")
    cycle = dict(cands)
    octs = []
    for e in chosen:
        a, b, x, y = cycle[e]
        octs.append(Octahedron((tuple(e), (a, x), (b, y))))
    return OctahedralDecomposition(c, sorted(chosen), octs)


def _exact_cover(universe: set, options: list, covers: dict):
    by_elem = defaultdict(list)
    for o in options:
        for x in covers[o]:
            by_elem[x].append(o)

    def search(left: set, used: set, chosen: list):
        if not left:
            return list(chosen)
        x = min(left, key=lambda y: (len(by_elem[y]), y))
        for o in by_elem[x]:
            if covers[o] & used:
                continue
            chosen.append(o)
            out = search(left - covers[o], used | covers[o], chosen)
            if out is not None:
                return out
            chosen.pop()
        return None

    return search(set(universe), set(), [])


def _is_cube_boundary(squares: list[tuple[int, int, int, int]]) -> bool:
    edges = defaultdict(int)
    verts = defaultdict(int)
    for sq in squares:
        for i in range(4):
            edges[simplex((sq[i], sq[(i + 1) % 4]))] += 1
            verts[sq[i]] += 1
    if len(squares) != 6 or len(verts) != 8 or len(edges) != 12:
        return False
    if any(k != 2 for k in edges.values()) or any(k != 3 for k in verts.values()):
        return False
    adj = defaultdict(set)
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {next(iter(adj))}
    stack = list(seen)
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == 8


def lift_octahedra(dec: OctahedralDecomposition) -> tuple[SimplicialComplex, list[Octahedron]]:
    """Orientation double cover with the octahedral cells lifted."""
    w = nontrivial_gf2_cocycle(dec.complex)
    if w is None:
        raise StructureError("complex has no nontrivial double cover")
    cover, deck = double_cover(dec.complex, w)
    octs = octahedralize(cover).octahedra
    return cover, octs


def verify_24cell_cover(c: SimplicialComplex) -> CertStatus:
    """Octahedralize, lift to the double cover and check the 24-cell's combinatorics."""
    dec = octahedralize(c)
    cover, octs = lift_octahedra(dec)
    figs = defaultdict(list)
    for o in octs:
        for v in o.vertices:
            figs[v].append(o.vertex_figure(v))
    bad = [v for v in sorted(figs) if not _is_cube_boundary(figs[v])]
    evidence = {"octahedra": len(dec.octahedra), "cover_vertices": len(cover.vertices),
                "cover_octahedra": len(octs), "bad_vertex_figures": bad}
    ok = len(cover.vertices) == 24 and len(octs) == 24 and not bad and len(figs) == 24
    return CertStatus(CERTIFIED if ok else FAIL, evidence)
