"""Equilibrium triangulations of complex and real projective spaces.

``CP^k`` is assembled from cones over a Hopf sphere at ``p_0`` and their
images under ``sigma: x -> 2x mod n`` with ``p_i -> p_{i+1}``.  When faces
outside the central torus end up in several balls their links split, and
the repair subdivides such faces inside one link component.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..complex import Simplex, SimplicialComplex, cone, fixed_point_complex, link, simplex, union
from ..errors import BuildError
from ..recognition import is_combinatorial_manifold
from ..symmetry import Permutation, expand_permcycle
from .polytopes import cyclic_polytope_boundary


def build_cp1() -> SimplicialComplex:
    """Double cone over the triangle ``0 1 2`` with apexes 3 and 4."""
    tri = SimplicialComplex([(0, 1), (1, 2), (0, 2)])
    return union(cone(tri, 3), cone(tri, 4))


def _sigma_shift(n: int, k: int) -> Callable[[int], int]:
    def f(x: int) -> int:
        if x < n:
            return (2 * x) % n
        return n + (x - n + 1) % (k + 1)
    return f


def sigma_balls(sphere: SimplicialComplex, n: int, k: int) -> list[SimplicialComplex]:
    """``B_0 = cone(p_0, sphere)`` and its images under sigma."""
    s = _sigma_shift(n, k)
    ball = cone(sphere, n)
    out = []
    for _ in range(k + 1):
        out.append(ball)
        ball = SimplicialComplex(tuple(sorted(s(v) for v in f)) for f in ball.facets)
    return out


def build_cp2_equilibrium() -> SimplicialComplex:
    """Ten vertices: the 7-vertex torus and apexes ``p_0, p_1, p_2 = 7, 8, 9``."""
    return union(*sigma_balls(cyclic_polytope_boundary(7, 4), 7, 2))


def cp2_automorphisms() -> dict[str, Permutation]:
    n = 7
    return {
        "tau": Permutation({x: (x + 1) % n for x in range(n)}),
        "rho": Permutation({x: (-x) % n for x in range(n)}),
        "sigma": Permutation.from_function(_sigma_shift(n, 2), range(10)),
    }


# -- repair of split links ---------------------------------------------------

def strong_components(c: SimplicialComplex) -> list[list[Simplex]]:
    """Facets grouped by adjacency through codimension-one faces."""
    fs = list(c.facets)
    parent = list(range(len(fs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ridges = defaultdict(list)
    for i, f in enumerate(fs):
        for j in range(len(f)):
            ridges[f[:j] + f[j + 1:]].append(i)
    for group in ridges.values():
        for i in group[1:]:
            parent[find(i)] = find(group[0])
    comps = defaultdict(list)
    for i, f in enumerate(fs):
        comps[find(i)].append(f)
    return sorted((sorted(v) for v in comps.values()), key=lambda v: v[0])


def subdivide_within(facets: set, face: Simplex, side: Iterable[Simplex], new: int) -> None:
    """Stellar subdivision of ``face`` restricted to the facets ``face + s``, s in ``side``."""
    fs = set(face)
    for s in side:
        f = simplex(fs | set(s))
        if f not in facets:
            raise BuildError(f"{f} is not a facet containing {face}")
        facets.remove(f)
        for x in face:
            facets.add(simplex((fs - {x}) | set(s) | {new}))


@dataclass
class RepairLog:
    """What a link repair did: subdivided faces with their new vertices."""

    subdivided: dict[int, Simplex] = field(default_factory=dict)
    sides: dict[int, set] = field(default_factory=dict)
    defects: list[Simplex] = field(default_factory=list)

    def vertex_of(self, face: Simplex) -> int:
        for v, f in self.subdivided.items():
            if f == face:
                return v
        raise KeyError(face)


def split_faces(c: SimplicialComplex, core: SimplicialComplex, dims: Iterable[int],
                vertex_bound: int) -> list[Simplex]:
    """Faces on the old vertices, outside ``core``, whose links are not strongly connected."""
    out = []
    for k in dims:
        for f in c.faces(k):
            if f[-1] >= vertex_bound or core.has_face(f):
                continue
            if len(strong_components(link(c, f))) > 1:
                out.append(f)
    return out


def _repair_orbit(facets: set, rep: Simplex, translates: list[Callable[[int], int]], anchor: set | None,
                  log: RepairLog) -> None:
    """Subdivide every translate of ``rep`` inside one component of its link.

    The component is chosen on ``rep``: the one sharing most vertices with
    ``anchor`` when given, else the lexicographically smallest.  Translates may share
    facets with faces repaired before them, so each translate takes the
    component of its current link that best matches the translated vertex
    set of the chosen one.
    """
    comps = strong_components(link(SimplicialComplex(facets), rep))
    if len(comps) < 2:
        raise BuildError(f"link of {rep} is already strongly connected")
    side_vertices = _vertices(comps[0]) if anchor is None else _vertices(_best_match(comps, anchor, rep))
    for g in translates:
        face = simplex(g(v) for v in rep)
        current = strong_components(link(SimplicialComplex(facets), face))
        if len(current) < 2:
            raise BuildError(f"link of {face} is already strongly connected")
        side = _best_match(current, {g(v) for v in side_vertices}, face)
        new = max(max(f) for f in facets) + 1
        subdivide_within(facets, face, side, new)
        log.subdivided[new] = face
        log.sides[new] = _vertices(side)


def _vertices(facets: Iterable[Simplex]) -> set:
    return {v for f in facets for v in f}


def _best_match(comps: list[list[Simplex]], target: set, face: Simplex) -> list[Simplex]:
    scores = sorted(((len(target & _vertices(c)), -i) for i, c in enumerate(comps)), reverse=True)
    if len(scores) > 1 and scores[0][0] == scores[1][0]:
        raise BuildError(f"cannot match a link component of {face}")
    return comps[-scores[0][1]]


def _translations(n: int, period: int) -> list[Callable[[int], int]]:
    return [(lambda t: (lambda v: (v + t) % n if v < n else v))(t) for t in range(period)]


def _orbit_period(face: Simplex, n: int) -> int:
    for t in range(1, n + 1):
        if simplex((v + t) % n for v in face) == face:
            return t
    return n


def repair_split_links(c: SimplicialComplex, core: SimplicialComplex, n: int,
                       ) -> tuple[SimplicialComplex, RepairLog]:
    """Repair faces outside ``core`` with split links, one translation orbit at a time.

    Triangles that are not faces of a split tetrahedron go first.  For a
    split tetrahedron ``Q`` the two split triangles in it are subdivided on
    the side of ``Q``'s smallest link component, so their new vertices are
    joined by an edge and ``Q`` becomes five tetrahedra on that side.
    """
    log = RepairLog()
    defects = split_faces(c, core, range(2, c.dim), n)
    log.defects = list(defects)
    facets = set(c.facets)
    reps = sorted({min(simplex((v + t) % n for v in f) for t in range(n)) for f in defects},
                  key=lambda f: (len(f), f))
    tets = [q for q in reps if len(q) == 4]
    tris = [t for t in reps if len(t) == 3]
    paired = {}
    for q in tets:
        inner = [t for t in defects if len(t) == 3 and set(t) <= set(q)]
        paired[q] = sorted(inner)
    in_tet = {t for ts in paired.values() for t in ts}
    for t in tris:
        orbit_members = [f for f in defects if len(f) == 3 and min(simplex((v + s) % n for v in f) for s in range(n)) == t]
        if any(m in in_tet for m in orbit_members):
            continue
        _repair_orbit(facets, t, _translations(n, _orbit_period(t, n)), None, log)
    for q in tets:
        comps = strong_components(link(SimplicialComplex(facets), q))
        anchor = _vertices(comps[0])
        period = _orbit_period(q, n)
        for t in paired[q]:
            _repair_orbit(facets, t, _translations(n, period), anchor, log)
    return SimplicialComplex(facets), log


# -- CP^3 with 84 vertices ------------------------------------------------------

def s5_15() -> SimplicialComplex:
    from ..datasets import load_complex
    return union(*(load_complex(f"s5-15-a{i}") for i in (1, 2, 3)))


@dataclass
class CP3Build:
    complex: SimplicialComplex
    unrepaired: SimplicialComplex
    log: RepairLog

    def real_part(self) -> SimplicialComplex:
        """Fixed set of complex conjugation ``x -> -x mod 15``, ``p_i`` fixed.

        Conjugation is an automorphism of the unrepaired complex only, so the
        fixed set is taken there and then refined by the repair: the centre
        of an invariant subdivided triangle is placed on its fixed edge, and
        for a pair of swapped triangles in an invariant tetrahedron the
        midpoint of the edge joining their centres is placed on the
        tetrahedron's fixed edge.  Each such edge is subdivided on the side
        matching the link component used by the repair.  Apexes are
        relabelled ``p_i -> 8 + i``.
        """
        n = 15
        rho = lambda x: (-x) % n if x < n else x  # noqa: E731
        lab = lambda x: min(x, rho(x)) if x < n else x - n + 8  # noqa: E731
        fp, _ = fixed_point_complex(self.unrepaired, rho)
        fp = SimplicialComplex(tuple(lab(v) if v >= n else v for v in f) for f in fp.facets)
        facets = set(fp.facets)
        by_face = {f: v for v, f in self.log.subdivided.items()}
        defects = set(self.log.defects)
        for v, f in sorted(self.log.subdivided.items()):
            img = simplex(rho(x) for x in f)
            if img == f:
                support = set(f)
            elif img in by_face and img > f and simplex(set(f) | set(img)) in defects:
                support = set(f) | set(img)
            else:
                continue
            edge = simplex({lab(x) for x in support})
            side = {lab(x) for x in self.log.sides[v] if x < n + 4 and rho(x) in self.log.sides[v]}
            comps = strong_components(link(SimplicialComplex(facets), edge))
            new = max(max(g) for g in facets) + 1
            subdivide_within(facets, edge, _best_match(comps, side, edge), new)
        return SimplicialComplex(facets)


def build_cp3_data(verify: bool = True, seed: int = 0, workers: int = 1) -> CP3Build:
    n = 15
    balls = sigma_balls(s5_15(), n, 3)
    raw = union(*balls)
    torus = expand_permcycle([1, 2, 4, 8])
    fixed, log = repair_split_links(raw, torus, n)
    if verify:
        left = split_faces(fixed, torus, range(2, fixed.dim), n)
        if left:
            raise BuildError(f"faces with split links remain after repair: {left[:5]}")
        st = is_combinatorial_manifold(fixed, seed=seed, workers=workers)
        if not st:
            raise BuildError(f"repaired CP^3 is not a combinatorial manifold: {st.evidence.get('witness')}")
    return CP3Build(fixed, raw, log)


def build_cp3_equilibrium(verify: bool = True, seed: int = 0, workers: int = 1) -> SimplicialComplex:
    return build_cp3_data(verify=verify, seed=seed, workers=workers).complex


# -- RP^3 with 15 vertices from fixed points ----------------------------------

FIXED_SPHERE = [
    (0, 1, 2), (1, 2, 3), (4, 5, 6), (5, 6, 7), (0, 2, 4), (2, 4, 6),
    (1, 3, 5), (3, 5, 7), (0, 1, 5), (0, 4, 5), (2, 3, 7), (2, 6, 7),
]

SIGMA_TILDE = Permutation.parse("(1 2 4 7)(3 6)")


def fixed_point_sphere() -> SimplicialComplex:
    """Fixed set of ``x -> -x mod 15`` on the Hopf 5-sphere, with midpoints labelled ``min(x, -x)``."""
    fp, _ = fixed_point_complex(s5_15(), lambda x: (-x) % 15)
    return fp


@dataclass
class RP3FixBuild:
    complex: SimplicialComplex
    unrepaired: SimplicialComplex
    defects: list[Simplex]
    subdivided: dict[int, Simplex]


def build_rp3_from_fixed_points_data(verify: bool = True) -> RP3FixBuild:
    sphere = SimplicialComplex(FIXED_SPHERE)
    balls = []
    ball = cone(sphere, 8)
    shift = lambda v: SIGMA_TILDE(v) if v < 8 else 8 + (v - 8 + 1) % 4  # noqa: E731
    for _ in range(4):
        balls.append(ball)
        ball = SimplicialComplex(tuple(sorted(shift(v) for v in f)) for f in ball.facets)
    raw = union(*balls)
    defects = [e for e in raw.faces(1) if e[-1] < 8 and len(strong_components(link(raw, e))) > 1]
    facets = set(raw.facets)
    subdivided = {}
    for e in defects:
        comps = strong_components(link(SimplicialComplex(facets), e))
        new = max(max(f) for f in facets) + 1
        subdivide_within(facets, e, comps[0], new)
        subdivided[new] = e
    out = SimplicialComplex(facets)
    if verify:
        st = is_combinatorial_manifold(out)
        if not st:
            raise BuildError(f"repaired RP^3 is not a combinatorial manifold: {st.evidence.get('witness')}")
    return RP3FixBuild(out, raw, defects, subdivided)


def build_rp3_from_fixed_points(verify: bool = True) -> SimplicialComplex:
    return build_rp3_from_fixed_points_data(verify).complex
