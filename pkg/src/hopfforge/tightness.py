"""Tightness of polyhedral embeddings into cross-polytopes.

An embedding of a triangulated manifold into the boundary of a polytope is
tight when every half-space preimage injects in GF(2)-homology.  A
half-space meets the triangulation in (the homotopy type of) the span of
the vertices it contains, so it suffices to check the finitely many vertex
subsets that are cut off by some hyperplane.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from .complex import Simplex, SimplicialComplex, induced_subcomplex, simplex
from .errors import StructureError
from .exact.lp import strict_separation_feasible
from .homology import induced_map_injective, is_null_homologous
from .symmetry import GroupAction, Permutation, orbit


@dataclass(frozen=True)
class CrossPolytopeEmbedding:
    """Vertex map onto ``+-e_1 .. +-e_d``: label -> (axis, sign)."""

    axes: tuple[tuple[int, int, int], ...]    # (label, axis 0..d-1, sign +-1)
    dim: int

    @classmethod
    def from_map(cls, mapping: Mapping[int, tuple[int, int]], dim: int | None = None) -> "CrossPolytopeEmbedding":
        d = dim if dim is not None else 1 + max(a for a, _ in mapping.values())
        return cls(tuple(sorted((v, a, s) for v, (a, s) in mapping.items())), d)

    @property
    def labels(self) -> list[int]:
        return [v for v, _, _ in self.axes]

    def coordinates(self) -> dict[int, tuple[Fraction, ...]]:
        out = {}
        for v, a, s in self.axes:
            x = [Fraction(0)] * self.dim
            x[a] = Fraction(s)
            out[v] = tuple(x)
        return out

    def antipode(self, v: int) -> int:
        where = {(a, s): u for u, a, s in self.axes}
        _, a, s = next(t for t in self.axes if t[0] == v)
        return where[(a, -s)]

    def diagonals(self) -> list[Simplex]:
        return sorted({simplex((v, self.antipode(v))) for v in self.labels})

    def polytope(self) -> SimplicialComplex:
        """Boundary complex of the cross-polytope on the embedded labels."""
        pairs = self.diagonals()
        return SimplicialComplex(simplex(choice) for choice in product(*pairs))

    def check(self, c: SimplicialComplex) -> None:
        """The non-edges of ``c`` must be exactly the diagonals."""
        verts = sorted(c.vertices)
        if verts != sorted(self.labels):
            raise StructureError("embedding and complex have different vertex sets")
        missing = sorted(e for e in combinations(verts, 2) if not c.has_face(e))
        if missing != self.diagonals():
            raise StructureError(f"missing edges {missing} are not the diagonals {self.diagonals()}")


def cross6() -> CrossPolytopeEmbedding:
    """``i -> e_i`` and ``i + 6 -> -e_i`` for the labels 1..12."""
    return CrossPolytopeEmbedding.from_map({i: ((i - 1) % 6, 1 if i <= 6 else -1) for i in range(1, 13)}, 6)


def halfspace_subsets(points: Mapping[int, Sequence] | Sequence[Sequence]) -> list[tuple[int, ...]]:
    """All vertex subsets cut off by an open half-space, ordered by size then lexicographically.

    A subset qualifies when it is strictly separable from its complement,
    decided by exact LP.  The list is closed under complements, so only
    subsets avoiding the last label are tested.
    """
    if not isinstance(points, Mapping):
        points = dict(enumerate(points))
    labels = sorted(points)
    if len(labels) > 16:
        raise ValueError("at most 16 points")
    if not labels:
        return [()]
    rest = labels[:-1]
    found = set()
    for m in range(len(rest) + 1):
        for w in combinations(rest, m):
            inside = [points[v] for v in w]
            outside = [points[v] for v in labels if v not in w]
            if strict_separation_feasible(inside, outside):
                found.add(w)
                found.add(tuple(v for v in labels if v not in w))
    return sorted(found, key=lambda w: (len(w), w))


@dataclass
class TightnessReport:
    tight: bool
    mode: str
    subsets_checked: int
    failures: list[dict] = field(default_factory=list)
    orbits: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.tight

    def to_dict(self) -> dict:
        return {"tight": self.tight, "mode": self.mode, "subsets_checked": self.subsets_checked,
                "failures": self.failures, "orbits": self.orbits}


def _injects(c: SimplicialComplex, w: Iterable[int], dims: Iterable[int]) -> list[int]:
    sub = induced_subcomplex(c, w)
    return [k for k in dims if not induced_map_injective(sub, c, k)]


def empty_triangles(c: SimplicialComplex) -> list[Simplex]:
    """Triangles whose edges are in ``c`` but which are not faces of ``c``."""
    out = []
    for t in combinations(sorted(c.vertices), 3):
        if not c.has_face(t) and all(c.has_face(e) for e in combinations(t, 2)):
            out.append(t)
    return out


def _orbit_table(simplices: Iterable[Simplex], group: GroupAction) -> list[tuple[Simplex, int]]:
    left = set(simplices)
    out = []
    while left:
        rep = min(left)
        orb = set(orbit(rep, group))
        out.append((rep, len(orb)))
        left -= orb
    return out


def tightness_bookkeeping(c: SimplicialComplex, emb: CrossPolytopeEmbedding,
                          group: GroupAction | None = None) -> dict:
    """Orbit statistics of the faces of the cross-polytope relative to ``c``.

    Empty triangles, non-faces among the tetrahedra, 4-simplices and facets
    of the polytope, each with what the vertex set spans in ``c``.
    """
    polytope = emb.polytope()
    out: dict = {}
    empties = empty_triangles(c)
    out["empty_triangles"] = {
        "count": len(empties),
        "non_null_homologous": sum(not is_null_homologous(c, [(a, b), (b, d), (a, d)], 1)
                                   for a, b, d in empties),
    }
    tets = [t for t in polytope.faces(3) if not c.has_face(t)]
    spans = []
    for t in tets:
        tri = sum(c.has_face(s) for s in combinations(t, 3))
        emp = sum(s in set(empties) for s in combinations(t, 3))
        spans.append((tri, emp))
    out["non_face_tetrahedra"] = {
        "count": len(tets),
        "two_triangles_two_empty": sum(1 for s in spans if s == (2, 2)),
    }
    out["simplices_4"] = {"count": len(polytope.faces(4))}
    out["facets"] = {"count": len(polytope.facets)}
    if group is not None:
        out["empty_triangles"]["orbits"] = [[list(r), n] for r, n in _orbit_table(empties, group)]
        out["non_face_tetrahedra"]["orbits"] = [[list(r), n] for r, n in _orbit_table(tets, group)]
        out["simplices_4"]["orbits"] = [[list(r), n] for r, n in _orbit_table(polytope.faces(4), group)]
        out["facets"]["orbits"] = [[list(r), n] for r, n in _orbit_table(polytope.facets, group)]
    return out


def verify_tightness(c: SimplicialComplex, emb: CrossPolytopeEmbedding, dims: Iterable[int] = (0, 1),
                     paper_mode: bool = False, group: GroupAction | None = None) -> TightnessReport:
    """Homology injection for every half-space vertex subset.

    The default mode enumerates all subsets and filters them by exact LP.
    ``paper_mode`` checks the vertex sets of the simplices of the
    cross-polytope (the antipode-free subsets of up to ``d`` vertices), leaving
    larger subsets to duality, and records the orbit bookkeeping.
    """
    emb.check(c)
    dims = tuple(dims)
    if paper_mode:
        polytope = emb.polytope()
        subsets = [f for k in range(polytope.dim + 1) for f in polytope.faces(k)]
    else:
        subsets = halfspace_subsets(emb.coordinates())
    failures = []
    for w in subsets:
        bad = _injects(c, w, dims)
        if bad:
            failures.append({"subset": list(w), "dims": bad})
    report = TightnessReport(not failures, "paper" if paper_mode else "default", len(subsets), failures)
    if paper_mode:
        report.orbits = tightness_bookkeeping(c, emb, group)
    return report


def edge_graph_complete_check(c: SimplicialComplex, polytope: SimplicialComplex | CrossPolytopeEmbedding) -> bool:
    """Does ``c`` contain every edge of the polytope?"""
    if isinstance(polytope, CrossPolytopeEmbedding):
        polytope = polytope.polytope()
    return all(c.has_face(e) for e in polytope.faces(1))


def p12_group() -> GroupAction:
    from .datasets import load_orbits

    return GroupAction(load_orbits("p12").perms, range(1, 13))


def signed_permutation(perm: Permutation, emb: CrossPolytopeEmbedding) -> bool:
    """Does ``perm`` map antipodal pairs to antipodal pairs (so it extends to the cross-polytope)?"""
    return all(perm(emb.antipode(v)) == emb.antipode(perm(v)) for v in emb.labels)
