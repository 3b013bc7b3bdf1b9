"""Immutable abstract simplicial complexes and face-level operations.

A complex is stored by its facets only: sorted tuples of non-negative
integer labels, kept in lexicographic order.  Every derived quantity
(faces, f-vector, links) is computed from the facets and cached.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from .errors import (
    InvalidCocycleError,
    LabelClashError,
    MalformedInputError,
    NonSimplicialQuotientError,
    NotAFaceError,
    UnsupportedFixedSetError,
)

Simplex = tuple  # strictly increasing tuple of ints


def simplex(vertices: Iterable[int]) -> Simplex:
    """Normalise an iterable of labels into a sorted tuple, rejecting repeats."""
    vs = tuple(sorted(int(v) for v in vertices))
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise MalformedInputError(f"repeated vertex {a} in simplex {vs}")
    if vs and vs[0] < 0:
        raise MalformedInputError(f"negative vertex label in {vs}")
    return vs


def _maximal(simplices: Iterable[Simplex]) -> list[Simplex]:
    """Drop every simplex contained in another one; return sorted list."""
    by_size: dict[int, set[Simplex]] = defaultdict(set)
    for s in simplices:
        by_size[len(s)].add(s)
    if not by_size:
        return []
    sizes = sorted(by_size, reverse=True)
    kept: list[Simplex] = list(by_size[sizes[0]])
    if len(sizes) > 1:
        incident: dict[int, list[frozenset]] = defaultdict(list)
        for s in kept:
            fs = frozenset(s)
            for v in s:
                incident[v].append(fs)
        for size in sizes[1:]:
            new = []
            for s in by_size[size]:
                if not s:
                    if not kept:
                        new.append(s)
                    continue
                pivot = min(s, key=lambda v: len(incident.get(v, ())))
                fs = frozenset(s)
                if not any(fs <= big for big in incident.get(pivot, ())):
                    new.append(s)
            for s in new:
                fs = frozenset(s)
                for v in s:
                    incident[v].append(fs)
            kept.extend(new)
    kept.sort()
    return kept


class SimplicialComplex:
    """A finite abstract simplicial complex given by its facets.

    ``modulus`` optionally records the cyclic label context (vertex ``x'``
    means ``modulus - x``); ``aliases`` maps labels to display names.  Both are
    presentation only and do not take part in equality.
    """

    __slots__ = ("_facets", "modulus", "aliases", "_cache")

    def __init__(self, facets: Iterable[Iterable[int]] = (), *, modulus: int | None = None,
                 aliases: Mapping[int, str] | None = None, _trusted: bool = False):
        if _trusted:
            self._facets = tuple(facets)
        else:
            self._facets = tuple(_maximal(simplex(f) for f in facets))
        self.modulus = modulus
        self.aliases = dict(aliases) if aliases else {}
        self._cache: dict = {}

    # -- basic accessors -------------------------------------------------

    @property
    def facets(self) -> tuple[Simplex, ...]:
        return self._facets

    @property
    def dim(self) -> int:
        if not self._facets:
            return -1
        return max(len(f) for f in self._facets) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        if "vertices" not in self._cache:
            self._cache["vertices"] = tuple(sorted({v for f in self._facets for v in f}))
        return self._cache["vertices"]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) <= 1

    def __len__(self) -> int:
        return len(self._facets)

    def __iter__(self):
        return iter(self._facets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, n={self.vertex_count}, facets={len(self._facets)})"

    def with_context(self, *, modulus=None, aliases=None) -> "SimplicialComplex":
        out = SimplicialComplex(self._facets, _trusted=True)
        out.modulus = self.modulus if modulus is None else modulus
        out.aliases = dict(self.aliases if aliases is None else aliases)
        return out

    def label(self, v: int) -> str:
        if v in self.aliases:
            return self.aliases[v]
        return str(v)

    # -- faces -------------------------------------------------------------

    def faces(self, k: int) -> tuple[Simplex, ...]:
        """All ``k``-dimensional faces, sorted."""
        key = ("faces", k)
        if key not in self._cache:
            if k < -1 or k > self.dim:
                out: tuple = ()
            elif k == -1:
                out = ((),)
            else:
                acc: set = set()
                for f in self._facets:
                    if len(f) == k + 1:
                        acc.add(f)
                    elif len(f) > k + 1:
                        acc.update(combinations(f, k + 1))
                out = tuple(sorted(acc))
            self._cache[key] = out
        return self._cache[key]

    def face_set(self, k: int) -> frozenset:
        key = ("face_set", k)
        if key not in self._cache:
            self._cache[key] = frozenset(self.faces(k))
        return self._cache[key]

    def all_faces(self) -> list[Simplex]:
        """Every non-empty face, ordered by dimension then lexicographically."""
        out: list[Simplex] = []
        for k in range(self.dim + 1):
            out.extend(self.faces(k))
        return out

    def has_face(self, s: Iterable[int]) -> bool:
        s = tuple(sorted(s))
        if not s:
            return True
        if len(s) - 1 > self.dim:
            return False
        return s in self.face_set(len(s) - 1)

    __contains__ = has_face

    def facets_containing(self, s: Iterable[int]) -> list[Simplex]:
        s = tuple(sorted(s))
        if not s:
            return list(self._facets)
        inc = self._incidence()
        best = min(s, key=lambda v: len(inc.get(v, ())))
        ss = set(s)
        return [f for f in inc.get(best, ()) if ss.issubset(f)]

    def _incidence(self) -> dict[int, list[Simplex]]:
        if "incidence" not in self._cache:
            inc: dict[int, list[Simplex]] = defaultdict(list)
            for f in self._facets:
                for v in f:
                    inc[v].append(f)
            self._cache["incidence"] = dict(inc)
        return self._cache["incidence"]

    def degree(self, v: int) -> int:
        """Number of edges at ``v``."""
        return len({w for f in self._incidence().get(v, ()) for w in f}) - 1

    def edges(self) -> tuple[Simplex, ...]:
        return self.faces(1)

    def to_dict(self) -> dict:
        return {"dim": self.dim, "n": self.vertex_count, "facets": [list(f) for f in self._facets]}


def from_facets(facets: Iterable[Iterable[int]], **context) -> SimplicialComplex:
    """Build a complex from arbitrary simplices, keeping the inclusion-maximal ones."""
    return SimplicialComplex(facets, **context)


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    if "fvec" not in c._cache:
        c._cache["fvec"] = tuple(len(c.faces(k)) for k in range(c.dim + 1))
    return c._cache["fvec"]


def euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** i * x for i, x in enumerate(f_vector(c)))


def _require_face(c: SimplicialComplex, s: Simplex) -> Simplex:
    s = simplex(s)
    if not c.has_face(s):
        raise NotAFaceError(f"{s} is not a face of the complex")
    return s


def star(c: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """Closed star: the closure of all facets containing ``s``."""
    s = _require_face(c, s)
    return SimplicialComplex(sorted(c.facets_containing(s)), modulus=c.modulus,
                             aliases=c.aliases, _trusted=True)


def link(c: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    s = _require_face(c, s)
    ss = set(s)
    return SimplicialComplex(
        (tuple(v for v in f if v not in ss) for f in c.facets_containing(s)),
        modulus=c.modulus, aliases=c.aliases)


def closure(faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex(faces)


def induced_subcomplex(c: SimplicialComplex, vertex_set: Iterable[int]) -> SimplicialComplex:
    """All faces of ``c`` whose vertices lie in ``vertex_set``."""
    w = set(vertex_set)
    return SimplicialComplex((tuple(v for v in f if v in w) for f in c.facets),
                             modulus=c.modulus, aliases=c.aliases)


def cone(c: SimplicialComplex, apex: int) -> SimplicialComplex:
    if apex in c.vertices:
        raise LabelClashError(f"apex {apex} is already a vertex")
    if not c.facets:
        return SimplicialComplex([(apex,)])
    return SimplicialComplex((f + (apex,) for f in c.facets), modulus=c.modulus,
                             aliases=c.aliases)


def union(*complexes: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex((f for c in complexes for f in c.facets))


def intersection(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Face-level intersection: all simplices that are faces of both."""
    if len(a.facets) > len(b.facets):
        a, b = b, a
    common = []
    for k in range(min(a.dim, b.dim), -1, -1):
        fs = b.face_set(k)
        common.extend(f for f in a.faces(k) if f in fs)
    return SimplicialComplex(common)


def is_subcomplex(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    if a.dim > b.dim:
        return False
    return all(b.has_face(f) for f in a.facets)


def relabel(c: SimplicialComplex, mapping: Mapping[int, int] | Callable[[int], int]) -> SimplicialComplex:
    fn = mapping if callable(mapping) else mapping.__getitem__
    return SimplicialComplex((tuple(fn(v) for v in f) for f in c.facets))


def stellar_subdivide(c: SimplicialComplex, s: Iterable[int], new_label: int) -> SimplicialComplex:
    """Replace the star of ``s`` by the cone from ``new_label`` over its boundary."""
    s = _require_face(c, s)
    if new_label in c.vertices:
        raise LabelClashError(f"label {new_label} already used")
    ss = set(s)
    out = []
    for f in c.facets:
        if ss.issubset(f):
            rest = tuple(v for v in f if v not in ss)
            for drop in s:
                out.append(rest + tuple(v for v in s if v != drop) + (new_label,))
        else:
            out.append(f)
    return SimplicialComplex(out, modulus=c.modulus, aliases=c.aliases)


def antipodal_quotient(c: SimplicialComplex, involution: Mapping[int, int] | Callable[[int], int],
                       label: Callable[[int], int] | None = None) -> SimplicialComplex:
    """Quotient of ``c`` by a free simplicial involution.

    Raises :class:`NonSimplicialQuotientError` when a face contains an
    antipodal pair or when two faces not related by the involution would be
    identified (equivalently: some vertex is joined to both ``x`` and its
    image).
    """
    iota = involution if callable(involution) else involution.__getitem__
    verts = c.vertices
    for v in verts:
        w = iota(v)
        if w == v or iota(w) != v:
            raise NonSimplicialQuotientError(f"involution not free/involutive at {v}")
    if label is None:
        def label(v):
            return min(v, iota(v))
    fset = set(c.facets)
    for f in c.facets:
        if tuple(sorted(iota(v) for v in f)) not in fset:
            raise NonSimplicialQuotientError(f"involution does not map facet {f} to a facet")
    for k in range(c.dim + 1):
        images = set()
        for f in c.faces(k):
            im = tuple(sorted({label(v) for v in f}))
            if len(im) != len(f):
                raise NonSimplicialQuotientError(f"face {f} contains an antipodal pair")
            images.add(im)
        if 2 * len(images) != len(c.faces(k)):
            raise NonSimplicialQuotientError(
                f"{k}-faces are identified non-simplicially ({len(c.faces(k))} -> {len(images)})")
    return SimplicialComplex(tuple(label(v) for v in f) for f in c.facets)


def double_cover(c: SimplicialComplex, cocycle: Mapping[Simplex, int],
                 offset: int | None = None) -> tuple[SimplicialComplex, dict[int, int]]:
    """Two-sheeted cover determined by a GF(2) 1-cocycle on the edges.

    Vertex ``v`` lifts to ``v`` and ``v + offset``.  Returns the cover and its
    deck involution.
    """
    w = {tuple(sorted(e)): int(x) % 2 for e, x in cocycle.items()}
    for t in c.faces(2):
        a, b, d = t
        if (w.get((a, b), 0) + w.get((b, d), 0) + w.get((a, d), 0)) % 2:
            raise InvalidCocycleError(f"cocycle does not vanish on the boundary of {t}")
    if offset is None:
        offset = max(c.vertices) + 1
    lifted = []
    for f in c.facets:
        v0 = f[0]
        for sheet in (0, 1):
            lifted.append(tuple(v + offset * ((sheet + (w.get((v0, v), 0) if v != v0 else 0)) % 2)
                                for v in f))
    deck = {}
    for v in c.vertices:
        deck[v] = v + offset
        deck[v + offset] = v
    return SimplicialComplex(lifted), deck


def fixed_point_complex(c: SimplicialComplex, rho: Mapping[int, int] | Callable[[int], int],
                        fresh_labels: bool = False) -> tuple[SimplicialComplex, dict[int, tuple]]:
    """Triangulated fixed point set of a simplicial involution.

    Each invariant face contributes the simplex spanned by the barycentres of
    its vertex orbits: fixed vertices keep their label, the midpoint of an
    edge ``(x rho(x))`` is labelled ``min(x, rho(x))`` (or a fresh label above
    the vertex range when ``fresh_labels``).  Returns the complex and a map
    from each new label to the vertex orbit it represents.
    """
    r = rho if callable(rho) else rho.__getitem__
    verts = c.vertices
    if all(r(v) == v for v in verts):
        raise UnsupportedFixedSetError("identity involution: fixed set is the whole complex")
    for v in verts:
        if r(r(v)) != v:
            raise UnsupportedFixedSetError(f"map is not an involution at {v}")
    fresh: dict[tuple, int] = {}
    top = max(verts) + 1

    def orbit_label(v):
        w = r(v)
        if w == v:
            return v
        key = (min(v, w), max(v, w))
        if key not in fresh:
            fresh[key] = top + len(fresh) if fresh_labels else key[0]
        return fresh[key]

    pieces = []
    for k in range(c.dim + 1):
        for f in c.faces(k):
            if tuple(sorted(r(v) for v in f)) == f:
                pieces.append({orbit_label(v) for v in f})
    labels: dict[int, tuple] = {}
    for v in verts:
        if r(v) == v:
            labels[v] = (v,)
    for key, lab in fresh.items():
        labels[lab] = key
    return SimplicialComplex(pieces), labels


# -- isomorphism -----------------------------------------------------------

def _vertex_invariants(c: SimplicialComplex) -> dict[int, tuple]:
    inc = c._incidence()
    inv = {}
    for v in c.vertices:
        lk = link(c, (v,))
        inv[v] = (len(inc[v]), f_vector(lk), tuple(sorted(len(f) for f in inc[v])))
    return inv


def _refine(c: SimplicialComplex, colors: dict[int, int]) -> dict[int, int]:
    """Colour refinement on the vertex-facet incidence structure."""
    inc = c._incidence()
    while True:
        sig = {}
        for v in c.vertices:
            ms = sorted(tuple(sorted(colors[w] for w in f if w != v)) for f in inc[v])
            sig[v] = (colors[v], tuple(ms))
        keys = sorted(set(sig.values()))
        index = {k: i for i, k in enumerate(keys)}
        new = {v: index[sig[v]] for v in c.vertices}
        if len(keys) == len(set(colors.values())):
            return new
        colors = new


def is_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> dict[int, int] | None:
    """Search a vertex bijection mapping facets of ``a`` onto facets of ``b``.

    Individualisation/refinement with backtracking; intended for complexes
    with at most a few hundred vertices.  Deterministic.
    """
    if f_vector(a) != f_vector(b) or a.vertex_count != b.vertex_count:
        return None
    ia, ib = _vertex_invariants(a), _vertex_invariants(b)
    if sorted(ia.values()) != sorted(ib.values()):
        return None
    keys = sorted(set(ia.values()))
    idx = {k: i for i, k in enumerate(keys)}
    ca = _refine(a, {v: idx[ia[v]] for v in a.vertices})
    cb = _refine(b, {v: idx[ib[v]] for v in b.vertices})
    bfacets = set(b.facets)
    a_inc = a._incidence()

    def consistent(mapping):
        for f in a.facets:
            if all(v in mapping for v in f):
                if tuple(sorted(mapping[v] for v in f)) not in bfacets:
                    return False
        return True

    def check_full(mapping):
        return all(tuple(sorted(mapping[v] for v in f)) in bfacets for f in a.facets)

    def search(ca, cb, mapping):
        # joint refinement keeps colour classes aligned between a and b
        if sorted(ca.values()) != sorted(cb.values()):
            return None
        classes_a: dict[int, list[int]] = defaultdict(list)
        classes_b: dict[int, list[int]] = defaultdict(list)
        for v, col in ca.items():
            classes_a[col].append(v)
        for v, col in cb.items():
            classes_b[col].append(v)
        for col in classes_a:
            if len(classes_a[col]) != len(classes_b.get(col, ())):
                return None
        if all(len(vs) == 1 for vs in classes_a.values()):
            m = {classes_a[col][0]: classes_b[col][0] for col in classes_a}
            return m if check_full(m) else None
        col = min((k for k, vs in classes_a.items() if len(vs) > 1),
                  key=lambda k: (len(classes_a[k]), k))
        v = min(classes_a[col])
        for w in sorted(classes_b[col]):
            trial = dict(mapping)
            trial[v] = w
            if not consistent(trial):
                continue
            fresh = max(ca.values()) + 1
            na = dict(ca)
            nb = dict(cb)
            na[v] = fresh
            nb[w] = fresh
            ra, rb = _refine_pair(a, b, na, nb)
            res = search(ra, rb, trial)
            if res is not None:
                return res
        return None

    return search(ca, cb, {})


def _refine_pair(a, b, ca, cb):
    """Refine two colourings with a shared signature dictionary."""
    inc_a, inc_b = a._incidence(), b._incidence()
    while True:
        sa, sb = {}, {}
        for v in a.vertices:
            sa[v] = (ca[v], tuple(sorted(tuple(sorted(ca[w] for w in f if w != v)) for f in inc_a[v])))
        for v in b.vertices:
            sb[v] = (cb[v], tuple(sorted(tuple(sorted(cb[w] for w in f if w != v)) for f in inc_b[v])))
        keys = sorted(set(sa.values()) | set(sb.values()))
        index = {k: i for i, k in enumerate(keys)}
        na = {v: index[sa[v]] for v in a.vertices}
        nb = {v: index[sb[v]] for v in b.vertices}
        if len(set(na.values())) == len(set(ca.values())) and len(set(nb.values())) == len(set(cb.values())):
            return na, nb
        ca, cb = na, nb


def is_closed_under(c: SimplicialComplex, perm: Callable[[int], int]) -> bool:
    fs = set(c.facets)
    return all(tuple(sorted(perm(v) for v in f)) in fs for f in c.facets)


# -- cubical complexes -------------------------------------------------------

class CubicalComplex:
    """Cubical complex whose cells are axis-parallel faces of a cube.

    Cells are keyed by a pattern over ``01*`` (``*`` marks a free
    coordinate); after an antipodal quotient several cells may share a
    vertex set, so the vertex set alone does not identify a cell.
    """

    __slots__ = ("vertices_of", "dims", "faces_of")

    def __init__(self, vertices_of: Mapping[str, frozenset], faces_of: Mapping[str, Sequence[str]]):
        self.vertices_of = {k: frozenset(v) for k, v in vertices_of.items()}
        self.dims = {k: k.count("*") for k in self.vertices_of}
        self.faces_of = {k: tuple(v) for k, v in faces_of.items()}

    @property
    def cells(self) -> list[str]:
        return sorted(self.vertices_of)

    @property
    def dim(self) -> int:
        return max(self.dims.values(), default=-1)

    def cells_of_dim(self, k: int) -> list[str]:
        return sorted(c for c, d in self.dims.items() if d == k)

    def vertices(self) -> list[int]:
        return sorted({v for c in self.cells_of_dim(0) for v in self.vertices_of[c]})

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.cells_of_dim(k)) for k in range(self.dim + 1))

    def cofaces(self, cell: str) -> list[str]:
        return sorted(c for c, fs in self.faces_of.items() if cell in fs)

    def quotient(self, involution: Callable[[int], int] | None = None) -> "CubicalComplex":
        """Antipodal quotient: patterns are identified with their 0/1 flip.

        Vertex labels become the smaller representative of ``{x, involution(x)}``;
        the default involution is the corner antipode ``x -> 2^m - 1 - x``.
        """
        m = len(next(iter(self.vertices_of), ""))
        if involution is None:
            top = (1 << m) - 1
            involution = lambda v: top - v  # noqa: E731
        lab = lambda v: min(v, involution(v))  # noqa: E731
        verts: dict[str, frozenset] = {}
        faces: dict[str, list] = {}
        for cell, vs in self.vertices_of.items():
            key = canonical_pattern(cell)
            img = frozenset(lab(v) for v in vs)
            if len(img) != len(vs):
                raise NonSimplicialQuotientError(f"cell {cell} contains an antipodal pair")
            verts[key] = img
            faces[key] = sorted({canonical_pattern(f) for f in self.faces_of.get(cell, ())})
        return CubicalComplex(verts, faces)


def flip_pattern(pattern: str) -> str:
    return pattern.translate(str.maketrans("01", "10"))


def canonical_pattern(pattern: str) -> str:
    """Representative of a cube face under the antipodal map."""
    return min(pattern, flip_pattern(pattern))


def pattern_vertices(pattern: str) -> frozenset:
    return frozenset(int("".join(bits), 2) for bits in _expand(pattern))


def cube_face_cells(m: int) -> dict[str, frozenset]:
    """All faces of [0,1]^m as patterns over '01*' mapped to their vertex sets.

    Vertex labels are the corner coordinates read as a binary number with the
    first coordinate most significant.
    """
    return {pattern: pattern_vertices(pattern) for pattern in _patterns(m)}


def _patterns(m):
    if m == 0:
        yield ""
        return
    for rest in _patterns(m - 1):
        for ch in "01*":
            yield ch + rest


def _expand(pattern):
    if not pattern:
        yield ""
        return
    head, tail = pattern[0], pattern[1:]
    for rest in _expand(tail):
        if head == "*":
            yield "0" + rest
            yield "1" + rest
        else:
            yield head + rest


def pattern_facets(pattern: str) -> list[str]:
    out = []
    for i, ch in enumerate(pattern):
        if ch == "*":
            for b in "01":
                out.append(pattern[:i] + b + pattern[i + 1:])
    return out


def cube_boundary(m: int) -> CubicalComplex:
    """Boundary complex of the ``m``-cube [0,1]^m."""
    verts = {}
    faces = {}
    for pat, vs in cube_face_cells(m).items():
        if pat.count("*") == m:
            continue
        verts[pat] = vs
        faces[pat] = pattern_facets(pat)
    return CubicalComplex(verts, faces)
