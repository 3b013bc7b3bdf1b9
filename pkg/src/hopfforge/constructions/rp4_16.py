"""The 16-vertex RP^4 as the antipodal quotient of a centrally symmetric 5-polytope.

The polytope has 32 vertices in the hyperplane ``sum x = 0`` of R^6: a
regular simplex ``i -> (6 e_i - 1) / sqrt5``, its negative ``i'``, and for
each 3-subset ``A`` of {1..6} the point with entries +1 on ``A`` and -1
elsewhere.  Dropping the sixth coordinate is an affine isomorphism onto
R^5; all arithmetic is exact over Q(sqrt5).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..complex import Simplex, SimplicialComplex, antipodal_quotient
from ..errors import PolytopeError
from ..exact.qsqrt5 import SQRT5, QSqrt5, qsqrt5_dot
from ..recognition import CERTIFIED, CertStatus, is_closed_pseudomanifold
from ..symmetry import GroupAction, Permutation, orbit

SIX = (1, 2, 3, 4, 5, 6)

# large-orbit labels of the 16-vertex triangulation as pairs of complementary triples
TRIPLE_LABELS = {
    1: (1, 2, 4), 2: (1, 4, 6), 3: (1, 2, 5), 4: (1, 4, 5), 5: (1, 3, 4),
    6: (1, 5, 6), 7: (1, 3, 5), 8: (1, 2, 6), 9: (1, 2, 3), 10: (1, 3, 6),
}

# generators of the S6 action in the 16-vertex labelling
RP4_16_GENERATORS = ("(1 2 3 4 5 10)(6 8 9)(7)(11 12 13 14 15 16)", "(2 7)(4 10)(5 6)(11 12)")
RP4_16_ORBITS = ((1, 2, 4, 5, 11), (1, 2, 4, 11, 13))


@dataclass(frozen=True)
class PolytopeQSqrt5:
    """Labelled points with the antipodal map and the symmetry generators."""

    keys: tuple            # ("v", i, +-1) for i and i'; ("t", A) for the triple point on A
    points: tuple          # 5 coordinates each, sixth dropped
    antipode: tuple[int, ...]
    generators: tuple[Permutation, ...]

    def index(self, key) -> int:
        return self.keys.index(key)

    def label(self, i: int) -> str:
        k = self.keys[i]
        if k[0] == "v":
            return f"{k[1]}" + ("" if k[2] > 0 else "'")
        a = sorted(k[1])
        b = [x for x in SIX if x not in a]
        return "(" + "".join(map(str, a)) + ")(" + "".join(f"{x}'" for x in b) + ")"


def _point(key) -> list[QSqrt5]:
    if key[0] == "v":
        _, i, s = key
        coords = [QSqrt5(Fraction(s * (6 if j == i else 0) - s), 0) / SQRT5 for j in SIX]
    else:
        coords = [QSqrt5(1 if j in key[1] else -1, 0) for j in SIX]
    return coords[:5]


def polytope_points() -> PolytopeQSqrt5:
    keys = [("v", i, 1) for i in SIX] + [("v", i, -1) for i in SIX]
    keys += [("t", frozenset(a)) for a in combinations(SIX, 3)]
    idx = {k: n for n, k in enumerate(keys)}

    def act(fn):
        out = {}
        for k, n in idx.items():
            if k[0] == "v":
                out[n] = idx[("v", fn(k[1]), k[2])]
            else:
                out[n] = idx[("t", frozenset(fn(x) for x in k[1]))]
        return Permutation(out)

    t = act(lambda x: x % 6 + 1)
    s = act(lambda x: {1: 2, 2: 1}.get(x, x))
    anti = []
    for k in keys:
        anti.append(idx[("v", k[1], -k[2])] if k[0] == "v" else idx[("t", frozenset(SIX) - k[1])])
    r = Permutation(dict(enumerate(anti)))
    return PolytopeQSqrt5(tuple(keys), tuple(tuple(_point(k)) for k in keys), tuple(anti), (t, s, r))


def _solve(a: list[list[QSqrt5]], b: list[QSqrt5]) -> list[QSqrt5] | None:
    n = len(a)
    m = [row[:] + [bi] for row, bi in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = QSqrt5(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def facet_normal(poly: PolytopeQSqrt5, facet: Sequence[int]) -> list[QSqrt5]:
    """Normal ``N`` with ``N . p = 1`` on the facet's vertices."""
    sol = _solve([list(poly.points[i]) for i in facet], [QSqrt5(1)] * len(facet))
    if sol is None:
        raise PolytopeError(f"vertices {facet} are affinely dependent")
    return sol


def certify_facet(poly: PolytopeQSqrt5, facet: Sequence[int], normal=None, value=None) -> None:
    """Exact side test: facet vertices on ``N . x = value``, all others strictly below."""
    if normal is None:
        normal, value = facet_normal(poly, facet), QSqrt5(1)
    fs = set(facet)
    for i, p in enumerate(poly.points):
        v = qsqrt5_dot(normal, p)
        if i in fs:
            if v != value:
                raise PolytopeError(f"vertex {poly.label(i)} is off the hyperplane of {facet}")
        elif not v < value:
            raise PolytopeError(f"vertex {poly.label(i)} is not strictly inside facet {facet}")


def delta_facets(poly: PolytopeQSqrt5) -> tuple[Simplex, Simplex]:
    ix = poly.index
    d1 = (ix(("v", 1, 1)),) + tuple(ix(("t", frozenset((1, 2, j)))) for j in (3, 4, 5, 6))
    d2 = (ix(("v", 1, 1)), ix(("v", 2, -1))) + tuple(ix(("t", frozenset(a))) for a in
                                                       ((1, 3, 4), (1, 3, 5), (1, 4, 5)))
    return tuple(sorted(d1)), tuple(sorted(d2))


def normals_n1_n2() -> tuple[tuple[list[QSqrt5], QSqrt5], tuple[list[QSqrt5], QSqrt5]]:
    """The two explicit normals and their values ``6/sqrt5`` and ``3/(3 - sqrt5)``."""
    one = QSqrt5(1)
    n1 = [one + one / SQRT5, SQRT5 - one, QSqrt5(0), QSqrt5(0), QSqrt5(0)]
    q = SQRT5 / (QSqrt5(6) - QSqrt5(2) * SQRT5)
    n2 = [QSqrt5(Fraction(3, 4)) + q, QSqrt5(Fraction(3, 4)) - q, one, one, one]
    return (n1, QSqrt5(6) / SQRT5), (n2, QSqrt5(3) / (QSqrt5(3) - SQRT5))


@dataclass
class PolytopeFacets:
    poly: PolytopeQSqrt5
    orbits: list[list[Simplex]]

    @property
    def facets(self) -> list[Simplex]:
        return sorted(f for o in self.orbits for f in o)


def polytope_facets() -> PolytopeFacets:
    poly = polytope_points()
    g = GroupAction(poly.generators, range(32))
    return PolytopeFacets(poly, [orbit(d, g) for d in delta_facets(poly)])


def verify_polytope_facets() -> CertStatus:
    """Exact certificate that the two facet orbits make up the whole boundary."""
    pf = polytope_facets()
    poly = pf.poly
    (n1, c1), (n2, c2) = normals_n1_n2()
    d1, d2 = delta_facets(poly)
    certify_facet(poly, d1, n1, c1)
    certify_facet(poly, d2, n2, c2)
    for f in pf.facets:
        certify_facet(poly, f)
    boundary = SimplicialComplex(pf.facets)
    if not is_closed_pseudomanifold(boundary, 4):
        raise PolytopeError("certified facets do not close up; the hull is incomplete")
    anti = poly.antipode
    for f in pf.facets:
        for u, v in combinations(f, 2):
            if anti[u] == v:
                raise PolytopeError(f"facet {f} contains an antipodal pair")
    return CertStatus(CERTIFIED, {
        "orbit_sizes": [len(o) for o in pf.orbits],
        "facets": len(pf.facets),
        "normals": {"N1": str(c1), "N2": str(c2)},
        "method": "exact Q(sqrt5) side tests on every facet; ridge closure",
    })


def _rp4_label(poly: PolytopeQSqrt5):
    by_triple = {frozenset(t): lab for lab, t in TRIPLE_LABELS.items()}
    out = {}
    for i, k in enumerate(poly.keys):
        if k[0] == "v":
            out[i] = 10 + k[1]
        else:
            a = k[1] if frozenset(k[1]) in by_triple else frozenset(SIX) - k[1]
            out[i] = by_triple[frozenset(a)]
    return out


def build_rp4_minimal_16(verify: bool = True) -> SimplicialComplex:
    """Quotient of the polytope boundary by the central symmetry, in the S6 labelling."""
    if verify:
        verify_polytope_facets()
    pf = polytope_facets()
    sphere = SimplicialComplex(pf.facets)
    anti = pf.poly.antipode
    lab = _rp4_label(pf.poly)
    return antipodal_quotient(sphere, lambda v: anti[v], label=lambda v: lab[v])


def rp4_16_from_generators() -> SimplicialComplex:
    g = GroupAction([Permutation.parse(p) for p in RP4_16_GENERATORS], range(1, 17))
    facets = set()
    for s in RP4_16_ORBITS:
        facets.update(orbit(s, g))
    return SimplicialComplex(sorted(facets))
