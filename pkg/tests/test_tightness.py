from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hopfforge.complex import SimplicialComplex, induced_subcomplex
from hopfforge.exact import strict_separation_feasible
from hopfforge.homology import induced_map_injective
from hopfforge.recognition import collapse_onto
from hopfforge.symmetry import group_elements, orbit
from hopfforge.tightness import (cross6, edge_graph_complete_check, empty_triangles, halfspace_subsets, p12_group,
                                 signed_permutation, verify_tightness)


def _brute_halfspace(points):
    labels = sorted(points)
    out = []
    for m in range(len(labels) + 1):
        for w in combinations(labels, m):
            if strict_separation_feasible([points[v] for v in w], [points[v] for v in labels if v not in w]):
                out.append(w)
    return sorted(out, key=lambda w: (len(w), w))


@pytest.fixture(scope="module")
def cross_subsets():
    return halfspace_subsets(cross6().coordinates())


def test_small_point_sets():
    assert halfspace_subsets({5: (0, 0)}) == [(), (5,)]
    tet = {0: (0, 0, 0), 1: (1, 0, 0), 2: (0, 1, 0), 3: (0, 0, 1)}
    assert len(halfspace_subsets(tet)) == 16


def test_cross_polytope_subsets(cross_subsets):
    emb = cross6()
    pairs = [set(p) for p in emb.diagonals()]

    def antipode_free(w):
        return all(not p <= set(w) for p in pairs)

    expected = set()
    for m in range(13):
        for w in combinations(range(1, 13), m):
            comp = tuple(v for v in range(1, 13) if v not in w)
            if antipode_free(w) or antipode_free(comp):
                expected.add(w)
    assert set(cross_subsets) == expected
    assert len(cross_subsets) == 1394


points3 = st.dictionaries(st.integers(0, 20), st.tuples(*[st.integers(-3, 3)] * 3), min_size=1, max_size=6)


@settings(max_examples=25)
@given(points3)
def test_halfspace_matches_brute_force(points):
    got = halfspace_subsets(points)
    assert got == _brute_halfspace(points)
    labels = sorted(points)
    subsets = set(got)
    assert all(tuple(v for v in labels if v not in w) in subsets for w in got)


def test_embedding_check(p12):
    emb = cross6()
    emb.check(p12)
    assert emb.antipode(1) == 7 and emb.antipode(12) == 6
    assert edge_graph_complete_check(p12, emb)
    assert edge_graph_complete_check(emb.polytope(), emb)
    fewer = SimplicialComplex(f for f in p12.facets if not {1, 2} <= set(f))
    assert not edge_graph_complete_check(fewer, emb)


def test_tight_default_mode(p12):
    r = verify_tightness(p12, cross6())
    assert r.tight and r.subsets_checked == 1394 and r.mode == "default"


def test_tight_paper_mode(p12):
    r = verify_tightness(p12, cross6(), paper_mode=True, group=p12_group())
    assert r.tight
    et = r.orbits["empty_triangles"]
    assert et["count"] == 64 and et["non_null_homologous"] == 64
    assert sorted(n for _, n in et["orbits"]) == [4, 12, 24, 24]
    orbit_of = {}
    g = p12_group()
    for rep, n in et["orbits"]:
        for t in orbit(rep, g):
            orbit_of[t] = n
    assert orbit_of[(1, 2, 4)] == 24 and orbit_of[(2, 3, 4)] == 12 and orbit_of[(1, 2, 6)] == 24
    assert orbit_of[(2, 6, 10)] == 4
    nf = r.orbits["non_face_tetrahedra"]
    assert nf["count"] == 192 and nf["two_triangles_two_empty"] == 192
    assert r.orbits["simplices_4"]["count"] == 192 and r.orbits["facets"]["count"] == 64


def test_facet_span_three_tetrahedra(p12):
    span = induced_subcomplex(p12, (1, 2, 5, 6, 9, 10))
    tets = [f for f in span.facets if len(f) == 4]
    assert len(tets) == 3
    assert all(len(set(a) & set(b)) == 2 for a, b in combinations(tets, 2))
    empties = [t for t in empty_triangles(p12) if set(t) <= {1, 2, 5, 6, 9, 10}]
    assert any(collapse_onto(span, t)["counts"] == (0, 0, 0, 0) for t in empties)


def test_group_extends_to_cross_polytope(p12):
    emb = cross6()
    elems = group_elements(p12_group())
    assert len(elems) == 24
    assert all(signed_permutation(g, emb) for g in elems)


@settings(max_examples=40)
@given(st.data())
def test_injection_invariant_under_symmetry(p12, cross_subsets, data):
    w = data.draw(st.sampled_from(cross_subsets))
    g = data.draw(st.sampled_from(group_elements(p12_group())))
    gw = tuple(sorted(g(v) for v in w))
    assert gw in set(cross_subsets)
    for k in (0, 1):
        assert (induced_map_injective(induced_subcomplex(p12, w), p12, k)
                == induced_map_injective(induced_subcomplex(p12, gw), p12, k))
