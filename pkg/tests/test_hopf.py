from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hopfforge.complex import SimplicialComplex, f_vector, intersection, union
from hopfforge.constructions.cubes import build_rp3_nice_12, rp3_nice_zones
from hopfforge.constructions.polytopes import bicyclic_hopf, cyclic_polytope_boundary
from hopfforge.constructions.projective import build_cp2_equilibrium, sigma_balls
from hopfforge.datasets import load_complex
from hopfforge.errors import SearchBudgetError, StructureError
from hopfforge.hopf import (
    DefectReport, assemble_perfect_equilibrium, barycenter_rank_search, perfectness_certificate, pieces_from_orbits,
    s5_candidates, solid_torus, solid_torus_multiples, standard_torus, verify_equilibrium, verify_hopf,
)
from hopfforge.recognition import CERTIFIED
from hopfforge.symmetry import GroupAction, cyclic_orbit, group_order, standard_autos


@pytest.fixture(scope="module")
def s5_report(s5_15):
    pieces = {i: load_complex(f"s5-15-a{i}") for i in (1, 2, 3)}
    pieces.update({(1, 2): load_complex("s5-15-a12"), (2, 3): load_complex("s5-15-a23"),
                   (1, 3): load_complex("s5-15-a31")})
    return verify_hopf(s5_15, pieces, torus=standard_torus(3))


def _cyclic_class(s, n=15):
    return min(tuple(sorted((v + t) % n for v in s)) for t in range(n))


def test_c74_hopf():
    s, pcs = bicyclic_hopf(2)
    r = verify_hopf(s, {1: pcs["1"], 2: pcs["2"]})
    assert r.valid
    central = r.piece((1, 2))
    assert len(central.vertices) == 7 and f_vector(central) == (7, 21, 14)


def test_bicyclic_m3_hopf():
    s, pcs = bicyclic_hopf(3)
    r = verify_hopf(s, {1: pcs["1"], 2: pcs["2"], "12": pcs["12"]})
    assert r.valid, r.failures


def test_broken_decomposition_is_itemized():
    s, pcs = bicyclic_hopf(2)
    damaged = SimplicialComplex(pcs["1"].facets[1:])
    r = verify_hopf(s, {1: damaged, 2: pcs["2"]})
    assert not r.valid and r.failures
    with pytest.raises(StructureError):
        verify_hopf(s, {1: pcs["1"]}, k=2)


def test_s5_15_hopf(s5_report):
    assert s5_report.valid
    mults = {frozenset(m.facets) for m in solid_torus_multiples(3)}
    for w in ((1, 2), (1, 3), (2, 3)):
        assert frozenset(s5_report.pieces[w].facets) in mults


def test_intersection_lattice(s5_report):
    pieces = s5_report.pieces
    for w, v in combinations(sorted(pieces), 2):
        joined = tuple(sorted(set(w) | set(v)))
        assert intersection(pieces[w], pieces[v]) == pieces[joined]
    central = pieces[(1, 2, 3)]
    assert set(central.vertices) == set(range(15))


def test_solid_torus_helpers():
    assert f_vector(solid_torus(3))[-1] == 60
    assert len(solid_torus_multiples(3)) == 4
    assert len(standard_torus(2).vertices) == 7


def test_rank_search_k2():
    c = cyclic_polytope_boundary(7, 4)
    res = barycenter_rank_search(c, 7, (1, 2), 1.1)
    assert res is not None
    assert not [o for o in res.orbits if o.ambiguous]
    gens = {i: {_cyclic_class(f, 7) for f in p.facets} for i, p in res.pieces.items()}
    assert sorted(map(sorted, gens.values())) == [[(0, 1, 2, 3)], [(0, 1, 3, 4)]]
    assert verify_hopf(c, res.pieces).valid
    with pytest.raises(SearchBudgetError):
        barycenter_rank_search(c, 7, (1, 2), float("inf"))


def test_assembler_small_cases():
    cp1 = assemble_perfect_equilibrium(standard_torus(1), 1)
    assert not isinstance(cp1, DefectReport)
    assert len(cp1.vertices) == 5 and len(cp1.facets) == 6
    cp2 = assemble_perfect_equilibrium(cyclic_polytope_boundary(7, 4), 2)
    assert not isinstance(cp2, DefectReport)
    assert len(cp2.vertices) == 10 and len(cp2.facets) == 42
    assert perfectness_certificate(cp2, 2).status == CERTIFIED


def test_cp2_symmetry_group_order():
    from hopfforge.constructions.projective import cp2_automorphisms

    g = GroupAction(cp2_automorphisms().values(), range(10))
    assert group_order(g) == 42


def test_s5_15_defects(s5_15):
    rep = assemble_perfect_equilibrium(s5_15, 3)
    assert isinstance(rep, DefectReport) and not rep
    maximal = {o.representative for o in rep.maximal}
    assert maximal == {(0, 5, 10), (0, 1, 4, 5), (0, 2, 7, 9)}
    # the primed notation x' = -x mod 15: (3 5 5' 3') and (5 6 6' 5')
    assert _cyclic_class((3, 5, 10, 12)) == (0, 2, 7, 9)
    assert _cyclic_class((5, 6, 9, 10)) == (0, 1, 4, 5)
    assert all(o.link_components == 2 for o in rep.orbits)


def test_candidates_and_errata():
    cands = s5_candidates()
    assert set(cands) == {"5_15^7_3", "5_15^2_5", "5_15^2_2", "5_15^7_1"}
    assert [len(c.facets) for c in cands.values()] == [170, 200, 225, 230]
    raw = s5_candidates(apply_errata=False)
    assert len(raw["5_15^7_1"].facets) == 230


def test_equilibria():
    balls = sigma_balls(cyclic_polytope_boundary(7, 4), 7, 2)
    r = verify_equilibrium(build_cp2_equilibrium(), dict(enumerate(balls)), torus=standard_torus(2),
                           apexes={i: 7 + i for i in range(3)})
    assert r.valid, r.failures
    r = verify_equilibrium(build_rp3_nice_12(), rp3_nice_zones(), "real", apexes={i: 8 + i for i in range(4)})
    assert r.valid and r.extra["central_vertices"] == 8
    bad = verify_equilibrium(build_rp3_nice_12(), rp3_nice_zones(), "real", apexes={0: 9}, check_types=False)
    assert not bad.valid
    with pytest.raises(ValueError):
        verify_equilibrium(build_rp3_nice_12(), rp3_nice_zones(), "quaternionic")


def test_pieces_from_orbits():
    p = pieces_from_orbits({1: [(0, 1, 2, 3)], 2: [(0, 1, 3, 4)]}, 7)
    assert union(*p.values()) == cyclic_polytope_boundary(7, 4)


@settings(max_examples=20)
@given(st.sampled_from([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]))
def test_sigma_permutes_multiples(pair):
    sigma = standard_autos(3).sigma
    mults = solid_torus_multiples(3)
    a, b = pair
    from hopfforge.symmetry import apply_perm

    images = {frozenset(apply_perm(m, sigma).facets) for m in mults}
    assert images == {frozenset(m.facets) for m in mults}
    assert intersection(mults[a], mults[b]) == standard_torus(3)
