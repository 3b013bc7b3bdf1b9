from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from conftest import complexes
from hopfforge.complex import SimplicialComplex, euler_characteristic, f_vector, intersection
from hopfforge.homology import betti_gf2
from hopfforge.recognition import boundary_complex, is_closed_pseudomanifold
from hopfforge.symmetry import (
    GroupAction, PermCycle, Permutation, apply_perm, cyclic_orbit, expand_permcycle, group_order, is_automorphism,
    multiply_labels, orbit, standard_autos,
)


def permcycle_oracle(entries):
    """Every cyclic arrangement of the entries, started at every x mod n."""
    n = sum(entries)
    out = set()
    for seq in set(permutations(entries)):
        for x in range(n):
            verts, s = [], x
            for a in seq:
                verts.append(s % n)
                s += a
            out.add(tuple(sorted(verts)))
    return out


def test_parse_and_cycles():
    p = Permutation.parse("(1 2 3)(4 5)")
    assert p(1) == 2 and p(3) == 1 and p(5) == 4 and p(9) == 9
    assert p.order() == 6
    assert (p * p.inverse()).is_identity()
    assert Permutation.parse(p.cycle_string()) == p


def test_cyclic_orbits():
    assert len(cyclic_orbit((0, 1, 3, 4), 7)) == 7
    assert len(cyclic_orbit((0, 2, 5, 7, 10, 12), 15)) == 5
    assert orbit((0, 1, 2), GroupAction([Permutation()], range(3))) == [(0, 1, 2)]


@pytest.mark.parametrize("entries", [(1, 2, 4), (1, 2, 4, 8), (1, 1, 1, 4, 8), (1, 1, 2, 5), (1, 1, 1, 4)])
def test_permcycle_matches_oracle(entries):
    assert set(expand_permcycle(entries).facets) == permcycle_oracle(entries)


def test_permcycle_counts():
    torus = expand_permcycle([1, 2, 4, 8])
    assert len(torus.facets) == 90 and len(torus.vertices) == 15
    assert f_vector(torus) == (15, 105, 180, 90)
    assert len(expand_permcycle([1, 1, 1, 4, 8]).facets) == 60
    assert PermCycle((1, 2, 4, 8)).modulus == 15


def test_solid_torus_boundary_is_torus():
    solid = expand_permcycle([1, 1, 1, 4, 8])
    assert set(boundary_complex(solid).facets) == set(expand_permcycle([1, 2, 4, 8]).facets)


def test_klein_bottle_permcycle():
    kb = expand_permcycle([1, 1, 2, 5])
    assert len(kb.vertices) == 9
    assert is_closed_pseudomanifold(kb, 3)
    assert euler_characteristic(kb) == 0
    assert f_vector(kb) == (9, 36, 54, 27)
    # nonorientable: top GF(2) class exists but no integral one
    from hopfforge.homology import rational_betti

    assert betti_gf2(kb).betti[3] == 1 and rational_betti(kb)[3] == 0


def test_standard_automorphisms():
    a = standard_autos(3)
    torus, solid = expand_permcycle([1, 2, 4, 8]), expand_permcycle([1, 1, 1, 4, 8])
    for p in (a.tau, a.rho, a.sigma):
        assert is_automorphism(torus, p)
    assert is_automorphism(solid, a.tau) and is_automorphism(solid, a.rho)
    assert not is_automorphism(solid, a.sigma)
    assert a.sigma.order() == 4
    assert a.sigma_tilde() == Permutation.parse("(1 2 4 7)(3 6)")
    assert standard_autos(1).sigma == Permutation.parse("(1 2)")
    assert is_automorphism(torus, Permutation())


def test_sigma_multiples_meet_in_torus():
    solid = expand_permcycle([1, 1, 1, 4, 8])
    sigma = standard_autos(3).sigma
    mults = [apply_perm(solid, sigma ** i) for i in range(4)]
    assert len({m for m in mults}) == 4
    torus = expand_permcycle([1, 2, 4, 8])
    for a, b in combinations(mults, 2):
        assert intersection(a, b) == torus
    assert multiply_labels(solid, 2, 15) == mults[1]


def test_group_orders(p12):
    from hopfforge.constructions.rp4_16 import RP4_16_GENERATORS
    from hopfforge.datasets import load_orbits

    assert group_order(GroupAction(load_orbits("p12").perms, range(1, 13))) == 24
    assert group_order(GroupAction([Permutation.parse(g) for g in RP4_16_GENERATORS], range(1, 17))) == 720
    assert group_order(GroupAction([Permutation()], range(3))) == 1


@given(st.frozensets(st.integers(1, 12), min_size=1, max_size=5))
def test_orbit_size_divides_group_order(s):
    from hopfforge.datasets import load_orbits

    g = GroupAction(load_orbits("p12").perms, range(1, 13))
    assert 24 % len(orbit(sorted(s), g)) == 0


@given(complexes(), st.permutations(range(8)))
def test_apply_inverse_roundtrip(c, perm):
    p = Permutation(dict(enumerate(perm)))
    assert apply_perm(apply_perm(c, p), p.inverse()) == c


@given(st.permutations(range(6)), st.permutations(range(6)), st.permutations(range(6)))
def test_composition_associative(a, b, c):
    p, q, r = (Permutation(dict(enumerate(x))) for x in (a, b, c))
    assert (p * q) * r == p * (q * r)
    assert (p * q).inverse() == q.inverse() * p.inverse()
