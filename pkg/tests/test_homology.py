from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given

from conftest import complexes, octahedron, simplex_boundary
from hopfforge.complex import SimplicialComplex, euler_characteristic, induced_subcomplex
from hopfforge.homology import (ChainComplex, betti_gf2, cycle_basis, homology_integral, induced_map_injective,
                                is_null_homologous, nontrivial_gf2_cocycle, rational_betti)
from hopfforge.symmetry import expand_permcycle

RP2 = SimplicialComplex([(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5), (3, 4, 6),
                         (2, 4, 5), (3, 5, 6), (2, 4, 6)])


def _betti_oracle(c):
    """GF(2) Betti numbers from dense boundary matrices."""
    faces = {k: c.faces(k) for k in range(c.dim + 1)}

    def rank(k):
        if k <= 0 or k > c.dim:
            return 0
        idx = {f: i for i, f in enumerate(faces[k - 1])}
        rows = []
        for f in faces[k]:
            r = 0
            for i in range(len(f)):
                r ^= 1 << idx[f[:i] + f[i + 1:]]
            rows.append(r)
        basis = {}
        for r in rows:
            while r:
                h = r.bit_length() - 1
                if h not in basis:
                    basis[h] = r
                    break
                r ^= basis[h]
        return len(basis)

    return tuple(len(faces[k]) - rank(k) - rank(k + 1) for k in range(c.dim + 1))


def test_known_profiles(p12):
    assert betti_gf2(p12).betti == (1, 1, 1, 1)
    assert betti_gf2(expand_permcycle([1, 2, 4, 8])).betti == (1, 3, 3, 1)
    assert betti_gf2(SimplicialComplex([(0,)])).betti == (1,)
    assert betti_gf2(simplex_boundary(5)).betti == (1, 0, 0, 0, 1)


def test_integral_torsion():
    h = homology_integral(RP2)
    assert h.betti == (1, 0, 0) and h.torsion[1] == (2,)
    assert betti_gf2(RP2).betti == (1, 1, 1)


def test_cp2_and_rp4_integral():
    from hopfforge.constructions.projective import build_cp2_equilibrium
    from hopfforge.datasets import load_complex

    h = homology_integral(build_cp2_equilibrium())
    assert h.betti == (1, 0, 1, 0, 1) and not any(h.torsion)
    h = homology_integral(load_complex("appendix-b"))
    assert h.betti == (1, 0, 0, 0, 0)
    assert h.torsion[1] == (2,) and h.torsion[2] == () and h.torsion[3] == (2,) and h.torsion[4] == ()


def test_injectivity_in_p12(p12):
    span = induced_subcomplex(p12, (1, 2, 3, 4))
    assert induced_map_injective(span, p12, 1)
    assert induced_map_injective(p12, p12, 1) and induced_map_injective(p12, p12, 2)


def test_two_disjoint_generators_not_injective(p12):
    from hopfforge.tightness import empty_triangles

    empties = empty_triangles(p12)
    t1 = empties[0]
    t2 = next(t for t in empties if not set(t) & set(t1))
    a = SimplicialComplex([e for t in (t1, t2) for e in combinations(t, 2)])
    assert betti_gf2(a).betti[1] == 2
    assert not induced_map_injective(a, p12, 1)


def test_null_homologous(p12):
    tri = SimplicialComplex([(0, 1, 2)])
    assert is_null_homologous(tri, [(0, 1), (1, 2), (0, 2)], 1)
    assert not is_null_homologous(p12, [(1, 2), (2, 4), (1, 4)], 1)
    assert is_null_homologous(p12, [(1, 2), (2, 4), (1, 4), (2, 3), (3, 4), (2, 4)], 1)


def test_cycle_basis_and_cocycle():
    torus = expand_permcycle([1, 2, 4])
    # cycle space of the 7-vertex torus: 21 edges minus a spanning tree
    basis = cycle_basis(torus, 1)
    assert len(basis) == 21 - 6
    assert sum(not is_null_homologous(torus, z, 1) for z in basis) >= 2
    assert nontrivial_gf2_cocycle(simplex_boundary(4)) is None
    w = nontrivial_gf2_cocycle(RP2)
    assert w is not None and any(w.values())


def test_boundary_squared():
    ChainComplex(octahedron()).check_boundary_squared()
    ChainComplex(expand_permcycle([1, 1, 1, 4, 8])).check_boundary_squared()


@given(complexes())
def test_betti_matches_oracle_and_euler(c):
    b = betti_gf2(c).betti
    assert b == _betti_oracle(c)
    assert sum((-1) ** i * x for i, x in enumerate(b)) == euler_characteristic(c)


@given(complexes(max_vertex=7, max_facets=10))
def test_integral_consistent_with_gf2(c):
    h, g = homology_integral(c), betti_gf2(c)
    assert tuple(rational_betti(c)) == h.betti
    for k in range(len(g.betti)):
        t2 = sum(1 for t in h.torsion[k] if t % 2 == 0) if k < len(h.torsion) else 0
        t2_below = sum(1 for t in h.torsion[k - 1] if t % 2 == 0) if k >= 1 else 0
        assert g.betti[k] == h.betti[k] + t2 + t2_below


@given(complexes())
def test_identity_inclusion_injective(c):
    for k in range(c.dim + 1):
        assert induced_map_injective(c, c, k)
