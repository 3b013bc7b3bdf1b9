"""Acceptance suite: one test per criterion, summarized as PASS/FAIL lines at the end of the run.

Each criterion asserts its own wall-clock bound.  The CLI runs made along the
way are cached so the determinism criterion can replay them with four workers
and compare byte for byte.
"""

from __future__ import annotations

import contextlib
import io
import json
import time
from itertools import combinations
from pathlib import Path

import pytest

from hopfforge.cli import run
from hopfforge.complex import euler_characteristic, f_vector, intersection, is_isomorphic, union
from hopfforge.constructions.cubes import (build_rp3_11, build_rp3_nice_12, build_rp4_nice_data, _orientable,
                                          extract_klein_bottles, search_min_incoherent)
from hopfforge.constructions.octahedra import lift_octahedra, octahedralize, verify_24cell_cover
from hopfforge.constructions.polytopes import KCyclicSpec, cyclic_polytope_boundary, k_cyclic_boundary
from hopfforge.constructions.projective import build_cp2_equilibrium, build_cp3_data, cp2_automorphisms, sigma_balls
from hopfforge.constructions.rp4_16 import (build_rp4_minimal_16, delta_facets, normals_n1_n2, polytope_facets,
                                            rp4_16_from_generators, verify_polytope_facets)
from hopfforge.datasets import load_complex, load_orbits
from hopfforge.exact import SQRT5, QSqrt5, qsqrt5_dot
from hopfforge.homology import betti_gf2, homology_integral, rational_betti
from hopfforge.hopf import (DefectReport, assemble_perfect_equilibrium, check_no_perfect_cp3,
                            perfectness_certificate, solid_torus_multiples, standard_torus, verify_equilibrium,
                            verify_hopf)
from hopfforge.io import read_scx, write_scx
from hopfforge.recognition import (CERTIFIED, HEURISTIC, collapse_onto, is_closed_pseudomanifold,
                                   is_combinatorial_manifold, sphere_check)
from hopfforge.symmetry import expand_permcycle, is_automorphism, standard_autos
from hopfforge.tightness import cross6, p12_group, verify_tightness

_CLI: dict[tuple, tuple[str, str]] = {}


def cli(*argv: str, stdin: str | None = None, workers: int = 1) -> tuple[str, dict]:
    """Run the CLI in-process; returns (stdout, report dict).  Cached per argv."""
    key = (argv, stdin, workers)
    if key not in _CLI:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            rep = run([*argv, "--workers", str(workers)], stdin=io.StringIO(stdin) if stdin is not None else None)
        _CLI[key] = (buf.getvalue(), rep.to_json())
    out, text = _CLI[key]
    return out, json.loads(text)


@pytest.fixture(scope="module")
def workdir(tmp_path_factory) -> Path:
    return tmp_path_factory.mktemp("acceptance")


class Clock:
    def __init__(self, limit: float):
        self.limit = limit
        self.start = time.perf_counter()

    def check(self) -> None:
        elapsed = time.perf_counter() - self.start
        assert elapsed < self.limit, f"took {elapsed:.1f}s, bound {self.limit}s"


def _multiply(facets, m: int, n: int) -> frozenset:
    return frozenset(tuple(sorted(m * v % n for v in f)) for f in facets)


@pytest.mark.criterion(1, "permcycle torus, automorphisms and the four solid-torus multiples")
def test_criterion_01_permcycle_torus():
    clock = Clock(5)
    scx, _ = cli("expand-permcycle", "1", "2", "4", "8")
    _, rep = cli("homology", "-", stdin=scx)
    assert rep["verdicts"]["homology"]["betti"] == [1, 3, 3, 1]
    torus = expand_permcycle([1, 2, 4, 8])
    assert len(torus.facets) == 3 * 2 * 1 * 15
    assert betti_gf2(torus).betti == (1, 3, 3, 1)
    autos = standard_autos(3)
    for p in (autos.tau, autos.rho, autos.sigma):
        assert is_automorphism(torus, p)
    base = expand_permcycle([1, 1, 1, 4, 8]).facets
    oracle = {_multiply(base, 2 ** j, 15) for j in range(4)}
    mults = solid_torus_multiples(3)
    assert {frozenset(m.facets) for m in mults} == oracle
    assert all(len(m.facets) == 60 for m in mults)
    for a, b in combinations(mults, 2):
        assert intersection(a, b) == torus
    clock.check()


def _s5_oracle() -> set:
    out = set()
    for i in (1, 2, 3):
        for g in load_orbits(f"s5-15-a{i}").generators:
            out.update(tuple(sorted((v + t) % 15 for v in g)) for t in range(15))
    return out


@pytest.mark.criterion(2, "S^5_15: manifold, sphere, Hopf decomposition")
def test_criterion_02_s5_15(s5_15):
    clock = Clock(120)
    gens = sum(len(load_orbits(f"s5-15-a{i}").generators) for i in (1, 2, 3))
    assert gens == 14
    oracle = _s5_oracle()
    assert set(s5_15.facets) == oracle
    # the expansion has 200 facets: one generator has a 5-element orbit
    assert len(oracle) == 200
    man = is_combinatorial_manifold(s5_15)
    assert man.status in (CERTIFIED, HEURISTIC)
    assert set(man.evidence["links"].values()) <= {CERTIFIED, HEURISTIC}
    sph = sphere_check(s5_15)
    assert sph.status == CERTIFIED and sph.evidence.get("method") == "bistellar"
    _, rep = cli("verify-hopf", *(f"dataset:s5-15-a{i}" for i in (1, 2, 3)), "--torus", "standard")
    assert rep["exit_code"] == 0 and rep["verdicts"]["hopf"]
    pieces = {i: load_complex(f"s5-15-a{i}") for i in (1, 2, 3)}
    dec = verify_hopf(s5_15, pieces, torus=standard_torus(3))
    assert dec.valid
    mults = {frozenset(m.facets) for m in solid_torus_multiples(3)}
    assert {frozenset(dec.piece(w).facets) for w in ((1, 2), (1, 3), (2, 3))} <= mults
    clock.check()


S7_FVECTOR = (31, 465, 4340, 21793, 54188, 69130, 43772, 10943)


@pytest.mark.criterion(3, "S^7: orbit counts, f-vector, handlebodies, central torus")
def test_criterion_03_s7():
    clock = Clock(15 * 60)
    orbs = [load_orbits(f"appendix-a{i}") for i in range(1, 5)]
    assert [len(o.generators) for o in orbs] == [127, 100, 85, 41]
    pieces = [load_complex(f"appendix-a{i}") for i in range(1, 5)]
    whole = union(*pieces)
    assert f_vector(whole) == S7_FVECTOR
    central = intersection(intersection(pieces[0], pieces[1]), intersection(pieces[2], pieces[3]))
    assert central == expand_permcycle([1, 2, 4, 8, 16])
    _, rep = cli("verify-hopf", *(f"dataset:appendix-a{i}" for i in range(1, 5)), "--torus", "standard")
    assert rep["exit_code"] == 0 and rep["verdicts"]["hopf"]
    certs = rep["witnesses"]["decomposition"]["certificates"]
    for i in "1234":
        ev = certs[i]["evidence"]
        assert certs[i]["status"] == HEURISTIC
        assert ev["signature"] == "B^6 x (S^1)^1"
        assert ev["betti"] == ev["morse"] == [1, 1, 0, 0, 0, 0, 0, 0]
    clock.check()


@pytest.mark.criterion(4, "k-cyclic polytopes certified")
def test_criterion_04_kcyclic(workdir):
    clock = Clock(10 * 60)
    c2, st2 = k_cyclic_boundary(KCyclicSpec((1, 2), 7))
    c74 = cyclic_polytope_boundary(7, 4)
    iso = is_isomorphic(c2, c74)
    assert st2.status == CERTIFIED and iso is not None
    assert {tuple(sorted(iso[v] for v in f)) for f in c2.facets} == set(c74.facets)
    c3, st3 = k_cyclic_boundary(KCyclicSpec((1, 2, 4), 15))
    assert st3.status == CERTIFIED and len(c3.facets) == 225
    out = workdir / "kcyclic31.scx"
    _, rep = cli("kcyclic", "--freqs", "1", "2", "4", "8", "--n", "31", "-o", str(out))
    assert rep["verdicts"]["certificate"] == CERTIFIED and rep["verdicts"]["facets"] == 10943
    assert rep["witnesses"]["evidence"]["facets"] == 10943
    appendix = union(*(load_complex(f"appendix-a{i}") for i in range(1, 5)))
    assert set(read_scx(out.read_text()).facets) == set(appendix.facets)
    clock.check()


@pytest.mark.criterion(5, "CP^2 with 10 vertices: homology, equilibrium, perfectness")
def test_criterion_05_cp2():
    clock = Clock(5)
    cp2 = build_cp2_equilibrium()
    assert len(cp2.vertices) == 10 and len(cp2.facets) == 42
    h = homology_integral(cp2)
    assert h.betti == (1, 0, 1, 0, 1) and not any(h.torsion)
    balls = sigma_balls(cyclic_polytope_boundary(7, 4), 7, 2)
    eq = verify_equilibrium(cp2, dict(enumerate(balls)), torus=standard_torus(2),
                            apexes={i: 7 + i for i in range(3)})
    assert eq.valid, eq.failures
    autos = cp2_automorphisms()
    assert all(is_automorphism(cp2, p) for p in autos.values())
    sigma = autos["sigma"]
    assert [sigma(7), sigma(8), sigma(9)] == [8, 9, 7]
    assert perfectness_certificate(cp2, 2).status == CERTIFIED
    clock.check()


@pytest.mark.criterion(6, "CP^3: defects on S^5_15 and the repaired 84-vertex manifold")
def test_criterion_06_cp3(s5_15, workdir):
    clock = Clock(10 * 60)
    rep = assemble_perfect_equilibrium(s5_15, 3)
    assert isinstance(rep, DefectReport) and rep.orbits

    def cls(s):
        return min(tuple(sorted((v + t) % 15 for v in s)) for t in range(15))

    # primes denote x' = -x mod 15
    wanted = {cls((0, 5, 10)), cls((3, 5, 10, 12)), cls((5, 6, 9, 10))}
    assert {cls(o.representative) for o in rep.maximal} == wanted
    sphere = workdir / "s5_15.scx"
    sphere.write_text(write_scx(s5_15))
    _, crep = cli("assemble-equilibrium", "--k", "3", "--sphere", str(sphere))
    assert crep["exit_code"] == 1 and crep["verdicts"]["perfect"] is False
    build = build_cp3_data(verify=True)
    cp3 = build.complex
    assert len(cp3.vertices) == 84
    assert rational_betti(cp3) == (1, 0, 1, 0, 1, 0, 1)
    _, mrep = cli("check-manifold", "build:cp3-84")
    links = mrep["witnesses"]["evidence"]["links"]
    assert len(links) == 84
    assert set(links.values()) <= {CERTIFIED, HEURISTIC}
    clock.check()


@pytest.mark.criterion(7, "RP^3 builds and the 24-cell double cover")
def test_criterion_07_rp3(p12):
    clock = Clock(30)
    twelve = build_rp3_nice_12()
    assert f_vector(twelve) == (12, 60, 96, 48)
    assert is_isomorphic(twelve, load_complex("table-5")) is not None
    eleven = build_rp3_11()
    assert f_vector(eleven) == (11, 52, 82, 41)
    for c in (twelve, eleven):
        assert betti_gf2(c).betti == (1, 1, 1, 1)
    _, rep = cli("isomorphic", "build:rp3-12", "dataset:table-5")
    assert rep["verdicts"]["isomorphic"]
    for c in (p12, twelve):
        st = verify_24cell_cover(c)
        assert st.status == CERTIFIED
        assert st.evidence["cover_vertices"] == 24 and st.evidence["cover_octahedra"] == 24
        assert not st.evidence["bad_vertex_figures"]
        cover, octs = lift_octahedra(octahedralize(c))
        assert len(cover.vertices) == 24 and len(octs) == 24
    clock.check()


@pytest.mark.criterion(8, "RP^4 with 21 vertices: incoherence search, adaptors, homology, Klein bottle")
def test_criterion_08_rp4_nice():
    clock = Clock(10 * 60)
    b = build_rp4_nice_data(0)
    assert len(b.incoherent) == 20
    best, argmin = search_min_incoherent()
    assert best == 20 and 0 in argmin
    _, rep = cli("search-cube-assignment")
    assert rep["verdicts"]["minimum"] == 20
    assert f_vector(b.skeleton3()) == (16, 100, 200, 120)
    assert all(len(spheres) == 2 for spheres in b.adaptor_spheres().values())
    c = b.complex
    assert f_vector(c) == (21, 180, 520, 600, 240)
    assert is_isomorphic(c, load_complex("appendix-b")) is not None
    h = homology_integral(c)
    assert h.torsion[1] == (2,) and h.torsion[3] == (2,)
    assert h.betti == (1, 0, 0, 0, 0) and euler_characteristic(c) == 1
    _, rep = cli("isomorphic", "build:rp4-nice", "dataset:appendix-b")
    assert rep["verdicts"]["isomorphic"]
    klein, _ = extract_klein_bottles(b)
    assert klein.dim == 3 and is_closed_pseudomanifold(klein, 3)
    assert not _orientable(klein) and euler_characteristic(klein) == 0
    assert betti_gf2(klein).betti == betti_gf2(expand_permcycle([1, 1, 2, 5])).betti
    clock.check()


@pytest.mark.criterion(9, "RP^4 with 16 vertices: exact polytope, quotient, neighbourliness")
def test_criterion_09_rp4_16():
    clock = Clock(120)
    pf = polytope_facets()
    poly = pf.poly
    (n1, c1), (n2, c2) = normals_n1_n2()
    assert c1 == QSqrt5(6) / SQRT5 and c2 == QSqrt5(3) / (QSqrt5(3) - SQRT5)
    for facet, normal, value in zip(delta_facets(poly), (n1, n2), (c1, c2)):
        on = [i for i, p in enumerate(poly.points) if qsqrt5_dot(normal, p) == value]
        below = [i for i, p in enumerate(poly.points) if qsqrt5_dot(normal, p) < value]
        assert on == sorted(facet) and len(below) == 27
    assert [len(o) for o in pf.orbits] == [60, 240]
    assert verify_polytope_facets().status == CERTIFIED
    c = build_rp4_minimal_16()
    assert f_vector(c) == (16, 120, 330, 375, 150)
    assert all(c.has_face(e) for e in combinations(sorted(c.vertices), 2))
    assert is_isomorphic(c, rp4_16_from_generators()) is not None
    _, rep = cli("fvector", "build:rp4-16")
    assert rep["verdicts"]["fvector"] == [16, 120, 330, 375, 150]
    clock.check()


@pytest.mark.criterion(10, "tightness of the 12-vertex RP^3 in the 6-dimensional cross-polytope")
def test_criterion_10_tightness(p12):
    clock = Clock(5 * 60)
    _, rep = cli("verify-tight", "dataset:p12", "--embedding", "cross6")
    assert rep["verdicts"]["tight"] and rep["witnesses"]["tightness"]["subsets_checked"] == 1394
    local = verify_tightness(p12, cross6(), paper_mode=True, group=p12_group())
    assert local.tight
    orbits = local.orbits
    assert sorted(n for _, n in orbits["empty_triangles"]["orbits"]) == [4, 12, 24, 24]
    assert orbits["non_face_tetrahedra"]["count"] == 192
    assert orbits["non_face_tetrahedra"]["two_triangles_two_empty"] == 192
    run_ = collapse_onto(p12, (1, 2, 4))
    assert run_ is not None and run_["counts"] == (0, 0, 1, 1)
    clock.check()


@pytest.mark.criterion(11, "census of the 15-vertex Hopf 5-spheres: no perfect CP^3")
def test_criterion_11_census():
    clock = Clock(5 * 60)
    census = check_no_perfect_cp3()
    by_name = {r.name: r for r in census.candidates}
    counts = [by_name[n].multiples[0] for n in ("5_15^7_3", "5_15^2_5", "5_15^2_2", "5_15^7_1")]
    assert counts == [2, 3, 2, 2]
    four_three = [r.name for r in census.candidates if r.sigma_orbit == 4 and min(r.multiples) == 3]
    assert four_three == ["5_15^2_5"] and census.suitable == ["5_15^2_5"]
    assert census.defects["5_15^2_5"].orbits
    assert not census.perfect_exists
    assert json.dumps(census.to_dict(), sort_keys=True) == json.dumps(check_no_perfect_cp3().to_dict(),
                                                                       sort_keys=True)
    clock.check()


@pytest.mark.criterion(12, "determinism: CLI reruns are byte-identical across worker counts")
def test_criterion_12_determinism(workdir):
    if not _CLI:  # running this criterion on its own
        scx, _ = cli("expand-permcycle", "1", "2", "4", "8")
        cli("fvector", "-", stdin=scx)
        cli("check-manifold", "build:rp3-12")
        cli("search-cube-assignment")
        cli("verify-tight", "dataset:p12", "--embedding", "cross6")
    replayed = 0
    for (argv, stdin, workers), (out, text) in sorted(_CLI.items(), key=lambda kv: repr(kv[0])):
        if workers != 1:
            continue
        out4, rep4 = cli(*argv, stdin=stdin, workers=4)
        assert out4 == out, argv
        assert _CLI[(argv, stdin, 4)][1] == text, argv
        replayed += 1
    assert replayed >= 5
    seeded = run(["check-manifold", "dataset:table-5", "--seed", "7"]).to_json()
    assert run(["check-manifold", "dataset:table-5", "--seed", "7", "--workers", "4"]).to_json() == seeded
    assert json.loads(seeded)["seeds"]["seed"] == 7
