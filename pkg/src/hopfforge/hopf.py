"""Hopf decompositions of odd spheres and equilibrium decompositions of projective spaces.

A Hopf triangulation of ``S^{2k-1}`` carries subcomplexes ``A_w`` for every
non-empty ``w`` in ``{1..k}`` with ``A_w`` of type ``(S^1)^|w| x B^{2k-2|w|}``
and ``A_w & A_v = A_{w|v}``.  Equilibrium triangulations of ``CP^k`` and
``RP^k`` carry pieces ``B_w`` over ``{0..k}`` in the same way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from mpmath import iv

from .complex import Simplex, SimplicialComplex, intersection, is_subcomplex, link, simplex, union
from .errors import SearchBudgetError, StructureError
from .exact.interval import CertifiedInterval, trig_point_iv, working_precision
from .homology import betti_gf2
from .recognition import (
    CERTIFIED, FAIL, HEURISTIC, CertStatus, ball_check, boundary_complex, dehn_sommerville_residual,
    handlebody_check, is_closed_pseudomanifold, is_connected, is_pseudomanifold_with_boundary,
)
from .symmetry import Permutation, expand_permcycle, is_automorphism, multiply_labels, standard_autos

Subset = tuple[int, ...]


def _key(w) -> Subset:
    if isinstance(w, int):
        return (w,)
    if isinstance(w, str):
        return tuple(int(ch) for ch in w)
    return tuple(sorted(int(x) for x in w))


def _subsets(index: Sequence[int]) -> list[Subset]:
    return [w for m in range(1, len(index) + 1) for w in combinations(index, m)]


def standard_torus(k: int) -> SimplicialComplex:
    """The ``(2^{k+1}-1)``-vertex ``k``-torus given by permcycle ``1 2 4 ... 2^k``."""
    return expand_permcycle([2 ** i for i in range(k + 1)])


def solid_torus(k: int) -> SimplicialComplex:
    """Permcycle ``1 1 1 4 8 ... 2^k``: a ``(k+1)``-dimensional solid torus over :func:`standard_torus`."""
    if k < 2:
        raise ValueError("solid torus multiples need k >= 2")
    return expand_permcycle([1, 1, 1] + [2 ** j for j in range(2, k + 1)])


def solid_torus_multiples(k: int) -> list[SimplicialComplex]:
    n = 2 ** (k + 1) - 1
    base = solid_torus(k)
    return [multiply_labels(base, 2 ** j, n) for j in range(k + 1)]


@dataclass
class DecompositionReport:
    """Pieces indexed by subsets, their type certificates and every failed check."""

    index: tuple[int, ...]
    pieces: dict[Subset, SimplicialComplex]
    certificates: dict[Subset, CertStatus] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.valid

    def piece(self, w) -> SimplicialComplex:
        return self.pieces[_key(w)]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "index": list(self.index),
            "pieces": {"".join(map(str, w)): {"facets": len(c.facets), "dim": c.dim,
                                              "vertices": len(c.vertices)}
                       for w, c in sorted(self.pieces.items())},
            "certificates": {"".join(map(str, w)): st.to_dict() for w, st in sorted(self.certificates.items())},
            "failures": list(self.failures),
            **self.extra,
        }


def _intersections(tops: Mapping[int, SimplicialComplex], index: Sequence[int]) -> dict[Subset, SimplicialComplex]:
    out: dict[Subset, SimplicialComplex] = {(i,): tops[i] for i in index}
    for w in _subsets(index):
        if len(w) > 1:
            out[w] = intersection(out[w[:-1]], tops[w[-1]])
    return out


def _check_boolean_algebra(report: DecompositionReport, whole: SimplicialComplex, tops, claimed,
                           dim_of) -> None:
    idx = report.index
    for i in idx:
        if not is_subcomplex(tops[i], whole):
            report.failures.append(f"piece {i} is not a subcomplex")
    covered = set()
    for i in idx:
        covered.update(tops[i].facets)
    missing = [f for f in whole.facets if f not in covered]
    if missing:
        report.failures.append(f"pieces miss {len(missing)} facets, e.g. {missing[0]}")
    for i, j in combinations(idx, 2):
        both = set(tops[i].facets) & set(tops[j].facets)
        if both:
            report.failures.append(f"pieces {i} and {j} share the facet {min(both)}")
    for w, piece in report.pieces.items():
        want = dim_of(len(w))
        if piece.dim != want or not piece.is_pure:
            report.failures.append(f"piece {''.join(map(str, w))} has dimension {piece.dim}, expected pure {want}")
    for w, c in claimed.items():
        if len(w) > 1 and set(c.facets) != set(report.pieces[w].facets):
            report.failures.append(f"claimed piece {''.join(map(str, w))} differs from the intersection")


def verify_hopf(sphere: SimplicialComplex, pieces: Mapping, k: int | None = None,
                torus: SimplicialComplex | None = None, check_types: bool = True,
                seed: int = 0, tries: int = 10) -> DecompositionReport:
    """Check that the pieces ``A_1 .. A_k`` define a Hopf decomposition of ``sphere``.

    Pieces for larger subsets are optional; when given they must equal the
    intersections.  ``torus`` (or a piece for the full index set) is compared
    with the central intersection.
    """
    claimed = {_key(w): c for w, c in pieces.items()}
    if k is None:
        k = sum(1 for w in claimed if len(w) == 1)
    index = tuple(range(1, k + 1))
    absent = [i for i in index if (i,) not in claimed]
    if absent:
        raise StructureError(f"pieces for {absent} are missing")
    tops = {i: claimed[(i,)] for i in index}
    report = DecompositionReport(index, _intersections(tops, index))
    _check_boolean_algebra(report, sphere, tops, claimed, lambda m: 2 * k - m)
    if torus is not None and set(torus.facets) != set(report.pieces[index].facets):
        report.failures.append("central intersection is not the given torus")
    if check_types:
        for w, piece in sorted(report.pieces.items()):
            st = handlebody_check(piece, 2 * k - 2 * len(w), len(w), seed=seed, tries=tries)
            report.certificates[w] = st
            if not st:
                report.failures.append(f"piece {''.join(map(str, w))}: {st.evidence.get('reason')}")
    return report


# -- the barycenter-rank procedure ------------------------------------------------


@dataclass(frozen=True)
class RankedOrbit:
    """Cyclic orbit with the moduli of its barycentre coordinates and ranks."""

    generator: Simplex
    magnitudes: tuple[CertifiedInterval, ...]
    ranks: tuple[float, ...]
    direction: int | None    # 1-based direction with certified rank above the threshold

    @property
    def ambiguous(self) -> bool:
        return self.direction is None


def _orbit_reps(c: SimplicialComplex, n: int) -> list[Simplex]:
    return sorted({min(simplex((v + t) % n for v in f) for t in range(n)) for f in c.facets})


def rank_orbits(c: SimplicialComplex, n: int, frequencies: Sequence[int], threshold,
                bits: int = 128) -> list[RankedOrbit]:
    """Barycentre moduli of each cyclic orbit and the direction it is certainly assigned to.

    ``rk_i > p`` is decided as ``|b_i|^2 - p^2 |b_j|^2 > 0`` for all ``j != i``
    in interval arithmetic, so undecided comparisons leave the orbit ambiguous.
    """
    k = len(frequencies)
    p = Fraction(threshold) if threshold != float("inf") else None
    out = []
    with working_precision(bits):
        pts = [trig_point_iv(j, n, frequencies, bits) for j in range(n)]
        for rep in _orbit_reps(c, n):
            m = len(rep)
            sq = []
            for i in range(k):
                re = sum((pts[v][2 * i] for v in rep), iv.mpf(0)) / m
                im = sum((pts[v][2 * i + 1] for v in rep), iv.mpf(0)) / m
                sq.append(re * re + im * im)
            mags = tuple(CertifiedInterval.from_iv(iv.sqrt(s) if s.a >= 0 else iv.sqrt(iv.mpf([0, s.b])), bits)
                         for s in sq)
            ranks = []
            for i in range(k):
                r = float("inf")
                for j in range(k):
                    if j != i:
                        den = float(mags[j].upper + mags[j].lower) / 2
                        num = float(mags[i].upper + mags[i].lower) / 2
                        r = min(r, num / den if den else float("inf"))
                ranks.append(r)
            direction = None
            if p is not None:
                p2 = iv.mpf(p.numerator) ** 2 / iv.mpf(p.denominator) ** 2
                for i in range(k):
                    if all((sq[i] - p2 * sq[j]).a > 0 for j in range(k) if j != i):
                        direction = i + 1
            out.append(RankedOrbit(rep, mags, tuple(ranks), direction))
    return out


def _vertex_links_ok(c: SimplicialComplex, d: int) -> bool:
    bd = set(v for f in boundary_complex(c).facets for v in f)
    for v in c.vertices:
        lk = link(c, (v,))
        if lk.dim != d - 1 or not lk.is_pure or not is_connected(lk):
            return False
        want = (1,) + (0,) * (d - 1) if v in bd else (1,) + (0,) * (d - 2) + (1,)
        if betti_gf2(lk).betti != want:
            return False
    return True


def _candidate_ok(c: SimplicialComplex, d: int) -> bool:
    """Closedness, Dehn-Sommerville on the boundary, then vertex links."""
    if c.dim != d or not c.is_pure or not is_pseudomanifold_with_boundary(c):
        return False
    bd = boundary_complex(c)
    if not bd.facets or not is_closed_pseudomanifold(bd, d - 1):
        return False
    if any(dehn_sommerville_residual(bd, d - 1, 0)):
        return False
    return _vertex_links_ok(c, d)


@dataclass
class RankSearchResult:
    pieces: dict[int, SimplicialComplex]
    orbits: list[RankedOrbit]
    assignment: dict[Simplex, int]
    candidates_tried: int


def barycenter_rank_search(c: SimplicialComplex, n: int, frequencies: Sequence[int], threshold,
                           budget: int = 10_000, bits: int = 128, seed: int = 0) -> RankSearchResult | None:
    """Split the cyclic facet orbits of a k-cyclic boundary into solid tori by barycentre rank.

    Orbits with certified rank above ``threshold`` in direction ``i`` go to
    ``A_i``; the ambiguous ones are distributed direction by direction,
    trying subsets by increasing size and then lexicographically, with
    backtracking.  Returns ``None`` when every distribution fails.
    """
    from .symmetry import cyclic_orbit

    k = len(frequencies)
    ranked = rank_orbits(c, n, frequencies, threshold, bits)
    ambiguous = [r.generator for r in ranked if r.ambiguous]
    fixed = {i: [r.generator for r in ranked if r.direction == i] for i in range(1, k + 1)}
    if any(not v for v in fixed.values()):
        raise SearchBudgetError(
            f"threshold {threshold} leaves a direction without assigned orbits "
            f"({len(ambiguous)} ambiguous orbits)")
    tried = 0
    d = 2 * k - 1

    def build(gens):
        return SimplicialComplex(f for g in gens for f in cyclic_orbit(g, n))

    def search(i: int, left: list[Simplex], chosen: dict[int, list[Simplex]]):
        nonlocal tried
        if i == k:
            options = [tuple(left)]
        else:
            options = [s for m in range(len(left) + 1) for s in combinations(left, m)]
        for extra in options:
            tried += 1
            if tried > budget:
                raise SearchBudgetError(f"budget {budget} exhausted with {len(ambiguous)} ambiguous orbits")
            piece = build(fixed[i] + list(extra))
            if not _candidate_ok(piece, d):
                continue
            chosen[i] = list(extra)
            rest = [g for g in left if g not in extra]
            if i == k:
                return chosen
            got = search(i + 1, rest, chosen)
            if got is not None:
                return got
            del chosen[i]
        return None

    got = search(1, ambiguous, {})
    if got is None:
        return None
    pieces = {i: build(fixed[i] + got[i]) for i in range(1, k + 1)}
    for i, piece in pieces.items():
        if not handlebody_check(piece, 2 * k - 2, 1, seed=seed):
            return None
    assignment = {g: i for i in pieces for g in fixed[i] + got[i]}
    return RankSearchResult(pieces, ranked, assignment, tried)


# -- equilibrium assembly -----------------------------------------------------------


@dataclass
class DefectOrbit:
    """A cyclic orbit of faces with split links, with its sigma period and link components."""

    representative: Simplex
    size: int
    sigma_period: int
    link_components: int
    contained_in: Simplex | None = None

    def to_dict(self) -> dict:
        return {"representative": list(self.representative), "size": self.size,
                "sigma_period": self.sigma_period, "link_components": self.link_components,
                "contained_in": list(self.contained_in) if self.contained_in else None}


@dataclass
class DefectReport:
    """Faces outside the central torus whose links split in the union of the balls."""

    orbits: list[DefectOrbit]
    complex: SimplicialComplex | None = None

    @property
    def maximal(self) -> list[DefectOrbit]:
        return [o for o in self.orbits if o.contained_in is None]

    def __bool__(self) -> bool:
        return not self.orbits

    def to_dict(self) -> dict:
        return {"defect_free": not self.orbits, "orbits": [o.to_dict() for o in self.orbits],
                "maximal": [list(o.representative) for o in self.maximal]}


def _sigma_period(face: Simplex, n: int) -> int:
    orbit = {simplex((v + t) % n for v in face) for t in range(n)}
    x = face
    for j in range(1, n + 1):
        x = simplex((2 * v) % n for v in x)
        if x in orbit:
            return j
    return n


def defect_orbits(c: SimplicialComplex, torus: SimplicialComplex, n: int) -> list[DefectOrbit]:
    from .constructions.projective import split_faces, strong_components

    faces = split_faces(c, torus, range(1, c.dim), n)
    by_rep: dict[Simplex, list[Simplex]] = {}
    for f in faces:
        rep = min(simplex((v + t) % n for v in f) for t in range(n))
        by_rep.setdefault(rep, []).append(f)
    split = set(faces)
    out = []
    for rep in sorted(by_rep, key=lambda f: (-len(f), f)):
        above = None
        for g in split:
            if len(g) > len(rep) and set(rep) <= set(g):
                above = min(simplex((v + t) % n for v in g) for t in range(n))
                break
        out.append(DefectOrbit(rep, len(by_rep[rep]), _sigma_period(rep, n),
                               len(strong_components(link(c, rep))), above))
    return sorted(out, key=lambda o: (len(o.representative), o.representative))


def _check_assembly_preconditions(sphere: SimplicialComplex, k: int, torus: SimplicialComplex) -> list[str]:
    n = 2 ** (k + 1) - 1
    problems = []
    if sorted(sphere.vertices) != list(range(n)):
        problems.append(f"sphere must have vertices 0..{n - 1}")
        return problems
    autos = standard_autos(k)
    if not is_automorphism(sphere, autos.tau):
        problems.append("sphere is not invariant under tau")
    if not is_automorphism(sphere, autos.rho):
        problems.append("sphere is not invariant under rho")
    if not is_subcomplex(torus, sphere):
        problems.append("sphere does not contain the central torus")
    if k >= 2:
        inside = sum(is_subcomplex(m, sphere) for m in solid_torus_multiples(k))
        if inside < k:
            problems.append(f"sphere contains {inside} solid-torus multiples, need {k}")
    return problems


def perfectness_certificate(c: SimplicialComplex, k: int) -> CertStatus:
    """``tau`` and ``rho`` fix the apexes ``p_i = n + i``; ``sigma`` shifts them cyclically."""
    autos = standard_autos(k)
    n = autos.n
    apex = {n + i: n + i for i in range(k + 1)}
    shift = {n + i: n + (i + 1) % (k + 1) for i in range(k + 1)}
    maps = {
        "tau": Permutation({**{x: autos.tau(x) for x in range(n)}, **apex}),
        "rho": Permutation({**{x: autos.rho(x) for x in range(n)}, **apex}),
        "sigma": Permutation({**{x: autos.sigma(x) for x in range(n)}, **shift}),
    }
    result = {name: is_automorphism(c, p) for name, p in maps.items()}
    return CertStatus(CERTIFIED if all(result.values()) else FAIL, {"automorphisms": result})


def assemble_perfect_equilibrium(sphere: SimplicialComplex, k: int,
                                 torus: SimplicialComplex | None = None) -> SimplicialComplex | DefectReport:
    """Cone ``sphere`` from ``p_0`` and take the union of its sigma images.

    Returns the union when no face outside the central torus has a split
    link, otherwise the :class:`DefectReport`.
    """
    from .constructions.projective import sigma_balls

    n = 2 ** (k + 1) - 1
    torus = torus if torus is not None else standard_torus(k)
    problems = _check_assembly_preconditions(sphere, k, torus)
    if problems:
        raise StructureError("; ".join(problems))
    c = union(*sigma_balls(sphere, n, k))
    defects = defect_orbits(c, torus, n)
    if defects:
        return DefectReport(defects, c)
    return c


# -- the CP^3 census ------------------------------------------------------------------

# the bundled generator (0 1 3 5 9 12) for 5_15^7_1 gives a complex that is not
# closed; (0 1 4 5 9 12) gives exactly the tri-cyclic polytope 3C(1,3,4;15)
ERRATA = {"s5-1571": ((0, 1, 3, 5, 9, 12), (0, 1, 4, 5, 9, 12))}

CP3_CANDIDATES = ("5_15^7_3", "5_15^2_5", "5_15^2_2", "5_15^7_1")


def s5_candidates(apply_errata: bool = True) -> dict[str, SimplicialComplex]:
    """The four 15-vertex Hopf 5-spheres respecting tau and rho."""
    from .datasets import load_complex
    from .symmetry import cyclic_orbit

    def load(stem):
        c = union(*(load_complex(f"{stem}-a{i}") for i in (1, 2, 3)))
        if apply_errata and stem in ERRATA:
            bad, good = ERRATA[stem]
            c = SimplicialComplex((set(c.facets) - set(cyclic_orbit(bad, 15))) | set(cyclic_orbit(good, 15)))
        return c

    s15 = load("s5-15")
    return {
        "5_15^7_3": load("s5-1573"),
        "5_15^2_5": multiply_labels(s15, 8, 15),   # S^5_15 = sigma(5_15^2_5)
        "5_15^2_2": load("s5-1522"),
        "5_15^7_1": load("s5-1571"),
    }


@dataclass
class CandidateReport:
    name: str
    facets: int
    tau_rho_invariant: bool
    contains_torus: bool
    sigma_orbit: int
    multiples: list[int]          # contained multiples in sigma^j(candidate), j = 0..3

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class CP3Census:
    candidates: list[CandidateReport]
    suitable: list[str]
    defects: dict[str, DefectReport]
    errata: dict

    @property
    def perfect_exists(self) -> bool:
        return any(not self.defects[s].orbits for s in self.suitable)

    def to_dict(self) -> dict:
        return {"candidates": [c.to_dict() for c in self.candidates], "suitable": self.suitable,
                "defects": {k: v.to_dict() for k, v in self.defects.items()},
                "errata": {k: [list(a), list(b)] for k, (a, b) in self.errata.items()},
                "perfect_cp3_among_candidates": self.perfect_exists}


def check_no_perfect_cp3(candidates: Mapping[str, SimplicialComplex] | None = None) -> CP3Census:
    """Case analysis over the 15-vertex Hopf 5-spheres.

    A perfect ``CP^3`` needs a sphere whose sigma orbit has four members each
    containing three of the four solid-torus multiples, and whose assembly
    has no defects.
    """
    k, n = 3, 15
    if candidates is None:
        candidates = s5_candidates()
    autos = standard_autos(k)
    torus = standard_torus(k)
    mults = solid_torus_multiples(k)
    reports = []
    for name, c in candidates.items():
        images = [multiply_labels(c, 2 ** j, n) for j in range(k + 1)]
        orbit = len({frozenset(x.facets) for x in images})
        reports.append(CandidateReport(
            name, len(c.facets),
            is_automorphism(c, autos.tau) and is_automorphism(c, autos.rho),
            is_subcomplex(torus, c), orbit,
            [sum(is_subcomplex(m, x) for m in mults) for x in images],
        ))
    suitable = [r.name for r in reports
                if r.tau_rho_invariant and r.contains_torus and r.sigma_orbit == k + 1
                and min(r.multiples) == k]
    defects = {}
    for name in suitable:
        out = assemble_perfect_equilibrium(candidates[name], k, torus)
        defects[name] = out if isinstance(out, DefectReport) else DefectReport([], out)
    return CP3Census(reports, suitable, defects, dict(ERRATA))


# -- equilibrium decompositions ---------------------------------------------------------


def _real_piece_ok(c: SimplicialComplex, m: int, k: int, seed: int) -> CertStatus:
    """``2^(m-1)`` disjoint balls of dimension ``k - m + 1``."""
    want = 2 ** (m - 1)
    d = k - m + 1
    if d == 0:
        ok = c.dim == 0 and len(c.vertices) == want
        return CertStatus(CERTIFIED if ok else FAIL, {"points": len(c.vertices)})
    parts = _components(c)
    if len(parts) != want:
        return CertStatus(FAIL, {"reason": f"{len(parts)} components, expected {want}"})
    statuses = [ball_check(p, d, seed=seed) for p in parts]
    worst = min(statuses, key=lambda s: {FAIL: 0, HEURISTIC: 1, CERTIFIED: 2}[s.status])
    return CertStatus(worst.status, {"components": want, "ball_dim": d})


def _components(c: SimplicialComplex) -> list[SimplicialComplex]:
    parent = {v: v for v in c.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in c.facets:
        for v in f[1:]:
            parent[find(v)] = find(f[0])
    groups: dict[int, list[Simplex]] = {}
    for f in c.facets:
        groups.setdefault(find(f[0]), []).append(f)
    return [SimplicialComplex(g) for _, g in sorted(groups.items())]


def verify_equilibrium(c: SimplicialComplex, pieces: Mapping, kind: str = "complex",
                       torus: SimplicialComplex | None = None, apexes: Mapping[int, int] | None = None,
                       check_types: bool = True, seed: int = 0) -> DecompositionReport:
    """Check the zones ``B_0 .. B_k`` of an equilibrium triangulation.

    ``pieces`` maps ``i`` (or subsets) to complexes; the intersections must be
    pure of the expected dimension, the central one a ``k``-torus (complex
    case, compared with ``torus`` if given) or ``2^k`` points (real case).
    With ``apexes`` (``i -> p_i``) the link of ``p_i`` must contain every
    ``B_w`` with ``i`` in ``w`` and ``|w| >= 2``.
    """
    if kind not in ("complex", "real"):
        raise ValueError("kind must be 'complex' or 'real'")
    claimed = {_key(w): p for w, p in pieces.items()}
    index = tuple(sorted(w[0] for w in claimed if len(w) == 1))
    k = len(index) - 1
    tops = {i: claimed[(i,)] for i in index}
    report = DecompositionReport(index, _intersections(tops, index))
    scale = 2 if kind == "complex" else 1
    dim_of = (lambda m: 2 * k - m + 1) if kind == "complex" else (lambda m: k - m + 1)
    _check_boolean_algebra(report, c, tops, claimed, dim_of)
    centre = report.pieces[index]
    if kind == "real" and len(centre.vertices) != 2 ** k:
        report.failures.append(f"central set has {len(centre.vertices)} points, expected {2 ** k}")
    if kind == "complex" and torus is not None and set(torus.facets) != set(centre.facets):
        report.failures.append("central intersection is not the given torus")
    if apexes:
        for i, p in apexes.items():
            lk = link(c, (p,))
            for w, piece in report.pieces.items():
                if i in w and len(w) > 1 and not is_subcomplex(piece, lk):
                    report.failures.append(f"B_{''.join(map(str, w))} is not in the link of apex {p}")
    if check_types:
        for w, piece in sorted(report.pieces.items()):
            m = len(w)
            if kind == "complex":
                st = handlebody_check(piece, scale * k - 2 * (m - 1), m - 1, seed=seed)
            else:
                st = _real_piece_ok(piece, m, k, seed)
            report.certificates[w] = st
            if not st:
                report.failures.append(f"piece {''.join(map(str, w))}: {st.evidence.get('reason', st.status)}")
    report.extra["kind"] = kind
    report.extra["central_vertices"] = len(centre.vertices)
    return report


def pieces_from_orbits(generators: Mapping[int, Iterable[Iterable[int]]], n: int) -> dict[int, SimplicialComplex]:
    from .symmetry import orbit_complex

    return {i: orbit_complex(g, n) for i, g in generators.items()}
