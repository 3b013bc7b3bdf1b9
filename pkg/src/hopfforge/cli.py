"""Command-line interface.

Complexes are read from SCX, JSON or orbit files, from stdin (``-``), from
bundled datasets (``dataset:<id>``), from named builds (``build:<name>``) or
from k-cyclic specifications (``kcyclic:1,2,4:15``).  Commands that produce
a complex write SCX to stdout (or ``-o``); verification commands print a
JSON run report.  Exit codes: 0 verdict success, 1 verdict failure, 2 usage
or input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import __version__, kernels
from .complex import (SimplicialComplex, antipodal_quotient, double_cover, euler_characteristic, f_vector,
                      fixed_point_complex, is_isomorphic, union)
from .errors import CorruptedDataError, HopfForgeError, MalformedInputError, SearchBudgetError, StructureError
from .io import parse_orbits, read_complex, write_scx
from .symmetry import Permutation, expand_permcycle

BUILD_NAMES = ("cp1", "cp2-10", "cp3-84", "rp3-12", "rp3-11", "rp3-15fix", "rp4-nice", "rp4-16",
               "kcyclic", "bicyclic")


@dataclass
class RunReport:
    command: str
    inputs: list[dict] = field(default_factory=list)
    seeds: dict = field(default_factory=dict)
    precision: int | None = None
    wall_time: float | None = None
    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    exit_code: int = 0
    report_path: str | None = None

    def to_dict(self) -> dict:
        out = {"tool": "hopfforge", "version": __version__, "command": self.command,
               "inputs": self.inputs, "seeds": self.seeds, "precision_bits": self.precision,
               "verdicts": self.verdicts, "witnesses": self.witnesses, "exit_code": self.exit_code}
        if self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True, default=_json_default) + "\n"


def _json_default(x):
    if hasattr(x, "to_dict"):
        return x.to_dict()
    if isinstance(x, (set, frozenset, tuple)):
        return sorted(x) if isinstance(x, (set, frozenset)) else list(x)
    try:
        return int(x)
    except (TypeError, ValueError):
        return str(x)


class _Context:
    def __init__(self, args, report: RunReport, stdin=None):
        self.args = args
        self.report = report
        self.stdin = stdin if stdin is not None else sys.stdin

    def _text(self, src: str) -> str:
        if src == "-":
            return self.stdin.read()
        path = Path(src)
        if not path.is_file():
            raise MalformedInputError(f"no such file: {src}")
        return path.read_text()

    def load(self, src: str | None) -> SimplicialComplex:
        src = src or "-"
        if src.startswith("dataset:"):
            from .datasets import dataset_checksum, load_complex

            ident = src.split(":", 1)[1]
            c = load_complex(ident)
            self.report.inputs.append({"source": src, "sha256": dataset_checksum(ident)})
            return c
        if src.startswith("kcyclic:"):
            c, st = _kcyclic_from_spec(src, self.args.precision_bits)
            self.report.inputs.append({"source": src, "certificate": st.status})
            if not st:
                raise StructureError(f"{src} did not certify: {st.evidence}")
            return c
        if src.startswith("build:"):
            c = _build(src.split(":", 1)[1], self.args)
            self.report.inputs.append({"source": src})
            return c
        text = self._text(src)
        self.report.inputs.append({"source": src, "sha256": hashlib.sha256(text.encode()).hexdigest()})
        return read_complex(text)


def _kcyclic_from_spec(spec: str, bits: int):
    from .constructions.polytopes import KCyclicSpec, k_cyclic_boundary

    try:
        _, freqs, n = spec.split(":")
        ks = KCyclicSpec(tuple(int(x) for x in freqs.split(",")), int(n))
    except ValueError:
        raise MalformedInputError(f"bad k-cyclic spec {spec!r}; expected kcyclic:f1,f2,...:n") from None
    return k_cyclic_boundary(ks, precision=bits)


def _build(name: str, args) -> SimplicialComplex:
    from .constructions import cubes, projective, rp4_16
    from .constructions.polytopes import bicyclic_hopf

    seed = getattr(args, "seed", 0)
    verify = getattr(args, "verify", False)
    if name == "cp1":
        return projective.build_cp1()
    if name == "cp2-10":
        return projective.build_cp2_equilibrium()
    if name == "cp3-84":
        return projective.build_cp3_equilibrium(verify=verify, seed=seed, workers=args.workers)
    if name == "rp3-12":
        return cubes.build_rp3_nice_12()
    if name == "rp3-11":
        return cubes.build_rp3_11(seed=seed)
    if name == "rp3-15fix":
        return projective.build_rp3_from_fixed_points(verify=verify)
    if name == "rp4-nice":
        return cubes.build_rp4_nice(getattr(args, "assignment", 0), verify=verify, seed=seed)
    if name == "rp4-16":
        return rp4_16.build_rp4_minimal_16(verify=verify)
    if name == "kcyclic":
        if not getattr(args, "freqs", None) or getattr(args, "n", None) is None:
            raise MalformedInputError("build kcyclic needs --freqs and --n")
        c, st = _kcyclic_from_spec(f"kcyclic:{','.join(map(str, args.freqs))}:{args.n}", args.precision_bits)
        if not st:
            raise StructureError(f"k-cyclic hull did not certify: {st.evidence}")
        return c
    if name == "bicyclic":
        if getattr(args, "m", None) is None:
            raise MalformedInputError("build bicyclic needs --m")
        return bicyclic_hopf(args.m)[0]
    raise MalformedInputError(f"unknown build {name!r}; choose from {', '.join(BUILD_NAMES)}")


def _emit_scx(ctx: _Context, c: SimplicialComplex, comments=()) -> None:
    text = write_scx(c, comments)
    out = getattr(ctx.args, "output", None)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    ctx.report.verdicts["fvector"] = list(f_vector(c))


def _parse_perm(text: str) -> Permutation:
    return Permutation.parse(text)


# -- subcommand handlers ------------------------------------------------------------
# Each returns True (verdict success) or False.  Commands listed in
# _SCX_COMMANDS print SCX, so their report goes only to --report.


def cmd_build(ctx: _Context) -> bool:
    c = _build(ctx.args.name, ctx.args)
    _emit_scx(ctx, c, [f"hopfforge build {ctx.args.name}"])
    return True


def cmd_expand_permcycle(ctx: _Context) -> bool:
    c = expand_permcycle(ctx.args.differences)
    _emit_scx(ctx, c, ["permcycle " + " ".join(map(str, ctx.args.differences))])
    return True


def cmd_orbit_expand(ctx: _Context) -> bool:
    src = ctx.args.input
    if src.startswith("dataset:"):
        from .datasets import dataset_checksum, load_orbits

        ident = src.split(":", 1)[1]
        orb = load_orbits(ident)
        ctx.report.inputs.append({"source": src, "sha256": dataset_checksum(ident)})
    else:
        text = ctx._text(src)
        ctx.report.inputs.append({"source": src, "sha256": hashlib.sha256(text.encode()).hexdigest()})
        orb = parse_orbits(text)
    c = orb.expand()
    ctx.report.verdicts["orbit_sizes"] = [len(o) for o in orb.orbits()]
    _emit_scx(ctx, c)
    return True


def cmd_fvector(ctx: _Context) -> bool:
    c = ctx.load(ctx.args.input)
    ctx.report.verdicts.update({"fvector": list(f_vector(c)), "euler": euler_characteristic(c),
                                "dim": c.dim, "vertex_range": [min(c.vertices), max(c.vertices)] if c.vertices else []})
    return True


def cmd_homology(ctx: _Context) -> bool:
    from .homology import betti_gf2, homology_integral

    c = ctx.load(ctx.args.input)
    prof = betti_gf2(c) if ctx.args.ring == "gf2" else homology_integral(c)
    ctx.report.verdicts["homology"] = prof.to_dict()
    return True


def cmd_check_manifold(ctx: _Context) -> bool:
    from .recognition import is_combinatorial_manifold

    c = ctx.load(ctx.args.input)
    a = ctx.args
    st = is_combinatorial_manifold(c, with_boundary=a.with_boundary, seed=a.seed, rounds=a.tries,
                                   workers=a.workers)
    ctx.report.seeds = {"seed": a.seed, "rounds": a.tries}
    ctx.report.verdicts["manifold"] = st.status
    ctx.report.witnesses["evidence"] = st.to_dict()["evidence"]
    return bool(st)


def cmd_verify_hopf(ctx: _Context) -> bool:
    from .hopf import standard_torus, verify_hopf

    a = ctx.args
    names = list(a.inputs) + list(a.pieces or [])
    if a.sphere is None and a.pieces:
        # first positional argument is the sphere
        if not a.inputs:
            raise MalformedInputError("give the sphere or --sphere")
        sphere_src, names = a.inputs[0], list(a.inputs[1:]) + list(a.pieces)
    else:
        sphere_src = a.sphere
    if not names:
        raise MalformedInputError("no piece files given")
    pieces = {i + 1: ctx.load(n) for i, n in enumerate(names)}
    sphere = ctx.load(sphere_src) if sphere_src else union(*pieces.values())
    torus = None
    if a.torus == "standard":
        torus = standard_torus(len(pieces))
    elif a.torus:
        torus = ctx.load(a.torus)
    r = verify_hopf(sphere, pieces, torus=torus, check_types=not a.no_types, seed=a.seed)
    ctx.report.seeds = {"seed": a.seed}
    ctx.report.verdicts["hopf"] = r.valid
    ctx.report.witnesses["decomposition"] = r.to_dict()
    return r.valid


def _named_equilibrium(name: str, args):
    from .constructions.cubes import build_rp3_nice_12, build_rp4_nice_data, rp3_nice_zones
    from .constructions.polytopes import cyclic_polytope_boundary
    from .constructions.projective import build_cp2_equilibrium, sigma_balls
    from .hopf import standard_torus

    if name == "cp2-10":
        balls = sigma_balls(cyclic_polytope_boundary(7, 4), 7, 2)
        return (build_cp2_equilibrium(), dict(enumerate(balls)), "complex", standard_torus(2),
                {i: 7 + i for i in range(3)})
    if name == "rp3-12":
        return build_rp3_nice_12(), rp3_nice_zones(), "real", None, {i: 8 + i for i in range(4)}
    if name == "rp4-nice":
        b = build_rp4_nice_data(getattr(args, "assignment", 0), seed=args.seed)
        return b.complex, b.zones(), "real", None, {i: 16 + i for i in range(5)}
    raise MalformedInputError(f"no zone data for {name!r}; choose cp2-10, rp3-12 or rp4-nice")


def cmd_verify_equilibrium(ctx: _Context) -> bool:
    from .hopf import verify_equilibrium

    a = ctx.args
    if a.build:
        c, pieces, kind, torus, apexes = _named_equilibrium(a.build, a)
        ctx.report.inputs.append({"source": f"build:{a.build}"})
    else:
        if not a.input or not a.pieces:
            raise MalformedInputError("give a complex and --pieces, or --build")
        c = ctx.load(a.input)
        pieces = {i: ctx.load(n) for i, n in enumerate(a.pieces)}
        kind, torus = a.kind, None
        apexes = {i: int(p) for i, p in enumerate(a.apexes.split(","))} if a.apexes else None
    r = verify_equilibrium(c, pieces, kind=kind, torus=torus, apexes=apexes, seed=a.seed)
    ctx.report.seeds = {"seed": a.seed}
    ctx.report.verdicts["equilibrium"] = r.valid
    ctx.report.witnesses["decomposition"] = r.to_dict()
    return r.valid


def cmd_assemble_equilibrium(ctx: _Context) -> bool:
    from .hopf import DefectReport, assemble_perfect_equilibrium, perfectness_certificate, standard_torus

    a = ctx.args
    sphere = ctx.load(a.sphere)
    out = assemble_perfect_equilibrium(sphere, a.k, torus=standard_torus(a.k))
    if isinstance(out, DefectReport):
        ctx.report.verdicts["perfect"] = False
        ctx.report.witnesses["defects"] = out.to_dict()
        return False
    ctx.report.verdicts["perfect"] = True
    ctx.report.verdicts["fvector"] = list(f_vector(out))
    ctx.report.witnesses["perfectness"] = perfectness_certificate(out, a.k).to_dict()
    if a.output:
        Path(a.output).write_text(write_scx(out))
    return True


def cmd_search_decomposition(ctx: _Context) -> bool:
    from .hopf import barycenter_rank_search

    a = ctx.args
    if not a.spec.startswith("kcyclic:"):
        raise MalformedInputError("--spec must be kcyclic:f1,...:n")
    c = ctx.load(a.spec)
    _, freqs, n = a.spec.split(":")
    freqs = tuple(int(x) for x in freqs.split(","))
    ctx.report.precision = a.precision_bits
    ctx.report.seeds = {"seed": a.seed}
    ctx.report.verdicts["threshold"] = a.threshold
    try:
        res = barycenter_rank_search(c, int(n), freqs, a.threshold, budget=a.budget, bits=a.precision_bits,
                                     seed=a.seed)
    except SearchBudgetError as exc:
        ctx.report.verdicts["found"] = False
        ctx.report.witnesses["reason"] = str(exc)
        return False
    if res is None:
        ctx.report.verdicts["found"] = False
        ctx.report.witnesses["reason"] = "no distribution of the ambiguous orbits gives solid tori"
        return False
    by_piece: dict[int, list] = {}
    for g, i in sorted(res.assignment.items()):
        by_piece.setdefault(i, []).append(list(g))
    ctx.report.verdicts["found"] = True
    ctx.report.witnesses["pieces"] = {str(i): gens for i, gens in sorted(by_piece.items())}
    ctx.report.witnesses["ambiguous"] = [list(o.generator) for o in res.orbits if o.ambiguous]
    ctx.report.witnesses["candidates_tried"] = res.candidates_tried
    if a.output_prefix:
        for i, gens in sorted(by_piece.items()):
            lines = [f"orbits n={n} group=cyclic"] + [" ".join(map(str, g)) for g in gens]
            Path(f"{a.output_prefix}{i}.orb").write_text("\n".join(lines) + "\n")
    return True


def cmd_search_cube_assignment(ctx: _Context) -> bool:
    from .constructions.cubes import search_min_incoherent

    a = ctx.args

    def progress(done, total, best):
        print(f"block {done}/{total} min {best}", file=sys.stderr, flush=True)

    best, arg = search_min_incoherent(workers=a.workers, progress=progress)
    ctx.report.verdicts.update({"minimum": best, "argmin_count": len(arg)})
    if a.output:
        Path(a.output).write_text("".join(f"{m}\n" for m in arg))
    else:
        ctx.report.witnesses["argmin"] = arg
    return True


def cmd_verify_tight(ctx: _Context) -> bool:
    from .symmetry import is_automorphism
    from .tightness import cross6, edge_graph_complete_check, p12_group, verify_tightness

    a = ctx.args
    if a.embedding != "cross6":
        raise MalformedInputError(f"unknown embedding {a.embedding!r}")
    c = ctx.load(a.input)
    emb = cross6()
    group = None
    if a.paper_mode:
        g = p12_group()
        if sorted(c.vertices) == list(range(1, 13)) and all(is_automorphism(c, p) for p in g.generators):
            group = g
    r = verify_tightness(c, emb, dims=tuple(a.dims), paper_mode=a.paper_mode, group=group)
    ctx.report.verdicts["tight"] = r.tight
    ctx.report.verdicts["edge_graph_complete"] = edge_graph_complete_check(c, emb)
    ctx.report.witnesses["tightness"] = r.to_dict()
    return r.tight


def cmd_kcyclic(ctx: _Context) -> bool:
    a = ctx.args
    spec = f"kcyclic:{','.join(map(str, a.freqs))}:{a.n}"
    c, st = _kcyclic_from_spec(spec, a.precision_bits)
    ctx.report.inputs.append({"source": spec})
    ctx.report.precision = a.precision_bits
    ctx.report.verdicts.update({"certificate": st.status, "facets": len(c.facets), "fvector": list(f_vector(c))})
    ctx.report.witnesses["evidence"] = st.to_dict()["evidence"]
    if a.output:
        Path(a.output).write_text(write_scx(c, [spec]))
    return bool(st)


def cmd_fixed_points(ctx: _Context) -> bool:
    a = ctx.args
    c = ctx.load(a.input)
    fixed, labels = fixed_point_complex(c, _parse_perm(a.involution), fresh_labels=a.fresh_labels)
    ctx.report.witnesses["labels"] = {str(k): list(v) for k, v in sorted(labels.items())}
    _emit_scx(ctx, fixed)
    return True


def cmd_double_cover(ctx: _Context) -> bool:
    from .homology import nontrivial_gf2_cocycle

    c = ctx.load(ctx.args.input)
    w = nontrivial_gf2_cocycle(c)
    if w is None:
        ctx.report.verdicts["cover"] = False
        ctx.report.witnesses["reason"] = "H^1(GF2) vanishes; no connected double cover"
        return False
    cover, deck = double_cover(c, w)
    ctx.report.witnesses["deck"] = {str(k): v for k, v in sorted(deck.items())}
    _emit_scx(ctx, cover)
    return True


def cmd_quotient(ctx: _Context) -> bool:
    c = ctx.load(ctx.args.input)
    q = antipodal_quotient(c, _parse_perm(ctx.args.involution))
    _emit_scx(ctx, q)
    return True


def cmd_isomorphic(ctx: _Context) -> bool:
    a = ctx.load(ctx.args.first)
    b = ctx.load(ctx.args.second)
    iso = is_isomorphic(a, b)
    ctx.report.verdicts["isomorphic"] = iso is not None
    if iso is not None:
        ctx.report.witnesses["bijection"] = {str(k): v for k, v in sorted(iso.items())}
    return iso is not None


# which commands write SCX to stdout (their report goes to --report only)
_SCX_COMMANDS = {"build", "expand-permcycle", "orbit-expand", "fixed-points", "double-cover", "quotient"}


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=1, help="worker processes (results do not depend on it)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--precision-bits", type=int, default=128)
    common.add_argument("--report", help="also write the JSON run report to this file")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")

    p = argparse.ArgumentParser(prog="hopfforge", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"hopfforge {__version__} ({kernels.BACKEND_NAME})")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn: Callable, help_text: str):
        s = sub.add_parser(name, parents=[common], help=help_text)
        s.set_defaults(func=fn)
        return s

    s = add("build", cmd_build, "build a named triangulation (SCX)")
    s.add_argument("name", choices=BUILD_NAMES)
    s.add_argument("--freqs", type=int, nargs="+")
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--assignment", type=int, default=0, help="mirror mask for rp4-nice")
    s.add_argument("--verify", action="store_true", help="run the build's own certificates")
    s.add_argument("-o", "--output")

    s = add("expand-permcycle", cmd_expand_permcycle, "expand a permcycle (SCX)")
    s.add_argument("differences", type=int, nargs="+")
    s.add_argument("-o", "--output")

    s = add("orbit-expand", cmd_orbit_expand, "expand an orbit file (SCX)")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("-o", "--output")

    s = add("fvector", cmd_fvector, "f-vector and Euler characteristic")
    s.add_argument("input", nargs="?", default="-")

    s = add("homology", cmd_homology, "homology profile")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--ring", choices=("gf2", "int"), default="gf2")

    s = add("check-manifold", cmd_check_manifold, "certify vertex links")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--with-boundary", action="store_true")
    s.add_argument("--tries", type=int, default=20, help="annealing rounds per link")

    s = add("verify-hopf", cmd_verify_hopf, "verify a Hopf decomposition")
    s.add_argument("inputs", nargs="*", help="piece files A_1..A_k (or the sphere followed by --pieces)")
    s.add_argument("--sphere")
    s.add_argument("--pieces", nargs="+")
    s.add_argument("--torus", help="'standard' or a complex for the central torus")
    s.add_argument("--no-types", action="store_true", help="skip the handlebody certificates")

    s = add("verify-equilibrium", cmd_verify_equilibrium, "verify an equilibrium decomposition")
    s.add_argument("input", nargs="?")
    s.add_argument("--pieces", nargs="+", help="zone files B_0..B_k")
    s.add_argument("--kind", choices=("complex", "real"), default="complex")
    s.add_argument("--apexes", help="comma separated apex labels p_0,..,p_k")
    s.add_argument("--build", help="use a named build with its zones: cp2-10, rp3-12, rp4-nice")
    s.add_argument("--assignment", type=int, default=0)

    s = add("assemble-equilibrium", cmd_assemble_equilibrium, "cone-and-shift assembler")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--sphere", required=True)
    s.add_argument("-o", "--output")

    s = add("search-decomposition", cmd_search_decomposition, "barycenter-rank search")
    s.add_argument("--spec", required=True, help="kcyclic:f1,...,fk:n")
    s.add_argument("--threshold", type=float, default=1.25)
    s.add_argument("--budget", type=int, default=10_000)
    s.add_argument("--output-prefix", help="write the pieces as <prefix><i>.orb")

    s = add("search-cube-assignment", cmd_search_cube_assignment, "exhaustive mirror-assignment search")
    s.add_argument("-o", "--output", help="file for the argmin list")

    s = add("verify-tight", cmd_verify_tight, "tightness of a cross-polytope embedding")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--embedding", default="cross6")
    s.add_argument("--paper-mode", action="store_true")
    s.add_argument("--dims", type=int, nargs="+", default=[0, 1])

    s = add("kcyclic", cmd_kcyclic, "certify a k-cyclic polytope boundary")
    s.add_argument("--freqs", type=int, nargs="+", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("-o", "--output")

    s = add("fixed-points", cmd_fixed_points, "fixed-point complex of an involution (SCX)")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--involution", required=True, help="cycle notation, e.g. '(1 2)(3 4)'")
    s.add_argument("--fresh-labels", action="store_true")
    s.add_argument("-o", "--output")

    s = add("double-cover", cmd_double_cover, "connected double cover (SCX)")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("-o", "--output")

    s = add("quotient", cmd_quotient, "quotient by a free involution (SCX)")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--involution", required=True)
    s.add_argument("-o", "--output")

    s = add("isomorphic", cmd_isomorphic, "combinatorial isomorphism test")
    s.add_argument("first")
    s.add_argument("second")
    return p


def run(argv: list[str] | None = None, stdin=None) -> RunReport:
    """Parse ``argv``, execute, and return the run report (exit code included)."""
    args = _parser().parse_args(argv)
    report = RunReport(args.command, precision=args.precision_bits, report_path=args.report)
    ctx = _Context(args, report, stdin)
    t0 = time.perf_counter()
    try:
        ok = args.func(ctx)
        report.exit_code = 0 if ok else 1
    except (MalformedInputError, CorruptedDataError, StructureError) as exc:
        report.exit_code = 2
        report.witnesses["error"] = f"{type(exc).__name__}: {exc}"
    except HopfForgeError as exc:
        report.exit_code = 1
        report.witnesses["error"] = f"{type(exc).__name__}: {exc}"
    if args.timing:
        report.wall_time = time.perf_counter() - t0
    return report


def main(argv: list[str] | None = None) -> int:
    try:
        report = run(argv)
    except SystemExit as exc:  # argparse usage errors exit with 2
        return int(exc.code or 0)
    text = report.to_json()
    if "error" in report.witnesses:
        print(report.witnesses["error"], file=sys.stderr)
    if report.command not in _SCX_COMMANDS:
        sys.stdout.write(text)
    if report.report_path:
        Path(report.report_path).write_text(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
