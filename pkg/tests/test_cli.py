from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from hopfforge.cli import main, run
from hopfforge.io import read_scx


def _run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def _report(capsys, monkeypatch, argv, stdin=None):
    code, out, _ = _run(capsys, monkeypatch, argv, stdin)
    return code, json.loads(out)


def test_permcycle_pipeline(capsys, monkeypatch):
    code, scx, _ = _run(capsys, monkeypatch, ["expand-permcycle", "1", "2", "4", "8"])
    assert code == 0 and len(read_scx(scx).facets) == 90
    code, rep = _report(capsys, monkeypatch, ["fvector"], stdin=scx)
    assert code == 0 and rep["verdicts"]["fvector"] == [15, 105, 180, 90]


def test_rp4_16_pipeline(capsys, monkeypatch):
    code, scx, _ = _run(capsys, monkeypatch, ["build", "rp4-16"])
    code, rep = _report(capsys, monkeypatch, ["fvector", "-"], stdin=scx)
    assert rep["verdicts"]["fvector"] == [16, 120, 330, 375, 150]
    assert rep["version"] and rep["inputs"][0]["sha256"]


def test_shell_pipeline():
    cmd = f"{sys.executable} -m hopfforge.cli expand-permcycle 1 2 4 | {sys.executable} -m hopfforge.cli fvector"
    out = subprocess.run(cmd, shell=True, capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["verdicts"]["fvector"] == [7, 21, 14]


def test_exit_codes(capsys, monkeypatch, tmp_path):
    bad = tmp_path / "bad.scx"
    bad.write_text("scx dim=2 n=3\n0 1 x\n")
    code, _, err = _run(capsys, monkeypatch, ["fvector", str(bad)])
    assert code == 2 and "line 2" in err
    code, _, _ = _run(capsys, monkeypatch, ["fvector", str(tmp_path / "missing.scx")])
    assert code == 2
    code, _, _ = _run(capsys, monkeypatch, ["no-such-command"])
    assert code == 2
    code, rep = _report(capsys, monkeypatch, ["isomorphic", "dataset:p12", "dataset:appendix-b"])
    assert code == 1 and rep["verdicts"]["isomorphic"] is False


def test_homology_and_manifold(capsys, monkeypatch):
    code, rep = _report(capsys, monkeypatch, ["homology", "build:cp2-10", "--ring", "int"])
    assert code == 0 and rep["verdicts"]["homology"]["betti"] == [1, 0, 1, 0, 1]
    code, rep = _report(capsys, monkeypatch, ["check-manifold", "dataset:table-5"])
    assert code == 0 and rep["verdicts"]["manifold"] == "Certified" and rep["seeds"]["seed"] == 0
    code, rep = _report(capsys, monkeypatch, ["check-manifold", "build:rp3-12", "--seed", "5"])
    assert code == 0 and rep["seeds"]["seed"] == 5


def test_orbit_expand_and_kcyclic(capsys, monkeypatch, tmp_path):
    code, scx, _ = _run(capsys, monkeypatch, ["orbit-expand", "dataset:s5-15-a1"])
    assert code == 0 and len(read_scx(scx).facets) == 75
    out = tmp_path / "c.scx"
    code, rep = _report(capsys, monkeypatch, ["kcyclic", "--freqs", "1", "2", "--n", "7", "-o", str(out)])
    assert code == 0 and rep["verdicts"]["certificate"] == "Certified" and rep["verdicts"]["facets"] == 14
    assert len(read_scx(out.read_text()).facets) == 14


def test_fixed_points_cover_quotient(capsys, monkeypatch, tmp_path):
    rho = "".join(f"({x} {15 - x})" for x in range(1, 8))
    torus = tmp_path / "t.scx"
    _run(capsys, monkeypatch, ["expand-permcycle", "1", "2", "4", "8", "-o", str(torus)])
    code, scx, _ = _run(capsys, monkeypatch, ["fixed-points", str(torus), "--involution", rho])
    assert code == 0 and len(read_scx(scx).vertices) == 8

    rep_path = tmp_path / "cover.json"
    code, scx, _ = _run(capsys, monkeypatch, ["double-cover", "dataset:table-5", "--report", str(rep_path)])
    cover = read_scx(scx)
    assert code == 0 and len(cover.vertices) == 24
    deck = json.loads(rep_path.read_text())["witnesses"]["deck"]
    cycles = "".join(f"({a} {b})" for a, b in sorted((int(a), b) for a, b in deck.items()) if int(a) < b)
    cover_file = tmp_path / "cover.scx"
    cover_file.write_text(scx)
    code, scx2, _ = _run(capsys, monkeypatch, ["quotient", str(cover_file), "--involution", cycles])
    assert code == 0 and len(read_scx(scx2).facets) == 48


def test_hopf_commands(capsys, monkeypatch, tmp_path):
    pieces = [f"dataset:s5-15-a{i}" for i in (1, 2, 3)]
    code, rep = _report(capsys, monkeypatch, ["verify-hopf", *pieces, "--torus", "standard"])
    assert code == 0 and rep["verdicts"]["hopf"] is True
    code, rep = _report(capsys, monkeypatch, ["verify-hopf", "kcyclic:1,2:7", "--pieces", "dataset:s5-15-a1"])
    assert code == 1
    code, _, _ = _run(capsys, monkeypatch, ["assemble-equilibrium", "--k", "3", "--sphere", "dataset:s5-15-a1"])
    assert code in (1, 2)
    out = tmp_path / "cp2.scx"
    code, rep = _report(capsys, monkeypatch, ["assemble-equilibrium", "--k", "2", "--sphere", "kcyclic:1,2:7",
                                              "-o", str(out)])
    assert code == 0 and rep["verdicts"]["perfect"] and len(read_scx(out.read_text()).vertices) == 10
    code, rep = _report(capsys, monkeypatch, ["verify-equilibrium", "--build", "rp3-12"])
    assert code == 0 and rep["verdicts"]["equilibrium"] is True


def test_search_commands(capsys, monkeypatch, tmp_path):
    code, rep = _report(capsys, monkeypatch, ["search-decomposition", "--spec", "kcyclic:1,2:7", "--threshold", "1.1",
                                              "--output-prefix", str(tmp_path / "A")])
    assert code == 0 and rep["verdicts"]["found"]
    assert (tmp_path / "A1.orb").exists() and (tmp_path / "A2.orb").exists()
    code, rep = _report(capsys, monkeypatch, ["search-decomposition", "--spec", "kcyclic:1,2:7", "--threshold", "1e9"])
    assert code == 1
    argmin = tmp_path / "argmin.txt"
    code, out, err = _run(capsys, monkeypatch, ["search-cube-assignment", "-o", str(argmin)])
    rep = json.loads(out)
    assert code == 0 and rep["verdicts"]["minimum"] == 20
    assert "block 16/16" in err
    masks = [int(x) for x in argmin.read_text().split()]
    assert 0 in masks and len(masks) == rep["verdicts"]["argmin_count"]


def test_verify_tight(capsys, monkeypatch):
    code, rep = _report(capsys, monkeypatch, ["verify-tight", "dataset:p12", "--embedding", "cross6", "--paper-mode"])
    assert code == 0 and rep["verdicts"]["tight"] and rep["verdicts"]["edge_graph_complete"]
    code, _, _ = _run(capsys, monkeypatch, ["verify-tight", "dataset:p12", "--embedding", "cross7"])
    assert code == 2


def test_reports_are_byte_identical(capsys, monkeypatch, tmp_path):
    outs = []
    for workers in ("1", "4"):
        code, out, _ = _run(capsys, monkeypatch, ["check-manifold", "dataset:p12", "--workers", workers])
        outs.append(out)
    assert outs[0] == outs[1]
    code, out, _ = _run(capsys, monkeypatch, ["fvector", "dataset:p12", "--timing"])
    assert "wall_time" in json.loads(out)


def test_run_returns_report():
    rep = run(["fvector", "dataset:table-5"])
    assert rep.exit_code == 0 and rep.verdicts["fvector"] == [12, 60, 96, 48]
    assert rep.inputs[0]["source"] == "dataset:table-5"
