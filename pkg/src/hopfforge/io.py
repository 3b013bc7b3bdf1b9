"""SCX text format, its JSON mirror, and the orbit-generator format."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .complex import SimplicialComplex, Simplex, simplex
from .errors import MalformedInputError
from .symmetry import GroupAction, Permutation, expand_orbits

_SCX_HEADER = re.compile(r"^scx\s+dim=(-?\d+)\s+n=(\d+)\s*$")
_ORB_HEADER = re.compile(r"^orbits\s+n=(\d+)\s+group=(cyclic|perms)\s*$")


def _read_text(src) -> str:
    if isinstance(src, Path):
        return src.read_text()
    if isinstance(src, str) and "\n" not in src and Path(src).is_file():
        return Path(src).read_text()
    return str(src)


def _parse_simplex(line: str, lineno: int) -> Simplex:
    try:
        verts = [int(t) for t in line.split()]
    except ValueError:
        raise MalformedInputError(f"line {lineno}: expected integers, got {line!r}") from None
    if any(v < 0 for v in verts):
        raise MalformedInputError(f"line {lineno}: negative vertex label")
    try:
        return simplex(verts)
    except MalformedInputError as exc:
        raise MalformedInputError(f"line {lineno}: {exc}") from None


def parse_scx(src) -> tuple[SimplicialComplex, list[str]]:
    """Parse SCX v1; returns the complex and the comment lines (without '#')."""
    comments: list[str] = []
    header = None
    facets = []
    for lineno, raw in enumerate(_read_text(src).splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if header is None:
                comments.append(raw[1:].strip())
            continue
        if header is None:
            m = _SCX_HEADER.match(line)
            if not m:
                raise MalformedInputError(f"line {lineno}: expected 'scx dim=<d> n=<n>' header")
            header = (int(m.group(1)), int(m.group(2)))
            continue
        facets.append(_parse_simplex(line, lineno))
    if header is None:
        raise MalformedInputError("missing scx header")
    c = SimplicialComplex(facets)
    d, n = header
    if facets and c.dim != d:
        raise MalformedInputError(f"header says dim={d} but facets have dimension {c.dim}")
    if c.vertex_count != n:
        raise MalformedInputError(f"header says n={n} but {c.vertex_count} vertices are used")
    return c, comments


def read_scx(src) -> SimplicialComplex:
    return parse_scx(src)[0]


def write_scx(c: SimplicialComplex, comments=()) -> str:
    lines = [f"# {x}" for x in comments]
    lines.append(f"scx dim={c.dim} n={c.vertex_count}")
    lines.extend(" ".join(map(str, f)) for f in c.facets)
    return "\n".join(lines) + "\n"


def to_json(c: SimplicialComplex) -> str:
    return json.dumps(c.to_dict(), separators=(",", ":")) + "\n"


def from_json(src) -> SimplicialComplex:
    try:
        data = json.loads(_read_text(src))
        facets = [simplex(f) for f in data["facets"]]
        d, n = int(data["dim"]), int(data["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad complex JSON: {exc}") from None
    c = SimplicialComplex(facets)
    if (facets and c.dim != d) or c.vertex_count != n:
        raise MalformedInputError("JSON dim/n fields do not match the facets")
    return c


def read_complex(src) -> SimplicialComplex:
    """Read SCX or JSON, deciding by content."""
    text = _read_text(src)
    if text.lstrip().startswith("{"):
        return from_json(text)
    if _first_data_line(text).startswith("orbits"):
        return parse_orbits(text).expand()
    return read_scx(text)


def _first_data_line(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            return line
    return ""


@dataclass
class OrbitFile:
    n: int
    group: str
    perms: list[Permutation] = field(default_factory=list)
    generators: list[Simplex] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)

    def action(self) -> GroupAction | int:
        if self.group == "cyclic":
            return self.n
        return GroupAction(self.perms)

    def orbits(self) -> list[list[Simplex]]:
        act = self.action()
        return [expand_orbits([g], act) for g in self.generators]

    def expand(self) -> SimplicialComplex:
        modulus = self.n if self.group == "cyclic" else None
        return SimplicialComplex(expand_orbits(self.generators, self.action()), modulus=modulus)

    def to_text(self) -> str:
        lines = [f"# {x}" for x in self.comments]
        lines.append(f"orbits n={self.n} group={self.group}")
        lines.extend(f"perm: {p.cycle_string()}" for p in self.perms)
        lines.extend(" ".join(map(str, g)) for g in self.generators)
        return "\n".join(lines) + "\n"


def parse_orbits(src) -> OrbitFile:
    header = None
    out = None
    comments = []
    for lineno, raw in enumerate(_read_text(src).splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if header is None:
                comments.append(raw[1:].strip())
            continue
        if header is None:
            m = _ORB_HEADER.match(line)
            if not m:
                raise MalformedInputError(f"line {lineno}: expected 'orbits n=<m> group=<cyclic|perms>' header")
            header = m
            out = OrbitFile(int(m.group(1)), m.group(2), comments=comments)
            continue
        if line.startswith("perm:"):
            if out.group != "perms":
                raise MalformedInputError(f"line {lineno}: perm line in a cyclic orbit file")
            try:
                out.perms.append(Permutation.parse(line[5:]))
            except MalformedInputError as exc:
                raise MalformedInputError(f"line {lineno}: {exc}") from None
            continue
        s = _parse_simplex(line, lineno)
        if out.group == "cyclic" and any(v >= out.n for v in s):
            raise MalformedInputError(f"line {lineno}: label outside Z_{out.n}")
        out.generators.append(s)
    if out is None:
        raise MalformedInputError("missing orbits header")
    return out
