"""Bundled data: appendix orbit lists, facet lists and generator presentations.

Every file is checked against a SHA-256 manifest on load.  The directory can
be overridden with the ``HOPFFORGE_DATA`` environment variable.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .complex import SimplicialComplex
from .errors import CorruptedDataError, MalformedInputError
from .io import OrbitFile, parse_orbits, parse_scx

_HERE = Path(__file__).with_name("data")


def data_dir() -> Path:
    return Path(os.environ.get("HOPFFORGE_DATA", _HERE))


def _manifest() -> dict[str, str]:
    return json.loads((data_dir() / "MANIFEST.json").read_text())


def dataset_ids() -> list[str]:
    return sorted(Path(name).stem for name in _manifest())


def checksum(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _resolve(ident: str) -> Path:
    manifest = _manifest()
    for name in manifest:
        if Path(name).stem == ident or name == ident:
            path = data_dir() / name
            if checksum(path) != manifest[name]:
                raise CorruptedDataError(f"checksum mismatch for {name}")
            return path
    raise MalformedInputError(f"unknown dataset {ident!r}; known: {', '.join(dataset_ids())}")


def dataset_checksum(ident: str) -> str:
    path = _resolve(ident)
    return _manifest()[path.name]


def load_orbits(ident: str) -> OrbitFile:
    return parse_orbits(_resolve(ident).read_text())


def dataset_load(ident: str) -> SimplicialComplex | OrbitFile:
    """Complex for SCX datasets, :class:`OrbitFile` for orbit datasets."""
    path = _resolve(ident)
    if path.suffix == ".scx":
        return parse_scx(path.read_text())[0]
    return parse_orbits(path.read_text())


def load_complex(ident: str) -> SimplicialComplex:
    obj = dataset_load(ident)
    return obj.expand() if isinstance(obj, OrbitFile) else obj


def write_manifest(directory: Path | None = None) -> dict[str, str]:
    """Regenerate MANIFEST.json; used only when data files are deliberately edited."""
    d = Path(directory or data_dir())
    manifest = {p.name: checksum(p) for p in sorted(d.iterdir())
                if p.suffix in (".scx", ".orb")}
    (d / "MANIFEST.json").write_text(json.dumps(manifest, indent=1, sort_keys=True) + "\n")
    return manifest
