"""Kernel backend selection.

The compiled extension is used when importable; set ``HOPFFORGE_PURE=1`` to
force the pure-Python twins (used by the equivalence tests and benchmarks).
"""

from __future__ import annotations

import os

from . import _kernels_py as pure

compiled = None
if os.environ.get("HOPFFORGE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled = None

backend = compiled if compiled is not None else pure
BACKEND_NAME = "compiled" if compiled is not None else "python"

gf2_reduce = backend.gf2_reduce
morse_run = backend.morse_run
incoherence_counts = backend.incoherence_counts
