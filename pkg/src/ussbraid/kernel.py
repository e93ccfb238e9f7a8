"""Selects the permutation kernel backend at import time.

The compiled ``_kernel`` extension is used when it was built; otherwise the
pure-Python ``_kernel_py`` module is used.  Setting ``USSBRAID_PURE_PYTHON=1``
forces the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("USSBRAID_PURE_PYTHON") == "1":
    from . import _kernel_py as backend
else:
    try:
        from . import _kernel as backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as backend

IMPLEMENTATION: str = backend.IMPLEMENTATION

identity = backend.identity
delta = backend.delta
atom = backend.atom
compose = backend.compose
inverse = backend.inverse
length = backend.length
right_descents = backend.right_descents
left_descents = backend.left_descents
flip = backend.flip
complement = backend.complement
is_prefix = backend.is_prefix
meet = backend.meet
join = backend.join
slide = backend.slide
is_left_weighted = backend.is_left_weighted
normalize_factors = backend.normalize_factors
sss_step = backend.sss_step
