"""Kernel dispatch: compiled extension when present, pure Python otherwise.

Both backends implement the same contract (see idres._kernels_py) and agree
bit-for-bit, so everything built on top is backend-agnostic. `BACKEND`
records which one was selected at import time.
"""

from __future__ import annotations

try:
    from idres import _kernels as _impl

    BACKEND = "cython"
except ImportError:  # extension not built; fall back
    from idres import _kernels_py as _impl

    BACKEND = "python"

jaro = _impl.jaro
jaro_winkler = _impl.jaro_winkler
forest_mean = _impl.forest_mean
