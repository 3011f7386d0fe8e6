"""Selects the text-kernel backend at import time.

Prefers the compiled rack._speedups extension; falls back to the pure-Python
rack._native module when the extension is missing or RACK_PURE_PYTHON=1 is
set. Both expose the same four functions.
"""

from __future__ import annotations

import os

if os.environ.get("RACK_PURE_PYTHON") == "1":
    from rack import _native as _impl

    KERNEL_BACKEND = "python"
else:
    try:
        from rack import _speedups as _impl  # type: ignore[no-redef]

        KERNEL_BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on build environment
        from rack import _native as _impl  # type: ignore[no-redef]

        KERNEL_BACKEND = "python"

porter_stem = _impl.porter_stem
split_subtokens = _impl.split_subtokens
find_identifiers = _impl.find_identifiers
neutralize_java = _impl.neutralize_java

__all__ = [
    "KERNEL_BACKEND",
    "porter_stem",
    "split_subtokens",
    "find_identifiers",
    "neutralize_java",
]
