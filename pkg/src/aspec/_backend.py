"""Kernel backend selection.

The compiled extension is preferred when built; the numpy fallback keeps the
package fully functional without it. ``ASPEC_KERNELS`` overrides the choice:
``compiled`` requires the extension, ``python`` forces the fallback, ``auto``
(default) tries compiled first.
"""
from __future__ import annotations

import os

_choice = os.environ.get("ASPEC_KERNELS", "auto").strip().lower()

if _choice not in ("auto", "compiled", "python"):
    raise ImportError(
        f"ASPEC_KERNELS must be 'auto', 'compiled', or 'python', got {_choice!r}"
    )

if _choice == "python":
    from aspec import _kernels_py as kernels

    BACKEND = "python"
elif _choice == "compiled":
    from aspec import _kernels as kernels  # type: ignore[no-redef]

    BACKEND = "compiled"
else:
    try:
        from aspec import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on build environment
        from aspec import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
