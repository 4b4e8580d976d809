"""Kernel backend selection.

The compiled extension ``league_ties._fast`` is preferred when it was built;
otherwise the pure-Python twins in ``league_ties._pure`` are used.  Set
``LEAGUE_TIES_BACKEND=pure`` (or ``compiled``) to force a choice; forcing
``compiled`` raises if the extension is missing instead of silently falling
back.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pure

_requested = os.environ.get("LEAGUE_TIES_BACKEND", "").strip().lower()
if _requested not in ("", "pure", "compiled"):
    raise ImportError(
        f"LEAGUE_TIES_BACKEND must be 'pure' or 'compiled', got {_requested!r}"
    )

if _requested == "pure":
    _impl: ModuleType = _pure
    BACKEND = "pure"
else:
    try:
        from . import _fast  # type: ignore[attr-defined]

        _impl = _fast
        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        _impl = _pure
        BACKEND = "pure"

count_tied_range = _impl.count_tied_range
completions_sweep = _impl.completions_sweep
completions_search = _impl.completions_search


def available_backends() -> dict[str, ModuleType]:
    """Importable kernel backends by name (used by the benchmark)."""
    backends: dict[str, ModuleType] = {"pure": _pure}
    try:
        from . import _fast  # type: ignore[attr-defined]

        backends["compiled"] = _fast
    except ImportError:
        pass
    return backends
