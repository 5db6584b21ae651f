"""Backend selection for the hot loops.

The compiled extension is preferred when importable; otherwise the
pure-Python module takes over transparently.  FCWORD_BACKEND=pure forces
the fallback (the benchmark uses this), FCWORD_BACKEND=c makes a missing
extension a hard error instead of a silent downgrade.
"""

import os

_requested = os.environ.get("FCWORD_BACKEND", "").strip().lower()

if _requested == "pure":
    from . import _purekernels as _impl

    BACKEND = "pure"
elif _requested == "c":
    from . import _kernels as _impl  # noqa: F401  (ImportError is the point)

    BACKEND = "c"
elif _requested:
    raise ValueError(f"FCWORD_BACKEND must be 'c' or 'pure', not {_requested!r}")
else:
    try:
        from . import _kernels as _impl

        BACKEND = "c"
    except ImportError:
        from . import _purekernels as _impl

        BACKEND = "pure"

apply_word = _impl.apply_word
strip_word = _impl.strip_word
normalize_factors = _impl.normalize_factors
