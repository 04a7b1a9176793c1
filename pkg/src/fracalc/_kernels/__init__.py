"""Hot numerical kernels.

Selects the compiled Cython extension when it was built, otherwise the numpy
fallback.  Set FRACALC_PURE_PYTHON=1 to force the fallback (used by the
benchmark and for debugging).
"""

import os

if os.environ.get("FRACALC_PURE_PYTHON"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

l1_weighted_sum = _impl.l1_weighted_sum
multivalued_pairs = _impl.multivalued_pairs

__all__ = ["BACKEND", "l1_weighted_sum", "multivalued_pairs"]
