"""Backend selection for the quadratic-cost pair sums.

Prefers the compiled extension, falls back to the numpy implementation when
the extension was not built.  ``implementations()`` exposes every available
backend so the benchmark command can compare them on identical inputs.
"""

from . import _pair_sums_np

try:
    from . import _pair_sums as _impl

    HAVE_COMPILED = True
except ImportError:
    _impl = _pair_sums_np
    HAVE_COMPILED = False

BACKEND = "compiled" if HAVE_COMPILED else "numpy"

sin_pair_sum = _impl.sin_pair_sum
gap_pair_sums = _impl.gap_pair_sums


def implementations():
    """name -> module providing the pair-sum functions, for benchmarking."""
    out = {"numpy": _pair_sums_np}
    if HAVE_COMPILED:
        out["compiled"] = _impl
    return out
