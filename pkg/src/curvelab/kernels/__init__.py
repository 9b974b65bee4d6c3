"""Hot numeric kernels with selectable backend.

Two interchangeable implementations exist:

* ``numba_impl`` -- @njit-compiled scalar loops (fast path, default),
* ``numpy_impl`` -- pure vectorized numpy (fallback).

Selection: the environment variable ``CURVELAB_BACKEND`` may be set to
``numba`` or ``numpy``; unset, numba is used when it imports cleanly.  The
active backend name is exposed as ``BACKEND``.  Both implementations share
one contract and are cross-checked in the test suite; see
``benchmarks/bench_backends.py`` for the performance comparison.

Kernel surface:

* ``trig_eval(const, freqs, cos_c, sin_c, xs)`` -- batched trigonometric
  polynomial evaluation.
* ``kda_inner_profile(rho, rho1, tol)`` -- per-theta adaptive integrals of
  the curvature area density over the time interval [0, pi], split at the
  singular-set crossing.
* ``ks_density(rho, rho1, rho2)`` -- singular-curvature arc-density batch.
"""

from __future__ import annotations

import os

_requested = os.environ.get("CURVELAB_BACKEND", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise ValueError(
        f"CURVELAB_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import numpy_impl as _impl

    BACKEND = "numpy"
else:
    try:
        from . import numba_impl as _impl

        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import numpy_impl as _impl

        BACKEND = "numpy"

trig_eval = _impl.trig_eval
kda_inner_profile = _impl.kda_inner_profile
ks_density = _impl.ks_density
