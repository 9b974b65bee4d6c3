"""Pure-numpy kernel implementations (fallback backend).

Same contract as ``numba_impl``; panel evaluations are vectorized over the
15 Gauss nodes while the adaptive subdivision loop runs in Python.
"""

from __future__ import annotations

import math

import numpy as np

from ._common import GL15_W, GL15_X, MAX_STACK


def trig_eval(const, freqs, cos_c, sin_c, xs):
    xs = np.asarray(xs, dtype=float)
    if freqs.size == 0:
        return np.full(xs.shape, const)
    phase = np.outer(xs.ravel(), freqs)
    out = const + np.cos(phase) @ cos_c + np.sin(phase) @ sin_c
    return out.reshape(xs.shape)


def ks_density(rho, rho1, rho2):
    """Singular-curvature arc density in the curve parameter.

    The sign is the one consistent with the finite-difference fundamental-form
    oracle (and with the integral identity the density feeds into).
    """
    r, r1, r2 = (np.asarray(a, dtype=float) for a in (rho, rho1, rho2))
    r_sq = r * r
    num = (
        r_sq**3
        + r1**4
        - r_sq * r_sq * (r1 * r1 - 1.0)
        + 2.0 * r_sq * r * r2
        + 2.0 * r_sq * r_sq * r * r2
    )
    den = (1.0 + r_sq) * (r_sq + r1 * r1) * np.sqrt(r_sq + r_sq * r_sq + r1 * r1)
    return -num / den


def _panel(r, r1, lo, hi):
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    a = mid + half * GL15_X
    sa = np.sin(a)
    ca = np.cos(a)
    w2 = 1.0 + r * r * sa * sa
    return half * float(np.dot(GL15_W, (r * ca - r1 * sa) / (w2 * np.sqrt(w2))))


def _strip(r, r1, a, b, tol):
    """Adaptive integral of (r cos - r1 sin)/W^3 over [a, b]."""
    if b - a <= 0.0:
        return 0.0, 0.0, 0
    total_len = b - a
    stack = [(a, b, _panel(r, r1, a, b))]
    evals = 15
    value = 0.0
    err = 0.0
    while stack:
        lo, hi, whole = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _panel(r, r1, lo, mid)
        right = _panel(r, r1, mid, hi)
        evals += 30
        e = abs(whole - (left + right))
        if e <= tol * (hi - lo) / total_len or (hi - lo) < 1e-12 or len(stack) > MAX_STACK:
            value += left + right
            err += e
        else:
            stack.append((lo, mid, left))
            stack.append((mid, hi, right))
    return value, err, evals


def kda_inner_profile(rho_arr, rho1_arr, tol):
    """Inner integrals over time in [0, pi] of the signed curvature area
    density, split where the singular set crosses the fiber."""
    rho_arr = np.asarray(rho_arr, dtype=float)
    rho1_arr = np.asarray(rho1_arr, dtype=float)
    n = rho_arr.shape[0]
    vals = np.zeros(n)
    errs = np.zeros(n)
    evals = 0
    for i in range(n):
        r, r1 = rho_arr[i], rho1_arr[i]
        if r != 0.0:
            asig = 0.5 * math.pi + math.atan(r1 / r)
            s_low = 1.0 if r > 0 else -1.0
            v1, e1, c1 = _strip(r, r1, 0.0, asig, tol)
            v2, e2, c2 = _strip(r, r1, asig, math.pi, tol)
            vals[i] = s_low * (v1 - v2)
            errs[i] = e1 + e2
            evals += c1 + c2
        else:
            sgn = 1.0 if r1 > 0 else (-1.0 if r1 < 0 else 0.0)
            v, e, c = _strip(r, r1, 0.0, math.pi, tol)
            vals[i] = sgn * v
            errs[i] = e
            evals += c
    return vals, errs, evals
