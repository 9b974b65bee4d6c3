"""Numba-compiled kernel implementations (default backend).

Scalar loops compiled with @njit(cache=True); the adaptive strip integrator
keeps an explicit work stack instead of recursing.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from ._common import GL15_W, GL15_X, MAX_STACK

_GLX = np.ascontiguousarray(GL15_X)
_GLW = np.ascontiguousarray(GL15_W)


@njit(cache=True)
def trig_eval(const, freqs, cos_c, sin_c, xs):
    n = xs.shape[0]
    m = freqs.shape[0]
    out = np.empty(n)
    for i in range(n):
        acc = const
        for j in range(m):
            ph = freqs[j] * xs[i]
            acc += cos_c[j] * math.cos(ph) + sin_c[j] * math.sin(ph)
        out[i] = acc
    return out


@njit(cache=True)
def ks_density(rho, rho1, rho2):
    n = rho.shape[0]
    out = np.empty(n)
    for i in range(n):
        r, r1, r2 = rho[i], rho1[i], rho2[i]
        r_sq = r * r
        num = (
            r_sq**3
            + r1**4
            - r_sq * r_sq * (r1 * r1 - 1.0)
            + 2.0 * r_sq * r * r2
            + 2.0 * r_sq * r_sq * r * r2
        )
        den = (1.0 + r_sq) * (r_sq + r1 * r1) * math.sqrt(r_sq + r_sq * r_sq + r1 * r1)
        out[i] = -num / den
    return out


@njit(cache=True)
def _panel(r, r1, lo, hi):
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    acc = 0.0
    for i in range(15):
        a = mid + half * _GLX[i]
        sa = math.sin(a)
        ca = math.cos(a)
        w2 = 1.0 + r * r * sa * sa
        acc += _GLW[i] * (r * ca - r1 * sa) / (w2 * math.sqrt(w2))
    return half * acc


@njit(cache=True)
def _strip(r, r1, a, b, tol):
    if b - a <= 0.0:
        return 0.0, 0.0, 0
    total_len = b - a
    lo_s = np.empty(MAX_STACK)
    hi_s = np.empty(MAX_STACK)
    wh_s = np.empty(MAX_STACK)
    top = 0
    lo_s[0] = a
    hi_s[0] = b
    wh_s[0] = _panel(r, r1, a, b)
    evals = 15
    value = 0.0
    err = 0.0
    while top >= 0:
        lo = lo_s[top]
        hi = hi_s[top]
        whole = wh_s[top]
        top -= 1
        mid = 0.5 * (lo + hi)
        left = _panel(r, r1, lo, mid)
        right = _panel(r, r1, mid, hi)
        evals += 30
        e = abs(whole - (left + right))
        if e <= tol * (hi - lo) / total_len or (hi - lo) < 1e-12 or top >= MAX_STACK - 3:
            value += left + right
            err += e
        else:
            top += 1
            lo_s[top] = lo
            hi_s[top] = mid
            wh_s[top] = left
            top += 1
            lo_s[top] = mid
            hi_s[top] = hi
            wh_s[top] = right
    return value, err, evals


@njit(cache=True)
def kda_inner_profile(rho_arr, rho1_arr, tol):
    n = rho_arr.shape[0]
    vals = np.zeros(n)
    errs = np.zeros(n)
    evals = 0
    for i in range(n):
        r = rho_arr[i]
        r1 = rho1_arr[i]
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
