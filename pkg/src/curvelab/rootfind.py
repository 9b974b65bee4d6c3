"""Root location for smooth periodic scalar functions.

The workhorse is scan -> sign-change bracketing -> bisection -> one Newton
polish.  All target functions here are fixed-degree trig polynomials (or
smooth expressions in them), so a uniform scan denser than their oscillation
finds every simple root; bisection is unconditionally safe and the final
Newton step restores full floating-point accuracy.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateSingularSetError

SCAN_PER_PERIOD = 4096
BISECT_TOL = 1e-10


def scan_values(fn, lo: float, hi: float, n: int):
    xs = np.linspace(lo, hi, n + 1)
    return xs, np.asarray(fn(xs), dtype=float)


def find_roots(
    fn,
    lo: float,
    hi: float,
    n_scan: int | None = None,
    dfn=None,
    degenerate_run: int = 8,
    zero_scale: float | None = None,
):
    """All simple roots of ``fn`` on [lo, hi).

    Raises DegenerateSingularSetError when the scan finds ``degenerate_run``
    consecutive samples below the zero tolerance, which signals that the
    function vanishes on a whole subinterval rather than at isolated points.
    """
    if n_scan is None:
        n_scan = max(SCAN_PER_PERIOD, int(SCAN_PER_PERIOD * (hi - lo) / (2 * np.pi)))
    xs, vals = scan_values(fn, lo, hi, n_scan)
    scale = zero_scale if zero_scale is not None else float(np.max(np.abs(vals)))
    tol0 = 1e-9 * (1.0 + scale)

    tiny = np.abs(vals) <= tol0
    if tiny.all():
        raise DegenerateSingularSetError(
            "function vanishes identically on the scanned domain"
        )
    run = 0
    for t in tiny:
        run = run + 1 if t else 0
        if run >= degenerate_run:
            raise DegenerateSingularSetError(
                "function vanishes on a parameter subinterval"
            )

    roots = []
    for i in range(n_scan):
        a, b = xs[i], xs[i + 1]
        fa, fb = vals[i], vals[i + 1]
        if fa == 0.0:
            roots.append(a)
            continue
        if fa * fb < 0.0:
            roots.append(_bisect_newton(fn, a, b, fa, fb, dfn))
    # de-duplicate against the right endpoint wrapping onto lo of the next call
    out = []
    for r in roots:
        if not out or abs(r - out[-1]) > 1e-9 * (1 + abs(hi - lo)):
            out.append(r)
    if out and abs((out[-1] - lo) - (hi - lo)) < 1e-9:
        out.pop()
    return out


def _bisect_newton(fn, a, b, fa, fb, dfn):
    for _ in range(200):
        if b - a <= BISECT_TOL:
            break
        m = 0.5 * (a + b)
        fm = float(fn(m))
        if fm == 0.0:
            a = b = m
            break
        if fa * fm < 0.0:
            b, fb = m, fm
        else:
            a, fa = m, fm
    x = 0.5 * (a + b)
    if dfn is not None:
        d = float(dfn(x))
        if d != 0.0:
            step = float(fn(x)) / d
            if abs(step) <= max(BISECT_TOL, abs(b - a)):
                x -= step
    return x


def refine_root(fn, x0: float, h: float, dfn=None):
    """Re-bracket around ``x0`` and polish; used when a root location is known
    approximately from a coarser computation."""
    a, b = x0 - h, x0 + h
    fa, fb = float(fn(a)), float(fn(b))
    if fa * fb > 0.0:
        return x0
    return _bisect_newton(fn, a, b, fa, fb, dfn)
