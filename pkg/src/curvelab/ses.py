"""Singular evolutoids set: all singular points of all evolutoids.

An alpha-evolutoid is singular at parameter s exactly when
rho'(s) = -cot(alpha) (arc-length derivative), so sweeping alpha over (0, pi)
traces the set

    ses(s) = f(s) + (-rho rho' t + rho n) / (1 + rho'^2),

which is the evolutoid point at alpha(s) = arccot(-rho'(s)) taken in (0, pi).
For hedgehogs, with rho' = rho_theta'/rho, this becomes the theta-form

    ses(theta) = f(theta) + rho^2 (-rho' t + rho n) / (rho^2 + rho'^2),

finite wherever (rho, rho') != (0, 0); for parametric curves the
curvature-based form (kappa kappa' t + kappa^3 n) / (kappa^4 + kappa'^2)
stays finite across inflexions of the base curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .curves import (
    JET_ORDER,
    ParamCurve,
    SupportCurve,
    check_genericity,
    hedgehog_frame,
    zero_tolerance,
)
from .errors import DegenerateSingularSetError, FlatError, RegularityError
from .rootfind import find_roots

#: one-sided steps for limit extrapolation at base-curve cusps
CUSP_LIMIT_STEPS = (1e-3, 5e-4, 2.5e-4)


@dataclass(frozen=True)
class SesPoint:
    param: float
    location: np.ndarray
    alpha_of_param: float


@dataclass(frozen=True)
class SesSingularity:
    param: float
    location: np.ndarray
    kind: str  # "cusp" | "degenerate"
    diagnostics: dict = field(default_factory=dict)


def branch_alpha(rho: float, rho1: float) -> float:
    """arccot(-rho'/rho) on the (0, pi) branch; boundary values at rho = 0."""
    if rho == 0.0:
        if rho1 == 0.0:
            return math.nan
        return math.pi if rho1 > 0 else 0.0
    return math.pi / 2 + math.atan(rho1 / rho)


def ses_points_support(curve: SupportCurve, thetas) -> np.ndarray:
    """Vectorized theta-form evaluation for hedgehogs."""
    thetas = np.asarray(thetas, dtype=float)
    r = np.asarray(curve.rho(thetas))
    r1 = np.asarray(curve.rho(thetas, 1))
    t, n = hedgehog_frame(thetas)
    denom = r * r + r1 * r1
    offset = ((-r * r * r1)[..., None] * t + (r**3)[..., None] * n) / denom[..., None]
    return curve.points(thetas) + offset


def ses_point(curve, param: float) -> SesPoint:
    """One point of the singular evolutoids set.

    At a cusp of a parametric base curve the location is certified by
    one-sided limits with polynomial extrapolation over shrinking steps.
    """
    if isinstance(curve, SupportCurve):
        loc = ses_points_support(curve, np.asarray(param, dtype=float))
        alpha = branch_alpha(float(curve.rho(param)), float(curve.rho(param, 1)))
        return SesPoint(param=float(param), location=loc, alpha_of_param=alpha)
    return _ses_point_param(curve, float(param))


def _param_kappa_jets(curve: ParamCurve, t: float):
    X, Y = curve.taylor(t, JET_ORDER)
    X1, Y1 = X.deriv(), Y.deriv()
    v2 = X1 * X1 + Y1 * Y1
    if v2.value() <= curve.zero_tol("speed") ** 2:
        raise RegularityError(f"velocity vanishes at t={t}")
    v = v2.sqrt()
    D = X1 * Y.deriv().deriv() - Y1 * X.deriv().deriv()
    kap = D / (v * v * v)
    k1 = kap.deriv() / v
    k2 = k1.deriv() / v
    speed = v.value()
    tangent = np.array([X1.value(), Y1.value()]) / speed
    normal = np.array([-tangent[1], tangent[0]])
    return np.array([X.value(), Y.value()]), tangent, normal, kap, k1, k2


def _ses_point_param(curve: ParamCurve, t: float) -> SesPoint:
    try:
        point, tangent, normal, kap, k1, k2 = _param_kappa_jets(curve, t)
    except RegularityError:
        if curve.is_cusp(t):
            return _ses_cusp_limit(curve, t)
        raise
    k = kap.value()
    kd = k1.value()
    denom = k**4 + kd * kd
    if denom <= zero_tolerance(curve.scale("det") / max(curve.scale("speed"), 1.0) ** 3) ** 2:
        raise FlatError(f"curvature and its derivative both vanish near t={t}")
    offset = (k * kd * tangent + k**3 * normal) / denom
    if k == 0.0:
        alpha = 0.0 if kd > 0 else math.pi
    else:
        # alpha = arccot(-rho_s') on (0, pi), with rho_s' = -kappa_s'/kappa^2
        alpha = math.pi / 2 + math.atan(-kd / (k * k))
    return SesPoint(param=t, location=point + offset, alpha_of_param=alpha)


def _ses_cusp_limit(curve: ParamCurve, t: float) -> SesPoint:
    t0, t1 = curve.domain
    side = 1.0 if t + CUSP_LIMIT_STEPS[0] <= t1 else -1.0
    hs = np.array(CUSP_LIMIT_STEPS)
    samples = [_ses_point_param(curve, t + side * h) for h in hs]
    locs = np.array([s.location for s in samples])
    loc = np.array(
        [np.polynomial.polynomial.polyfit(hs, locs[:, i], 2)[0] for i in range(2)]
    )
    alphas = np.array([s.alpha_of_param for s in samples])
    alpha = float(np.polynomial.polynomial.polyfit(hs, alphas, 2)[0])
    return SesPoint(param=t, location=loc, alpha_of_param=alpha)


def _require_not_degenerate(curve):
    report = check_genericity(curve)
    if not report.is_generic_for["ses_engine"]:
        kinds = {v["kind"] for v in report.violations}
        if "degenerate_singular_set" in kinds:
            raise DegenerateSingularSetError(
                "the singular evolutoids set degenerates (circle-like input)"
            )
    return report


def ses_singularities(curve) -> list[SesSingularity]:
    """Parameters where the set itself is singular: zeros of rho'' in arc length.

    A singular point is a cusp when rho''' (arc length) survives there.  In
    theta form the criterion is rho*rho'' - rho'^2 = 0 with
    rho^2 rho''' - 4 rho rho' rho'' + 3 rho'^3 != 0.
    """
    _require_not_degenerate(curve)
    if isinstance(curve, SupportCurve):
        return _ses_singularities_support(curve)
    return _ses_singularities_param(curve)


def _ses_singularities_support(curve: SupportCurve) -> list[SesSingularity]:
    r = curve.rho_poly(0)
    r1 = curve.rho_poly(1)
    r2 = curve.rho_poly(2)
    r3 = curve.rho_poly(3)
    disc = lambda th: r(th) * r2(th) - r1(th) ** 2
    ddisc = lambda th: r(th) * r3(th) - r1(th) * r2(th)
    roots = find_roots(disc, 0.0, curve.closure_period, dfn=ddisc,
                       zero_scale=curve.scale("sing"))
    thetas = np.linspace(0.0, curve.closure_period, 2048, endpoint=False)
    third = lambda th: r(th) ** 2 * r3(th) - 4 * r(th) * r1(th) * r2(th) + 3 * r1(th) ** 3
    third_scale = float(np.max(np.abs(third(thetas))))
    out = []
    for root in roots:
        v3 = float(third(root))
        kind = "cusp" if abs(v3) > zero_tolerance(third_scale) else "degenerate"
        jet = curve.jet(root)
        out.append(
            SesSingularity(
                param=float(root),
                location=ses_point(curve, root).location,
                kind=kind,
                diagnostics={"rho_s2": jet.rho_s2, "rho_s3": jet.rho_s3},
            )
        )
    return out


def _ses_singularities_param(curve: ParamCurve) -> list[SesSingularity]:
    def disc(ts):
        ts = np.atleast_1d(np.asarray(ts, dtype=float))
        out = np.empty(len(ts))
        for i, t in enumerate(ts):
            _, _, _, kap, k1, k2 = _param_kappa_jets(curve, float(t))
            out[i] = 2.0 * k1.value() ** 2 - kap.value() * k2.value()
        return out if out.size > 1 else float(out[0])

    t0, t1 = curve.domain
    roots = find_roots(disc, t0, t1, n_scan=4096)
    out = []
    for root in roots:
        from .curves import param_jet

        jet = param_jet(curve, float(root))
        kind = "cusp" if abs(jet.rho_s3) > zero_tolerance(abs(jet.rho_s3) + 1.0) else "degenerate"
        out.append(
            SesSingularity(
                param=float(root),
                location=ses_point(curve, float(root)).location,
                kind=kind,
                diagnostics={"rho_s2": jet.rho_s2, "rho_s3": jet.rho_s3},
            )
        )
    return out


def ses_inflexions(curve) -> list[dict]:
    """Inflexion/undulation census of the set: zeros of 1 + rho'^2 + 2 rho rho''.

    The inflexion/undulation discrimination follows the sign behaviour of the
    set's own curvature (numerical differentiation of ses_point); the
    non-degeneracy test is rho' + rho'^3 - rho^2 rho''' != 0 (arc length).
    """
    _require_not_degenerate(curve)
    if isinstance(curve, SupportCurve):
        crit = lambda th: (
            curve.rho(th) ** 2
            - curve.rho(th, 1) ** 2
            + 2.0 * curve.rho(th) * curve.rho(th, 2)
        )
        lo, hi = 0.0, curve.closure_period
        jet_at = curve.jet
    else:
        def crit(ts):
            ts = np.atleast_1d(np.asarray(ts, dtype=float))
            out = np.empty(len(ts))
            for i, t in enumerate(ts):
                _, _, _, kap, k1, k2 = _param_kappa_jets(curve, float(t))
                out[i] = (
                    kap.value() ** 4 + 5.0 * k1.value() ** 2
                    - 2.0 * kap.value() * k2.value()
                )
            return out if out.size > 1 else float(out[0])

        lo, hi = curve.domain
        from .curves import param_jet

        jet_at = lambda t: param_jet(curve, t)

    roots = find_roots(crit, lo, hi)
    out = []
    for root in roots:
        jet = jet_at(float(root))
        nd_value = jet.rho_s1 + jet.rho_s1**3 - jet.rho**2 * jet.rho_s3
        changes = _ses_curvature_sign_change(curve, float(root), (hi - lo) * 1e-4)
        out.append(
            {
                "param": float(root),
                "kind": "inflexion" if changes else "undulation",
                "nondegenerate": bool(abs(nd_value) > zero_tolerance(abs(nd_value) + 1.0)),
            }
        )
    return out


def _ses_curvature_sign_change(curve, param: float, h: float) -> bool:
    """Sign change of det(ses', ses'') across param, by central differences."""

    def curv(t):
        pts = np.array([ses_point(curve, t + k * h).location for k in (-2, -1, 0, 1, 2)])
        d1 = (pts[3] - pts[1]) / (2 * h)
        d2 = (pts[4] - 2 * pts[2] + pts[0]) / (h * h)
        return d1[0] * d2[1] - d1[1] * d2[0]

    return curv(param - 8 * h) * curv(param + 8 * h) < 0


# ---------------------------------------------------------------------------
# closed-form reference for the standard cusp (t^2, t^3)


def model_cusp_ses(t, second_denominator: str = "quartic"):
    """Closed-form singular evolutoids set of the model cusp t -> (t^2, t^3).

        x(t) = t^2 (-8 - 54 t^2 + 243 t^4) / (8 + 162 t^2 + 648 t^4)
        y(t) = t^3 (4 - 27 t^2 + 81 t^4) / (4 + 81 t^2 + 324 t^4)

    ``second_denominator`` selects the y-denominator reading: "quartic" is
    4 + 81 t^2 + 324 t^4 (the reading consistent with the analytic pipeline);
    "printed" collapses the last term to 324 t^2.  The readings agree at
    t in {0, +-1}.
    """
    t = np.asarray(t, dtype=float)
    t2 = t * t
    x = t2 * (-8.0 - 54.0 * t2 + 243.0 * t2 * t2) / (8.0 + 162.0 * t2 + 648.0 * t2 * t2)
    if second_denominator == "quartic":
        den = 4.0 + 81.0 * t2 + 324.0 * t2 * t2
    elif second_denominator == "printed":
        den = 4.0 + 81.0 * t2 + 324.0 * t2
    else:
        raise ValueError("second_denominator must be 'quartic' or 'printed'")
    y = t2 * t * (4.0 - 27.0 * t2 + 81.0 * t2 * t2) / den
    return np.stack([x, y], axis=-1)
