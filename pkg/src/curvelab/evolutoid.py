"""Evolutoids: the envelope of tangent lines rotated by a fixed angle.

For angle alpha in (0, pi), the alpha-evolutoid of a curve is parameterized by

    gamma_alpha(s) = f(s) + rho(s) sin(alpha) R_alpha t(s)
                   = f(s) + rho sin(alpha) cos(alpha) t + rho sin^2(alpha) n,

where R_alpha is the rotation by alpha.  alpha = pi/2 gives the classical
evolute; alpha in {0, pi} degenerates to the base curve (the tangent-line
components at inflexions are exposed separately through asymptote_lines).

For hedgehogs the evolutoid is again a hedgehog with support function
p_alpha(theta) = p(theta - alpha) cos(alpha) + p'(theta - alpha) sin(alpha),
and a point of gamma_alpha at parameter theta has normal angle theta + alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .curves import (
    ParamCurve,
    SupportCurve,
    hedgehog_frame,
    oriented_area,
    param_jet,
    zero_tolerance,
)
from .errors import RegularityError
from .rootfind import find_roots
from .trigpoly import TrigPoly

CUSP_DISCRIMINANT_RTOL = 1e-6


@dataclass(frozen=True)
class EvolutoidSpec:
    base: object
    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= math.pi:
            raise ValueError("alpha must lie in [0, pi]")


@dataclass(frozen=True)
class EvolutoidSingularity:
    param: float
    alpha: float
    location: np.ndarray
    is_cusp: bool
    diagnostics: dict = field(default_factory=dict)
    borderline: bool = False


def rotation(alpha: float) -> np.ndarray:
    c, s = math.cos(alpha), math.sin(alpha)
    return np.array([[c, -s], [s, c]])


def evolutoid_support(p: TrigPoly, alpha: float) -> TrigPoly:
    """Support function of the alpha-evolutoid, exact in coefficient space."""
    if not 0.0 <= alpha <= math.pi:
        raise ValueError("alpha must lie in [0, pi]")
    return p.shifted(alpha).scaled(math.cos(alpha)) + p.derivative().shifted(alpha).scaled(
        math.sin(alpha)
    )


def evolutoid_points(spec: EvolutoidSpec, thetas) -> np.ndarray:
    """Vectorized evolutoid points of a support curve."""
    curve: SupportCurve = spec.base
    thetas = np.asarray(thetas, dtype=float)
    if spec.alpha in (0.0, math.pi):
        return curve.points(thetas)
    rho = np.asarray(curve.rho(thetas))
    t_rot, _ = hedgehog_frame(thetas + spec.alpha)
    return curve.points(thetas) + (rho * math.sin(spec.alpha))[..., None] * t_rot


def evolutoid_point(spec: EvolutoidSpec, param: float) -> np.ndarray:
    """One evolutoid point; at a cusp of the base the limit value f(param)."""
    if isinstance(spec.base, SupportCurve):
        return evolutoid_points(spec, np.asarray(param, dtype=float))
    curve: ParamCurve = spec.base
    if spec.alpha in (0.0, math.pi):
        return curve.points(param)
    try:
        jet = param_jet(curve, param)
    except RegularityError:
        if curve.is_cusp(param):
            return curve.points(param)  # rho -> 0, the offset term dies
        raise
    a = spec.alpha
    offset = jet.rho * math.sin(a) * (math.cos(a) * jet.tangent + math.sin(a) * jet.normal)
    return jet.point + offset


def singularity_function(spec: EvolutoidSpec):
    """The function whose zeros are the singular parameters, plus its derivative.

    Support curves: g(theta) = rho cos(alpha) + rho' sin(alpha) (finite even
    where rho vanishes).  Parametric curves: the polynomial-like form
    w(t) = sin(alpha) (3 v v' D - v^2 D') + cos(alpha) D^2
    obtained from rho_s' = -cot(alpha) by clearing denominators, with
    v = |gamma'| and D = det(gamma', gamma''); w stays smooth at inflexions.
    """
    a = spec.alpha
    if isinstance(spec.base, SupportCurve):
        curve = spec.base
        ca, sa = math.cos(a), math.sin(a)
        g = lambda th: ca * curve.rho(th) + sa * curve.rho(th, 1)
        dg = lambda th: ca * curve.rho(th, 1) + sa * curve.rho(th, 2)
        return g, dg

    curve = spec.base

    def w_jet(t: float):
        X, Y = curve.taylor(float(t), 6)
        X1, Y1 = X.deriv(), Y.deriv()
        v2 = X1 * X1 + Y1 * Y1
        v = v2.sqrt()
        D = X1 * Y.deriv().deriv() - Y1 * X.deriv().deriv()
        w = (v * v.deriv() * D * 3.0 - v2 * D.deriv()) * math.sin(a) + D * D * math.cos(a)
        return w

    def w(ts):
        ts = np.atleast_1d(np.asarray(ts, dtype=float))
        out = np.array([w_jet(t).value() for t in ts])
        return out if out.size > 1 else float(out[0])

    def dw(t):
        return w_jet(float(t)).deriv().value()

    return w, dw


def singular_params(spec: EvolutoidSpec) -> list[EvolutoidSingularity]:
    """All singular parameters of the alpha-evolutoid, classified.

    A singular point is a cusp when the second arc-length derivative of rho
    survives there; in theta form the discriminant is rho*rho'' - rho'^2.
    Discriminant magnitudes below 1e-6 of the curve scale are reported as
    borderline rather than silently classified.
    """
    if not 0.0 < spec.alpha < math.pi:
        raise ValueError("singular parameters are defined for alpha in (0, pi)")
    g, dg = singularity_function(spec)
    if isinstance(spec.base, SupportCurve):
        lo, hi = 0.0, spec.base.closure_period
        scale = math.hypot(spec.base.scale("rho"), spec.base.scale("rho1"))
    else:
        lo, hi = spec.base.domain
        scale = None
    roots = find_roots(g, lo, hi, dfn=dg, zero_scale=scale)
    out = []
    for r in roots:
        out.append(_classify_singularity(spec, float(r)))
    return out


def _classify_singularity(spec: EvolutoidSpec, param: float) -> EvolutoidSingularity:
    curve = spec.base
    if isinstance(curve, SupportCurve):
        jet = curve.jet(param)
        disc = jet.rho * curve.rho(param, 2) - curve.rho(param, 1) ** 2
        disc_scale = curve.scale("sing")
    else:
        jet = param_jet(curve, param)
        disc = jet.rho_s2
        disc_scale = abs(jet.rho_s2) + 1.0
    borderline = abs(disc) <= CUSP_DISCRIMINANT_RTOL * disc_scale
    return EvolutoidSingularity(
        param=param,
        alpha=spec.alpha,
        location=evolutoid_point(spec, param),
        is_cusp=bool(not borderline and disc != 0.0),
        diagnostics={"rho_s1": jet.rho_s1, "rho_s2": jet.rho_s2, "discriminant": float(disc)},
        borderline=bool(borderline),
    )


@dataclass(frozen=True)
class AsymptoteLine:
    param: float
    point: np.ndarray
    direction: np.ndarray
    kind: str


def asymptote_lines(base: ParamCurve, alpha: float) -> list[AsymptoteLine]:
    """Tangent lines at inflexions/undulations, rotated by alpha about the point.

    Each such line is an asymptote of the alpha-evolutoid.
    """
    from .curves import inflexion_points

    if not 0.0 < alpha < math.pi:
        raise ValueError("alpha must lie in (0, pi)")
    rot = rotation(alpha)
    out = []
    for item in inflexion_points(base):
        t = item["t"]
        x1, y1 = base.derivs(t, 1)
        speed = math.hypot(x1, y1)
        if speed <= base.zero_tol("speed"):
            continue
        direction = rot @ (np.array([x1, y1]) / speed)
        out.append(
            AsymptoteLine(
                param=float(t),
                point=base.points(t),
                direction=direction,
                kind=item["kind"],
            )
        )
    return out


def area_identity(curve: SupportCurve, alpha: float) -> dict:
    """Both sides of the evolutoid area relation, in exact Parseval arithmetic.

    lhs is the algebraic area of the alpha-evolutoid; rhs combines the areas
    of the base curve and of its evolute weighted by cos^2/sin^2.
    """
    k = curve.rotation_number
    lhs = oriented_area(SupportCurve(evolutoid_support(curve.p, alpha), k))
    area_base = oriented_area(curve)
    area_evolute = oriented_area(SupportCurve(evolutoid_support(curve.p, math.pi / 2), k))
    rhs = area_base * math.cos(alpha) ** 2 + area_evolute * math.sin(alpha) ** 2
    return {"lhs": lhs, "rhs": rhs, "residual": abs(lhs - rhs)}


def check_cor24(curve: SupportCurve, alpha: float) -> dict:
    """Area deficiency of the alpha-evolutoid of a 1-hedgehog.

    gap = area(base) cos^2(alpha) - area(evolutoid) is non-negative and
    vanishes exactly when every harmonic above n = 1 is absent (circles and
    their translates).
    """
    if curve.rotation_number != 1:
        raise ValueError("the area inequality is stated for rotation number 1")
    if not 0.0 < alpha < math.pi:
        raise ValueError("alpha must lie in (0, pi)")
    area_base = oriented_area(curve)
    lhs = oriented_area(SupportCurve(evolutoid_support(curve.p, alpha), 1))
    gap = area_base * math.cos(alpha) ** 2 - lhs
    tol = zero_tolerance(abs(area_base))
    return {"satisfied": bool(gap >= -tol), "gap": float(gap)}
