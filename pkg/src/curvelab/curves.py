"""Curve representations and classical integral quantities.

Two curve classes are supported, both defined by coefficient tables so that
derivatives of every order are exact:

* ``SupportCurve`` -- a hedgehog given by a trigonometric-polynomial support
  function p(theta) in polar tangential coordinates.  The radius of curvature
  is rho = p + p''; the curve point with outward normal (cos t, sin t) is
  (p cos t - p' sin t, p sin t + p' cos t).
* ``ParamCurve`` -- a parametric plane curve (polynomial plus trigonometric
  coefficient tables in t), possibly with cusps.

Arc-length jets are produced analytically: for support curves through the
closed-form theta expressions, for parametric curves through truncated
Taylor-series arithmetic (never finite differences).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import FlatError, NotClosedError, RegularityError
from .rootfind import find_roots
from .taylor import Jet
from .trigpoly import TWO_PI, TrigPoly
from .errors import DegenerateSingularSetError

ZERO_TOL = 1e-9
JET_ORDER = 6


def zero_tolerance(scale: float) -> float:
    """Scale-aware zero threshold: |v| <= 1e-9 * (1 + scale)."""
    return ZERO_TOL * (1.0 + abs(scale))


# ---------------------------------------------------------------------------
# jet sample


@dataclass(frozen=True)
class JetSample:
    """Differential data of a curve at one parameter value.

    ``rho_s1``/``rho_s2``/``rho_s3`` are the first three arc-length
    derivatives of the radius of curvature.  The frame (tangent, normal) is
    positively oriented and orthonormal.
    """

    param: float
    point: np.ndarray
    tangent: np.ndarray
    normal: np.ndarray
    kappa: float
    rho: float
    rho_s1: float
    rho_s2: float
    rho_s3: float


# ---------------------------------------------------------------------------
# support curves (hedgehogs)


def hedgehog_frame(theta):
    """Unit tangent and normal of a hedgehog at normal angle theta.

    t(theta) = (-sin, cos), n(theta) = (-cos, -sin); det(t, n) = +1.
    """
    theta = np.asarray(theta, dtype=float)
    tangent = np.stack([-np.sin(theta), np.cos(theta)], axis=-1)
    normal = np.stack([-np.cos(theta), -np.sin(theta)], axis=-1)
    return tangent, normal


class SupportCurve:
    """Hedgehog defined by a trigonometric-polynomial support function.

    ``rotation_number`` is the hedgehog's rotation number k (integer or
    half-integer).  The closure period of the parameterization equals the
    period of the support function: 2*pi for integer harmonics, 4*pi when the
    support function uses half harmonics.
    """

    def __init__(self, p: TrigPoly, rotation_number=1):
        k = Fraction(rotation_number).limit_denominator(2)
        if k != Fraction(rotation_number).limit_denominator(10**6) or k <= 0:
            raise ValueError("rotation number must be a positive integer or half-integer")
        self.p = p
        self.rotation_number = float(k)
        self.closure_period = p.period
        self._p_derivs = [p]
        self._scales: dict[str, float] = {}

    # -- derivative tables ---------------------------------------------------

    def p_deriv(self, order: int) -> TrigPoly:
        while len(self._p_derivs) <= order:
            self._p_derivs.append(self._p_derivs[-1].derivative())
        return self._p_derivs[order]

    def rho_poly(self, order: int = 0) -> TrigPoly:
        """The trig polynomial of rho = p + p'' (or its order-th derivative)."""
        return self.p_deriv(order) + self.p_deriv(order + 2)

    def rho(self, theta, order: int = 0):
        return self.rho_poly(order)(theta)

    # -- scales and tolerances ------------------------------------------------

    def scale(self, key: str = "rho") -> float:
        """Sup of |quantity| over a coarse 1024-point scan (cached)."""
        if key not in self._scales:
            thetas = np.linspace(0.0, self.closure_period, 1024, endpoint=False)
            if key == "rho":
                v = self.rho(thetas)
            elif key == "rho1":
                v = self.rho(thetas, 1)
            elif key == "sing":
                r, r1, r2 = (self.rho(thetas, d) for d in range(3))
                v = r * r2 - r1 * r1
            elif key == "point":
                v = np.linalg.norm(self.points(thetas), axis=-1)
            else:
                raise KeyError(key)
            self._scales[key] = float(np.max(np.abs(v)))
        return self._scales[key]

    def zero_tol(self, key: str = "rho") -> float:
        return zero_tolerance(self.scale(key))

    def diameter(self) -> float:
        thetas = np.linspace(0.0, self.closure_period, 1024, endpoint=False)
        pts = self.points(thetas)
        span = pts.max(axis=0) - pts.min(axis=0)
        return float(np.hypot(span[0], span[1]))

    # -- geometry -------------------------------------------------------------

    def points(self, theta):
        theta = np.asarray(theta, dtype=float)
        p = self.p(theta)
        p1 = self.p_deriv(1)(theta)
        return np.stack(
            [
                p * np.cos(theta) - p1 * np.sin(theta),
                p * np.sin(theta) + p1 * np.cos(theta),
            ],
            axis=-1,
        )

    def jet(self, theta: float) -> JetSample:
        """Arc-length jet at normal angle theta.

        Uses the signed parameterization speed ds/dtheta = rho, so
        rho_s1 = rho'/rho and so on; at rho = 0 the arc-length fields are
        +-inf (hedgehog cusp).
        """
        r = float(self.rho(theta))
        r1 = float(self.rho(theta, 1))
        r2 = float(self.rho(theta, 2))
        r3 = float(self.rho(theta, 3))
        tangent, normal = hedgehog_frame(theta)
        with np.errstate(divide="ignore", invalid="ignore"):
            kappa = np.divide(1.0, r) if r != 0.0 else math.inf
            rho_s1 = r1 / r if r != 0.0 else math.copysign(math.inf, r1) if r1 else math.nan
            rho_s2 = (r * r2 - r1 * r1) / r**3 if r != 0.0 else math.inf
            rho_s3 = (r * r * r3 - 4 * r * r1 * r2 + 3 * r1**3) / r**5 if r != 0.0 else math.inf
        return JetSample(
            param=float(theta),
            point=self.points(theta),
            tangent=tangent,
            normal=normal,
            kappa=float(kappa),
            rho=r,
            rho_s1=float(rho_s1),
            rho_s2=float(rho_s2),
            rho_s3=float(rho_s3),
        )

    def domain_multiplier(self) -> float:
        """Ratio of the rotation-number domain [0, 2*k*pi] to the closure period."""
        return 2.0 * math.pi * self.rotation_number / self.closure_period


def support_jet(curve: SupportCurve, theta: float, order: int):
    """Values (p, p', ..., p^(order)) at theta, exact in coefficient space."""
    if order > 6:
        raise ValueError("jet order above 6 is not supported")
    return [float(curve.p_deriv(k)(theta)) for k in range(order + 1)]


def hedgehog_point(curve: SupportCurve, theta):
    """Point of the hedgehog with outward normal (cos theta, sin theta)."""
    return curve.points(theta)


def curve_length(curve: SupportCurve) -> float:
    """Signed length: integral of the support function over [0, 2*k*pi].

    Equals the integral of rho over the same domain since p'' integrates to
    zero over full periods.  Only the constant coefficient survives.
    """
    return curve.domain_multiplier() * curve.p.period_integral()


def oriented_area(curve: SupportCurve) -> float:
    """Algebraic area 1/2 * integral of (p^2 - p'^2) over [0, 2*k*pi].

    Computed in closed form through the Parseval identity: with fundamental
    frequency w, one closure period contributes
    P*c^2/2 + (P/4) * sum (1 - (n w)^2) (a_n^2 + b_n^2); the rotation-number
    domain scales that by 2*k*pi / P.
    """
    p = curve.p
    w = p.omega
    per = 0.5 * p.period * p.constant**2
    for n in p.harmonics:
        a = p.cos_coeffs.get(n, 0.0)
        b = p.sin_coeffs.get(n, 0.0)
        per += 0.25 * p.period * (1.0 - (n * w) ** 2) * (a * a + b * b)
    return curve.domain_multiplier() * per


# ---------------------------------------------------------------------------
# parametric curves


@dataclass(frozen=True)
class CoefficientMap:
    """One coordinate map: polynomial plus integer-harmonic trig terms in t."""

    poly: tuple = ()
    cos: dict = field(default_factory=dict)
    sin: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "poly", tuple(float(c) for c in self.poly))
        object.__setattr__(self, "cos", {int(n): float(v) for n, v in self.cos.items()})
        object.__setattr__(self, "sin", {int(n): float(v) for n, v in self.sin.items()})
        for n in list(self.cos) + list(self.sin):
            if n < 1:
                raise ValueError("trig harmonics must be positive integers")

    def eval(self, t, order: int = 0):
        """Exact order-th derivative at t (vectorized)."""
        t = np.asarray(t, dtype=float)
        out = np.zeros(t.shape)
        coeffs = list(self.poly)
        for _ in range(order):
            coeffs = [k * c for k, c in enumerate(coeffs)][1:]
        for k, c in enumerate(coeffs):
            out += c * t**k
        for n, a in self.cos.items():
            out += a * n**order * np.cos(n * t + order * np.pi / 2)
        for n, b in self.sin.items():
            out += b * n**order * np.sin(n * t + order * np.pi / 2)
        return out if out.shape else float(out)

    def taylor(self, t: float, order: int) -> Jet:
        c = [self.eval(t, k) / math.factorial(k) for k in range(order + 1)]
        return Jet(c)

    def is_periodic(self) -> bool:
        return all(c == 0.0 for c in self.poly[1:])


class ParamCurve:
    """Plane curve from coefficient tables, possibly with cusps."""

    def __init__(self, x_map: CoefficientMap, y_map: CoefficientMap, domain, closed=False):
        self.x_map = x_map
        self.y_map = y_map
        self.domain = (float(domain[0]), float(domain[1]))
        if not self.domain[1] > self.domain[0]:
            raise ValueError("domain must be an increasing interval")
        self.closed = bool(closed)
        self._scales: dict[str, float] = {}
        if self.closed:
            self._validate_closed()

    def _validate_closed(self):
        t0, t1 = self.domain
        for order in range(4):
            a = (self.x_map.eval(t0, order), self.y_map.eval(t0, order))
            b = (self.x_map.eval(t1, order), self.y_map.eval(t1, order))
            tol = zero_tolerance(max(abs(v) for v in (*a, *b)))
            if abs(a[0] - b[0]) > tol or abs(a[1] - b[1]) > tol:
                raise NotClosedError(
                    f"curve marked closed but order-{order} derivatives differ at the ends"
                )

    def points(self, t):
        t = np.asarray(t, dtype=float)
        return np.stack([self.x_map.eval(t), self.y_map.eval(t)], axis=-1)

    def derivs(self, t, order: int):
        t = np.asarray(t, dtype=float)
        return self.x_map.eval(t, order), self.y_map.eval(t, order)

    def speed_squared(self, t):
        x1, y1 = self.derivs(t, 1)
        return x1 * x1 + y1 * y1

    def curvature_det(self, t):
        """det(gamma', gamma''), whose sign is the sign of the curvature."""
        x1, y1 = self.derivs(t, 1)
        x2, y2 = self.derivs(t, 2)
        return x1 * y2 - y1 * x2

    def scale(self, key: str) -> float:
        if key not in self._scales:
            ts = np.linspace(*self.domain, 1024)
            if key == "speed":
                v = np.sqrt(self.speed_squared(ts))
            elif key == "det":
                v = self.curvature_det(ts)
            elif key == "point":
                v = np.linalg.norm(self.points(ts), axis=-1)
            else:
                raise KeyError(key)
            self._scales[key] = float(np.max(np.abs(v)))
        return self._scales[key]

    def zero_tol(self, key: str) -> float:
        return zero_tolerance(self.scale(key))

    def diameter(self) -> float:
        ts = np.linspace(*self.domain, 1024)
        pts = self.points(ts)
        span = pts.max(axis=0) - pts.min(axis=0)
        return float(np.hypot(span[0], span[1]))

    def taylor(self, t: float, order: int = JET_ORDER):
        return self.x_map.taylor(t, order), self.y_map.taylor(t, order)

    def singular_params(self) -> list[float]:
        """Parameters where the velocity vanishes (cusp candidates)."""
        tol = self.zero_tol("speed") ** 2
        ts = np.linspace(*self.domain, 4097)
        v2 = self.speed_squared(ts)
        out = []
        # v^2 >= 0: locate dips below tolerance via local minima
        for i in range(1, len(ts) - 1):
            if v2[i] <= tol and v2[i] <= v2[i - 1] and v2[i] <= v2[i + 1]:
                # refine by minimizing v^2 with a few ternary steps
                lo, hi = ts[i - 1], ts[i + 1]
                for _ in range(80):
                    m1 = lo + (hi - lo) / 3
                    m2 = hi - (hi - lo) / 3
                    if self.speed_squared(m1) < self.speed_squared(m2):
                        hi = m2
                    else:
                        lo = m1
                out.append(0.5 * (lo + hi))
        if v2[0] <= tol:
            out.insert(0, ts[0])
        if v2[-1] <= tol and not self.closed:
            out.append(ts[-1])
        return out

    def is_cusp(self, t: float) -> bool:
        """Singular parameter with linearly independent second/third derivatives."""
        if self.speed_squared(t) > self.zero_tol("speed") ** 2:
            return False
        x2, y2 = self.derivs(t, 2)
        x3, y3 = self.derivs(t, 3)
        return abs(x2 * y3 - y2 * x3) > zero_tolerance(self.scale("det"))


def param_jet(curve: ParamCurve, t: float) -> JetSample:
    """Arc-length jet of a parametric curve via Taylor-series arithmetic.

    kappa = det(gamma', gamma'') / |gamma'|^3 and d/ds = (1/|gamma'|) d/dt,
    applied through series algebra so rho', rho'', rho''' in arc length are
    exact up to coefficient arithmetic.
    """
    X, Y = curve.taylor(t, JET_ORDER)
    X1, Y1 = X.deriv(), Y.deriv()
    v2 = X1 * X1 + Y1 * Y1
    if v2.value() <= curve.zero_tol("speed") ** 2:
        raise RegularityError(f"velocity vanishes at t={t}")
    D = X1 * Y.deriv().deriv() - Y1 * X.deriv().deriv()
    if abs(D.value()) <= curve.zero_tol("det"):
        raise FlatError(f"curvature vanishes at t={t}; radius of curvature overflows")
    v = v2.sqrt()
    rho = v * v * v / D
    rho_s1 = rho.deriv() / v
    rho_s2 = rho_s1.deriv() / v
    rho_s3 = rho_s2.deriv() / v
    speed = v.value()
    tangent = np.array([X1.value(), Y1.value()]) / speed
    normal = np.array([-tangent[1], tangent[0]])
    return JetSample(
        param=float(t),
        point=np.array([X.value(), Y.value()]),
        tangent=tangent,
        normal=normal,
        kappa=D.value() / speed**3,
        rho=rho.value(),
        rho_s1=rho_s1.value(),
        rho_s2=rho_s2.value(),
        rho_s3=rho_s3.value(),
    )


def shoelace_area(curve: ParamCurve) -> float:
    """1/2 * contour integral of (x dy - y dx) by quadrature."""
    if not curve.closed:
        raise NotClosedError("shoelace area requires a closed curve")
    from .quadrature import adaptive_gauss_legendre

    def integrand(t):
        x, y = curve.derivs(t, 0)
        x1, y1 = curve.derivs(t, 1)
        return x * y1 - y * x1

    est = adaptive_gauss_legendre(integrand, *curve.domain, tol=1e-12)
    return 0.5 * est.value


def inflexion_points(curve: ParamCurve) -> list[dict]:
    """Curvature zeros: sign changes are inflexions, flat touches undulations.

    Non-degeneracy is the det(gamma', gamma''') test at the located parameter.
    """
    t0, t1 = curve.domain
    det_scale = curve.scale("det")
    tol = zero_tolerance(det_scale)
    try:
        roots = find_roots(
            curve.curvature_det,
            t0,
            t1,
            dfn=lambda t: _det13(curve, t),
            zero_scale=det_scale,
        )
    except DegenerateSingularSetError:
        roots = []  # straight-line segments are excluded by the curve classes
    # flat touches of the curvature sit at critical points of the determinant
    try:
        crit = find_roots(lambda t: _det13(curve, t), t0, t1, zero_scale=det_scale)
    except DegenerateSingularSetError:
        crit = []  # det(gamma', gamma''') identically zero (circles)
    candidates = list(roots)
    for c in crit:
        if abs(curve.curvature_det(c)) <= tol and not any(
            abs(c - r) < 1e-6 * (1 + t1 - t0) for r in candidates
        ):
            candidates.append(c)
    out = []
    h = 1e-5 * (t1 - t0)
    for c in sorted(candidates):
        lo = max(t0, c - h)
        hi = min(t1, c + h)
        changes = float(curve.curvature_det(lo)) * float(curve.curvature_det(hi)) < 0
        nd = abs(_det13(curve, c)) > tol
        out.append(
            {
                "t": float(c),
                "kind": "inflexion" if changes else "undulation",
                "nondegenerate": bool(nd and changes),
            }
        )
    return out


def _det13(curve: ParamCurve, t):
    x1, y1 = curve.derivs(t, 1)
    x3, y3 = curve.derivs(t, 3)
    return x1 * y3 - y1 * x3


# ---------------------------------------------------------------------------
# genericity


@dataclass
class GenericityReport:
    violations: list
    is_generic_for: dict

    @property
    def is_generic(self) -> bool:
        return not self.violations


#: violation kinds, keyed by the check that produced them
CHECKS = {
    "a": "ses_cusp_degenerate",      # common zero of rho_s'' and rho_s'''
    "b": "undulation",               # undulation point of the base curve
    "c": "degenerate_inflexion",     # inflexion with det(f', f''') = 0
    "d": "front_boundary_tangency",  # common zero of rho and rho'
    "e": "degenerate_singular_set",  # singular set fills a parameter interval
}


def check_genericity(curve) -> GenericityReport:
    """Runtime genericity scan standing in for the transversality statements.

    Checks, at sampling resolution: (a) no common zero of the second and
    third arc-length derivatives of rho; (b) no undulations; (c) inflexions
    non-degenerate; (d) no common zero of rho and rho'; (e) the singular-set
    equation does not vanish on a whole parameter interval.
    """
    violations = []
    if isinstance(curve, SupportCurve):
        _genericity_support(curve, violations)
    else:
        _genericity_param(curve, violations)
    kinds = {v["kind"] for v in violations}
    bad_a = CHECKS["a"] in kinds
    bad_bc = CHECKS["b"] in kinds or CHECKS["c"] in kinds
    bad_d = CHECKS["d"] in kinds
    bad_e = CHECKS["e"] in kinds
    flags = {
        "evolutoid_engine": not bad_e,
        "ses_engine": not (bad_a or bad_bc or bad_e),
        "front_engine": not (bad_a or bad_d or bad_e),
        "quadrature_gb": not (bad_a or bad_d or bad_e),
    }
    return GenericityReport(violations=violations, is_generic_for=flags)


def _sing_disc(curve: SupportCurve, theta):
    r = curve.rho(theta)
    r1 = curve.rho(theta, 1)
    r2 = curve.rho(theta, 2)
    return r * r2 - r1 * r1


def _genericity_support(curve: SupportCurve, violations):
    period = curve.closure_period
    disc_scale = curve.scale("sing")
    rho3 = lambda th: (
        curve.rho(th) ** 2 * curve.rho(th, 3)
        - 4 * curve.rho(th) * curve.rho(th, 1) * curve.rho(th, 2)
        + 3 * curve.rho(th, 1) ** 3
    )
    thetas = np.linspace(0.0, period, 2048, endpoint=False)
    r3_scale = float(np.max(np.abs(rho3(thetas))))

    # (e): the discriminant rho*rho'' - rho'^2 identically zero on an interval
    try:
        disc_roots = find_roots(
            lambda th: _sing_disc(curve, th), 0.0, period, zero_scale=disc_scale
        )
    except DegenerateSingularSetError:
        violations.append(
            {"kind": CHECKS["e"], "param": 0.0, "values": {"sing_disc_scale": disc_scale}}
        )
        return
    # (a): at discriminant roots the third arc-length derivative must survive
    for r in disc_roots:
        v3 = float(rho3(r))
        if abs(v3) <= zero_tolerance(r3_scale):
            violations.append(
                {"kind": CHECKS["a"], "param": float(r), "values": {"rho3_form": v3}}
            )
    # (d): rho roots must have rho' bounded away from zero
    try:
        rho_roots = find_roots(
            curve.rho_poly(0), 0.0, period,
            dfn=curve.rho_poly(1), zero_scale=curve.scale("rho"),
        )
    except DegenerateSingularSetError:
        rho_roots = []
        violations.append(
            {"kind": CHECKS["e"], "param": 0.0, "values": {"rho_scale": curve.scale("rho")}}
        )
    for r in rho_roots:
        r1 = float(curve.rho(r, 1))
        if abs(r1) <= curve.zero_tol("rho1"):
            violations.append(
                {"kind": CHECKS["d"], "param": float(r), "values": {"rho1": r1}}
            )
    # (b)/(c) are vacuous for hedgehogs: the curvature 1/rho never vanishes.


def _genericity_param(curve: ParamCurve, violations):
    for item in inflexion_points(curve):
        if item["kind"] == "undulation":
            violations.append(
                {"kind": CHECKS["b"], "param": item["t"], "values": {}}
            )
        elif not item["nondegenerate"]:
            violations.append(
                {"kind": CHECKS["c"], "param": item["t"], "values": {}}
            )
    # (a): scan the singularity discriminant of the singular evolutoids set
    ts = np.linspace(*curve.domain, 4097)
    vals, ok = _param_disc_scan(curve, ts)
    if not ok.any():
        return
    scale = float(np.max(np.abs(vals[ok])))
    sign_changes = []
    idx = np.where(ok[:-1] & ok[1:] & (vals[:-1] * vals[1:] < 0))[0]
    for i in idx:
        sign_changes.append(0.5 * (ts[i] + ts[i + 1]))
    for t in sign_changes:
        try:
            j = param_jet(curve, t)
        except (RegularityError, FlatError):
            continue
        if abs(j.rho_s3) <= zero_tolerance(scale):
            violations.append(
                {"kind": CHECKS["a"], "param": float(t), "values": {"rho_s3": j.rho_s3}}
            )
    # (d) does not arise for regular parametric curves: rho = |gamma'|^3/det
    # vanishes only at singular parameters, which must be genuine cusps.
    for t in curve.singular_params():
        if not curve.is_cusp(t):
            violations.append(
                {"kind": CHECKS["d"], "param": float(t), "values": {}}
            )


def _param_disc_scan(curve: ParamCurve, ts):
    """2*kappa_s'^2 - kappa*kappa_s'' on a grid (pole-free form of rho_s'')."""
    vals = np.zeros(len(ts))
    ok = np.zeros(len(ts), dtype=bool)
    for i, t in enumerate(ts):
        try:
            X, Y = curve.taylor(float(t), JET_ORDER)
        except Exception:
            continue
        X1, Y1 = X.deriv(), Y.deriv()
        v2 = X1 * X1 + Y1 * Y1
        if v2.value() <= curve.zero_tol("speed") ** 2:
            continue
        v = v2.sqrt()
        D = X1 * Y.deriv().deriv() - Y1 * X.deriv().deriv()
        kap = D / (v * v * v)
        k1 = kap.deriv() / v
        k2 = k1.deriv() / v
        vals[i] = 2.0 * k1.value() ** 2 - kap.value() * k2.value()
        ok[i] = True
    return vals, ok
