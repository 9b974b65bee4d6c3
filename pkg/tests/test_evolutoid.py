import math

import numpy as np
import pytest

from curvelab import (
    CoefficientMap,
    DegenerateSingularSetError,
    EvolutoidSpec,
    ParamCurve,
    SupportCurve,
    TrigPoly,
    area_identity,
    asymptote_lines,
    check_cor24,
    evolutoid_point,
    evolutoid_points,
    evolutoid_support,
    hedgehog_point,
    oriented_area,
    singular_params,
)

TWO_PI = 2 * math.pi


class TestEvolutoidSupport:
    def test_constant(self):
        for alpha in (0.3, math.pi / 2, 2.9):
            q = evolutoid_support(TrigPoly(5.0), alpha)
            assert q.constant == pytest.approx(5 * math.cos(alpha), abs=1e-15)
            assert not q.harmonics

    def test_evolute_is_shifted_derivative(self, oval):
        # the pi/2 case reduces to p'(theta - pi/2)
        q = evolutoid_support(oval.p, math.pi / 2)
        ref = oval.p.derivative().shifted(math.pi / 2)
        for theta in np.linspace(0, TWO_PI, 13):
            assert q(theta) == pytest.approx(ref(theta), abs=1e-12)

    def test_sin2_at_quarter_pi(self):
        # closed form: (sqrt2/2)(sin 2(t-pi/4) + 2 cos 2(t-pi/4))
        q = evolutoid_support(TrigPoly(0, {}, {2: 1}), math.pi / 4)
        s = math.sqrt(2) / 2
        for theta in np.linspace(0, TWO_PI, 17):
            expected = s * (math.sin(2 * (theta - math.pi / 4)) + 2 * math.cos(2 * (theta - math.pi / 4)))
            assert q(theta) == pytest.approx(expected, abs=1e-13)


class TestEvolutoidPoint:
    def test_circle_evolute_is_center(self, circle):
        spec = EvolutoidSpec(circle, math.pi / 2)
        for theta in np.linspace(0, TWO_PI, 9):
            assert np.allclose(evolutoid_point(spec, theta), [0.0, 0.0], atol=1e-12)

    def test_circle_intermediate_angle(self):
        # radius-2 circle at alpha=pi/3 contracts to the concentric radius-1 circle
        c = SupportCurve(TrigPoly(2.0), 1)
        spec = EvolutoidSpec(c, math.pi / 3)
        for theta in np.linspace(0, TWO_PI, 9):
            assert np.linalg.norm(evolutoid_point(spec, theta)) == pytest.approx(1.0, rel=1e-12)

    def test_alpha_zero_is_base(self, oval):
        spec = EvolutoidSpec(oval, 0.0)
        theta = 1.1
        assert np.allclose(evolutoid_point(spec, theta), oval.points(theta))

    def test_cusp_limit(self, model_cusp):
        spec = EvolutoidSpec(model_cusp, math.pi / 4)
        assert np.allclose(evolutoid_point(spec, 0.0), [0.0, 0.0], atol=1e-12)

    def test_support_parametric_agreement(self, oval):
        # hedgehog form of the evolutoid evaluated at theta+alpha equals the
        # frame form at theta (the evolutoid normal there has angle theta+alpha)
        for alpha in (0.4, math.pi / 2, 2.2):
            q = SupportCurve(evolutoid_support(oval.p, alpha), 1)
            spec = EvolutoidSpec(oval, alpha)
            for theta in np.linspace(0, TWO_PI, 11):
                a = hedgehog_point(q, theta + alpha)
                b = evolutoid_point(spec, theta)
                assert np.allclose(a, b, atol=1e-9 * (1 + np.linalg.norm(b)))

    def test_envelope_tangency(self, oval):
        # at regular points the evolutoid tangent is parallel to the rotated
        # base tangent (numerical differentiation)
        alpha = 0.7
        spec = EvolutoidSpec(oval, alpha)
        h = 1e-5
        for theta in np.linspace(0.1, TWO_PI, 23):
            g = float(oval.rho(theta)) * math.cos(alpha) + float(oval.rho(theta, 1)) * math.sin(alpha)
            if abs(g) < 1.0:  # skip near-singular points
                continue
            d = (evolutoid_points(spec, theta + h) - evolutoid_points(spec, theta - h)) / (2 * h)
            direction = np.array([-math.sin(theta + alpha), math.cos(theta + alpha)])
            cross = d[0] * direction[1] - d[1] * direction[0]
            assert abs(cross) <= 1e-8 * (1 + np.linalg.norm(d))


class TestSingularParams:
    def test_sin2_evolute(self, sin2):
        sings = singular_params(EvolutoidSpec(sin2, math.pi / 2))
        expected = [math.pi / 4, 3 * math.pi / 4, 5 * math.pi / 4, 7 * math.pi / 4]
        assert len(sings) == 4
        assert [s.param for s in sings] == pytest.approx(expected, abs=1e-10)
        assert all(s.is_cusp for s in sings)
        # discriminant value at pi/4 is -36 (hand computation)
        assert sings[0].diagnostics["discriminant"] == pytest.approx(-36.0, rel=1e-9)

    def test_circle_degenerate(self, circle):
        with pytest.raises(DegenerateSingularSetError):
            singular_params(EvolutoidSpec(circle, math.pi / 2))

    def test_circle_off_evolute_empty(self, circle):
        assert singular_params(EvolutoidSpec(circle, math.pi / 4)) == []

    def test_even_count_on_closed_curves(self, oval, peaks_rosette):
        for curve in (oval, peaks_rosette):
            for alpha in (0.5, 1.0, math.pi / 2, 2.4):
                n = len(singular_params(EvolutoidSpec(curve, alpha)))
                assert n % 2 == 0

    def test_residual_condition_at_roots(self, oval):
        # rho' sin + rho cos vanishes at every reported parameter
        alpha = 1.1
        for s in singular_params(EvolutoidSpec(oval, alpha)):
            g = float(oval.rho(s.param)) * math.cos(alpha) + float(oval.rho(s.param, 1)) * math.sin(alpha)
            assert abs(g) <= 1e-8

    def test_parametric_route_matches_support_route(self, oval):
        # same oval driven through the parametric machinery
        from test_curves import hedgehog_as_param_curve

        param = hedgehog_as_param_curve(oval)
        alpha = 1.1
        sup = sorted(s.param for s in singular_params(EvolutoidSpec(oval, alpha)))
        par = sorted(s.param for s in singular_params(EvolutoidSpec(param, alpha)))
        assert len(sup) == len(par)
        assert par == pytest.approx(sup, abs=1e-7)

    def test_no_inflexions_between_singularities(self, oval):
        # evolutoid curvature keeps one sign between consecutive singular
        # parameters (checked by finite differences in the strict interior)
        alpha = 1.1
        spec = EvolutoidSpec(oval, alpha)
        params = sorted(s.param for s in singular_params(spec))
        params.append(params[0] + TWO_PI)
        h = 1e-4
        for lo, hi in zip(params[:-1], params[1:]):
            ts = np.linspace(lo + 0.08 * (hi - lo), hi - 0.08 * (hi - lo), 40)
            pts = np.array([evolutoid_points(spec, np.array([t - h, t, t + h])) for t in ts])
            d1 = (pts[:, 2] - pts[:, 0]) / (2 * h)
            d2 = (pts[:, 2] - 2 * pts[:, 1] + pts[:, 0]) / h**2
            dets = d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0]
            assert np.all(dets > 0) or np.all(dets < 0)


class TestAsymptotes:
    def test_circle_empty(self, unit_circle_param):
        assert asymptote_lines(unit_circle_param, math.pi / 3) == []

    def test_cubic_graph(self):
        cubic = ParamCurve(CoefficientMap(poly=[0, 1]), CoefficientMap(poly=[0, 0, 0, 1]), (-1, 1))
        lines = asymptote_lines(cubic, math.pi / 3)
        assert len(lines) == 1
        line = lines[0]
        assert np.allclose(line.point, [0.0, 0.0], atol=1e-9)
        angle = math.atan2(line.direction[1], line.direction[0])
        assert angle == pytest.approx(math.pi / 3, abs=1e-9)

    def test_four_inflexion_curve(self, four_inflexion_curve):
        lines = asymptote_lines(four_inflexion_curve, math.pi / 2)
        assert len(lines) == 4
        for line in lines:
            x1, y1 = four_inflexion_curve.derivs(line.param, 1)
            tangent = np.array([x1, y1]) / math.hypot(x1, y1)
            assert abs(tangent @ line.direction) <= 1e-9


class TestAreaIdentity:
    def test_circle(self, circle):
        for alpha in (0.0, 0.9, math.pi / 2):
            res = area_identity(circle, alpha)
            assert res["lhs"] == pytest.approx(100 * math.pi * math.cos(alpha) ** 2, rel=1e-12)
            assert res["residual"] <= 1e-10 * (1 + abs(res["lhs"]))

    def test_alpha_zero(self, oval):
        res = area_identity(oval, 0.0)
        assert res["lhs"] == pytest.approx(oriented_area(oval), rel=1e-14)
        assert res["rhs"] == pytest.approx(oriented_area(oval), rel=1e-14)

    def test_oval_pi_third(self, oval):
        # evolute area of the oval is -330 pi by the Parseval closed form
        res = area_identity(oval, math.pi / 3)
        expected = 1562.5 * math.pi * 0.25 + (-330 * math.pi) * 0.75
        assert res["rhs"] == pytest.approx(expected, rel=1e-12)
        assert res["residual"] <= 1e-10 * (1 + abs(res["lhs"]))

    def test_random_family(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            n_h = rng.integers(1, 7)
            p = TrigPoly(
                10.0,
                {int(n): rng.uniform(-1, 1) for n in range(1, n_h + 1)},
                {int(n): rng.uniform(-1, 1) for n in range(1, n_h + 1)},
            )
            curve = SupportCurve(p, 1)
            for alpha in (math.pi / 6, math.pi / 4, math.pi / 2, 3 * math.pi / 4):
                res = area_identity(curve, alpha)
                assert res["residual"] <= 1e-10 * (1 + abs(res["lhs"]))


class TestCor24:
    def test_circle_equality(self, circle):
        res = check_cor24(circle, 1.0)
        assert res["satisfied"]
        assert res["gap"] == pytest.approx(0.0, abs=1e-12)

    def test_translated_circle_equality(self):
        c = SupportCurve(TrigPoly(10.0, {1: 1.0}), 1)
        res = check_cor24(c, 0.8)
        assert res["gap"] == pytest.approx(0.0, abs=1e-12)

    def test_oval_strict_gap(self, oval):
        res = check_cor24(oval, math.pi / 2)
        assert res["satisfied"]
        assert res["gap"] == pytest.approx(330 * math.pi, rel=1e-12)

    def test_requires_unit_rotation(self, sin2):
        with pytest.raises(ValueError):
            check_cor24(sin2, 1.0)
