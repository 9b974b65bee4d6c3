import math

import numpy as np
import pytest

from curvelab import (
    DegenerateSingularSetError,
    EvolutoidSpec,
    evolutoid_point,
    model_cusp_ses,
    param_jet,
    ses_inflexions,
    ses_point,
    ses_singularities,
)
from curvelab.ses import ses_points_support

TWO_PI = 2 * math.pi

CUSP_T1 = np.array([181 / 818, 58 / 409])


class TestSesPoint:
    def test_circle_collapses_to_center(self, circle):
        for theta in np.linspace(0, TWO_PI, 33):
            sp = ses_point(circle, theta)
            assert np.allclose(sp.location, [0.0, 0.0], atol=1e-12)
            assert sp.alpha_of_param == pytest.approx(math.pi / 2, abs=1e-12)

    def test_model_cusp_values(self, model_cusp):
        assert np.allclose(ses_point(model_cusp, 1.0).location, CUSP_T1, atol=1e-12)
        assert np.allclose(ses_point(model_cusp, -1.0).location, CUSP_T1 * [1, -1], atol=1e-12)
        assert np.allclose(ses_point(model_cusp, 0.0).location, [0.0, 0.0], atol=1e-9)

    def test_support_oracle_matches_arc_length_form(self, oval):
        # theta form vs the arc-length form assembled from the jet directly
        for theta in np.linspace(0, TWO_PI, 17):
            jet = oval.jet(theta)
            offset = (-jet.rho * jet.rho_s1 * jet.tangent + jet.rho * jet.normal) / (
                1 + jet.rho_s1**2
            )
            expected = jet.point + offset
            assert np.allclose(ses_point(oval, theta).location, expected, atol=1e-9)

    def test_composition_identity(self, oval, peaks_rosette):
        # ses point = evolutoid point at the angle that makes it singular
        for curve in (oval, peaks_rosette):
            for theta in np.linspace(0.05, TWO_PI, 19):
                sp = ses_point(curve, theta)
                ev = evolutoid_point(EvolutoidSpec(curve, sp.alpha_of_param), theta)
                assert np.allclose(sp.location, ev, atol=1e-9 * (1 + np.linalg.norm(ev)))

    def test_composition_identity_param(self, model_cusp):
        for t in (-1.2, -0.5, 0.4, 1.0):
            sp = ses_point(model_cusp, t)
            ev = evolutoid_point(EvolutoidSpec(model_cusp, sp.alpha_of_param), t)
            assert np.allclose(sp.location, ev, atol=1e-9)

    def test_smooth_across_inflexions(self, four_inflexion_curve):
        # one-sided finite-difference tangents agree across each inflexion
        from curvelab import inflexion_points

        h = 1e-4
        for item in inflexion_points(four_inflexion_curve):
            t0 = item["t"]
            left = np.array([ses_point(four_inflexion_curve, t0 - k * h).location for k in (2, 1)])
            right = np.array([ses_point(four_inflexion_curve, t0 + k * h).location for k in (1, 2)])
            d_left = (left[1] - left[0]) / h
            d_right = (right[1] - right[0]) / h
            denom = max(np.linalg.norm(d_left), np.linalg.norm(d_right), 1e-12)
            assert np.linalg.norm(d_right - d_left) / denom <= 1e-3
            # and the set passes through the inflexion point itself
            assert np.allclose(
                ses_point(four_inflexion_curve, t0).location,
                four_inflexion_curve.points(t0),
                atol=1e-6,
            )

    def test_boundedness(self, four_inflexion_curve, oval):
        # evolutoids are unbounded near inflexions, the set of their
        # singular points is not
        for curve in (four_inflexion_curve, oval):
            lo, hi = (curve.domain if hasattr(curve, "domain") else (0, TWO_PI))
            bound = 10 * curve.diameter()
            for t in np.linspace(lo, hi, 257):
                loc = ses_point(curve, float(t)).location
                assert np.linalg.norm(loc) < bound


class TestSesSingularities:
    def test_circle_rejected(self, circle):
        with pytest.raises(DegenerateSingularSetError):
            ses_singularities(circle)

    def test_four_inflexion_curve_has_none(self, four_inflexion_curve):
        assert ses_singularities(four_inflexion_curve) == []

    def test_oval_even_count_all_cusps(self, oval):
        sings = ses_singularities(oval)
        assert sings and len(sings) % 2 == 0
        assert all(s.kind == "cusp" for s in sings)
        # independent count: sign changes of the discriminant on a dense scan
        thetas = np.linspace(0, TWO_PI, 16384, endpoint=False)
        disc = oval.rho(thetas) * oval.rho(thetas, 2) - oval.rho(thetas, 1) ** 2
        changes = int(np.sum(disc * np.roll(disc, -1) < 0))
        assert len(sings) == changes

    def test_discriminant_vanishes_at_roots(self, oval):
        for s in ses_singularities(oval):
            disc = float(
                oval.rho(s.param) * oval.rho(s.param, 2) - oval.rho(s.param, 1) ** 2
            )
            assert abs(disc) <= 1e-6 * oval.scale("sing")

    def test_roots_are_critical_points_of_alpha(self, oval):
        # d(alpha)/d(theta) vanishes exactly at the reported parameters
        h = 1e-6
        for s in ses_singularities(oval):
            a_plus = ses_point(oval, s.param + h).alpha_of_param
            a_minus = ses_point(oval, s.param - h).alpha_of_param
            assert abs(a_plus - a_minus) / (2 * h) <= 1e-4


class TestSesInflexions:
    def test_circle_rejected(self, circle):
        with pytest.raises(DegenerateSingularSetError):
            ses_inflexions(circle)

    def test_locally_convex_set_has_none(self):
        # with 2 rho rho'' (arc length) bounded above -1 the criterion
        # 1 + rho'^2 + 2 rho rho'' never reaches zero
        from curvelab import SupportCurve, TrigPoly

        curve = SupportCurve(TrigPoly(10.0, {2: 0.1}), 1)
        thetas = np.linspace(0, TWO_PI, 512)
        crit = (
            curve.rho(thetas) ** 2
            - curve.rho(thetas, 1) ** 2
            + 2 * curve.rho(thetas) * curve.rho(thetas, 2)
        )
        assert np.all(crit > 0)
        assert ses_inflexions(curve) == []

    def test_oval_count_matches_determinant_scan(self, oval):
        items = ses_inflexions(oval)
        # oracle: sign changes of det(ses', ses'') along a dense grid,
        # by numerical differentiation of the parameterization
        thetas = np.linspace(0, TWO_PI, 4096, endpoint=False)
        h = 1e-5
        p0 = ses_points_support(oval, thetas)
        pp = ses_points_support(oval, thetas + h)
        pm = ses_points_support(oval, thetas - h)
        d1 = (pp - pm) / (2 * h)
        d2 = (pp - 2 * p0 + pm) / h**2
        det = d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0]
        # exclude neighborhoods of the set's own cusps where det blows up
        cusp_params = [s.param for s in ses_singularities(oval)]
        mask = np.ones(len(thetas), dtype=bool)
        for c in cusp_params:
            dist = np.minimum(np.abs(thetas - c), TWO_PI - np.abs(thetas - c))
            mask &= dist > 0.03
        sign = np.sign(det[mask])
        changes = int(np.sum(sign[:-1] * sign[1:] < 0))
        assert len(items) == changes


class TestModelCuspClosedForm:
    def test_pinned_values(self):
        assert np.allclose(model_cusp_ses(0.0), [0.0, 0.0], atol=1e-15)
        assert np.allclose(model_cusp_ses(1.0), CUSP_T1, atol=1e-15)
        assert np.allclose(model_cusp_ses(-1.0), CUSP_T1 * [1, -1], atol=1e-15)

    def test_parity(self):
        ts = np.linspace(-1.4, 1.4, 23)
        vals = model_cusp_ses(ts)
        flipped = model_cusp_ses(-ts)
        assert np.allclose(vals[:, 0], flipped[:, 0], atol=1e-14)
        assert np.allclose(vals[:, 1], -flipped[:, 1], atol=1e-14)

    def test_readings_agree_at_unit_points(self):
        for t in (0.0, 1.0, -1.0):
            assert np.allclose(
                model_cusp_ses(t, "quartic"), model_cusp_ses(t, "printed"), atol=1e-15
            )

    def test_quartic_reading_matches_pipeline(self, model_cusp):
        # the quartic denominator reproduces the analytic route away from the
        # coincidence points; the collapsed reading does not
        for t in (0.37, 0.8, -1.2):
            pipeline = ses_point(model_cusp, t).location
            assert np.allclose(model_cusp_ses(t, "quartic"), pipeline, atol=1e-12)
        assert not np.allclose(model_cusp_ses(0.37, "printed"), ses_point(model_cusp, 0.37).location, atol=1e-6)

    def test_cusp_at_origin_numerical_jets(self, model_cusp):
        # velocity vanishes at t=0 while the second/third derivatives stay
        # independent: the set itself has a cusp there
        h = 2e-3
        samples = np.array([ses_point(model_cusp, k * h).location for k in (-2, -1, 0, 1, 2)])
        d1 = (samples[3] - samples[1]) / (2 * h)
        d2 = (samples[3] - 2 * samples[2] + samples[1]) / h**2
        d3 = (samples[4] - 2 * samples[3] + 2 * samples[1] - samples[0]) / (2 * h**3)
        assert np.linalg.norm(d1) <= 1e-2
        det = d2[0] * d3[1] - d2[1] * d3[0]
        assert abs(det) > 1.0  # the exact limit is det((-2,0),(0,6)) = -12


class TestSesFromHalfInteger:
    def test_half_harmonic_curve_runs(self):
        from curvelab import SupportCurve, TrigPoly

        curve = SupportCurve(TrigPoly(0, {}, {5: 1}, period=2 * TWO_PI), 2.5)
        locs = np.array(
            [ses_point(curve, t).location for t in np.linspace(0.1, 2 * TWO_PI, 64)]
        )
        assert np.all(np.isfinite(locs))
