import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvelab import TrigPoly

TWO_PI = 2 * math.pi


def random_trigpoly(draw, period=TWO_PI, max_harmonic=6):
    n_terms = draw(st.integers(0, max_harmonic))
    coeff = st.floats(-1, 1, allow_nan=False, allow_infinity=False)
    cos_c = {n: draw(coeff) for n in range(1, n_terms + 1)}
    sin_c = {n: draw(coeff) for n in range(1, n_terms + 1)}
    return TrigPoly(draw(coeff) * 10, cos_c, sin_c, period)


trigpolys = st.builds(lambda: None).flatmap(
    lambda _: st.composite(lambda draw: random_trigpoly(draw))()
)


class TestEvaluation:
    def test_constant(self):
        p = TrigPoly(7.5)
        assert p(0.3) == 7.5
        assert np.all(p(np.linspace(0, 9, 11)) == 7.5)

    def test_known_values(self):
        p = TrigPoly(40, {3: 3}, {2: -1})
        assert p(0.0) == pytest.approx(43.0, abs=1e-15)
        theta = 0.7
        expected = 40 + 3 * math.cos(3 * theta) - math.sin(2 * theta)
        assert p(theta) == pytest.approx(expected, rel=1e-15)

    def test_half_harmonics(self):
        p = TrigPoly(0, {}, {5: 1}, period=2 * TWO_PI)
        theta = 1.234
        assert p(theta) == pytest.approx(math.sin(2.5 * theta), rel=1e-14)

    @given(st.data())
    @settings(max_examples=50, deadline=None)
    def test_periodicity(self, data):
        p = random_trigpoly(data.draw)
        theta = data.draw(st.floats(-10, 10, allow_nan=False))
        assert p(theta) == pytest.approx(p(theta + p.period), abs=1e-9 * (1 + abs(p(theta))))


class TestDerivative:
    def test_derivative_of_constant(self):
        assert TrigPoly(4.0).derivative()(1.0) == 0.0

    def test_hand_derivative(self):
        # d/dt [40 + 3cos3t - sin2t] = -9 sin 3t - 2 cos 2t
        p = TrigPoly(40, {3: 3}, {2: -1}).derivative()
        assert p(0.0) == pytest.approx(-2.0, abs=1e-15)
        assert p(0.5) == pytest.approx(-9 * math.sin(1.5) - 2 * math.cos(1.0), rel=1e-14)

    def test_half_harmonic_derivative(self):
        p = TrigPoly(0, {}, {5: 1}, period=2 * TWO_PI).derivative()
        assert p(0.0) == pytest.approx(2.5, abs=1e-15)

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_matches_finite_differences(self, data):
        # exact-differentiation closure invariant
        p = random_trigpoly(data.draw)
        theta = data.draw(st.floats(0, TWO_PI, allow_nan=False))
        h = 1e-5
        fd = (p(theta + h) - p(theta - h)) / (2 * h)
        d1 = p.derivative()(theta)
        assert abs(d1 - fd) <= 1e-6 * (1 + abs(d1))

    def test_closure_same_period(self):
        p = TrigPoly(1, {2: 0.5}, {7: -0.25}, period=2 * TWO_PI)
        d = p.derivative(3)
        assert d.period == p.period
        assert d.constant == 0.0


class TestShift:
    def test_shift_matches_pointwise(self):
        p = TrigPoly(2.0, {1: 0.3, 4: -1.2}, {2: 0.9})
        delta = 0.83
        q = p.shifted(delta)
        for theta in np.linspace(0, TWO_PI, 17):
            assert q(theta) == pytest.approx(p(theta - delta), rel=1e-13, abs=1e-13)

    def test_shift_by_period_is_identity(self):
        p = TrigPoly(1.0, {3: 2.0}, {5: -1.0})
        q = p.shifted(p.period)
        assert q.cos_coeffs[3] == pytest.approx(2.0, abs=1e-12)
        assert q.sin_coeffs[5] == pytest.approx(-1.0, abs=1e-12)


class TestAlgebra:
    def test_add(self):
        p = TrigPoly(1, {1: 1}) + TrigPoly(2, {1: 2}, {3: 1})
        assert p.constant == 3 and p.cos_coeffs == {1: 3.0} and p.sin_coeffs == {3: 1.0}

    def test_period_mismatch(self):
        with pytest.raises(ValueError):
            TrigPoly(1) + TrigPoly(1, period=2 * TWO_PI)

    def test_bad_period(self):
        with pytest.raises(ValueError):
            TrigPoly(1, period=3 * math.pi)

    def test_bad_harmonic(self):
        with pytest.raises(ValueError):
            TrigPoly(1, {0: 2.0})

    def test_parseval_square_integral(self):
        p = TrigPoly(3.0, {2: 1.5}, {5: -0.5})
        thetas = np.linspace(0, TWO_PI, 4096, endpoint=False)
        quad = np.mean(p(thetas) ** 2) * TWO_PI
        assert p.period_square_integral() == pytest.approx(quad, rel=1e-12)
