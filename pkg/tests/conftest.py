import math

import numpy as np
import pytest

from curvelab import CoefficientMap, ParamCurve, SupportCurve, TrigPoly

TWO_PI = 2 * math.pi


@pytest.fixture(scope="session")
def oval():
    """Oval with support function 40 + 3cos(3t) - sin(2t)."""
    return SupportCurve(TrigPoly(40.0, {3: 3.0}, {2: -1.0}), 1)


@pytest.fixture(scope="session")
def circle():
    return SupportCurve(TrigPoly(10.0), 1)


@pytest.fixture(scope="session")
def unit_circle_support():
    return SupportCurve(TrigPoly(1.0), 1)


def sin_hedgehog(k):
    if k == int(k):
        return SupportCurve(TrigPoly(0.0, {}, {int(k): 1.0}), int(k))
    n = int(round(2 * k))
    return SupportCurve(TrigPoly(0.0, {}, {n: 1.0}, period=2 * TWO_PI), k)


@pytest.fixture(scope="session")
def sin2():
    return sin_hedgehog(2)


@pytest.fixture(scope="session")
def sin3():
    return sin_hedgehog(3)


@pytest.fixture(scope="session")
def peaks_rosette():
    """20 + sin(3t) + 0.5 sin(2t) + 0.25 cos(5t): a rosette whose singular-set
    graph has several extrema."""
    return SupportCurve(TrigPoly(20.0, {5: 0.25}, {3: 1.0, 2: 0.5}), 1)


@pytest.fixture(scope="session")
def model_cusp():
    """(t^2, t^3) on [-1.5, 1.5]."""
    return ParamCurve(
        CoefficientMap(poly=[0, 0, 1]), CoefficientMap(poly=[0, 0, 0, 1]), (-1.5, 1.5)
    )


@pytest.fixture(scope="session")
def four_inflexion_curve():
    """(3 - cos 2t)(cos t, sin t), expanded into trig tables."""
    return ParamCurve(
        CoefficientMap(cos={1: 2.5, 3: -0.5}),
        CoefficientMap(sin={1: 3.5, 3: -0.5}),
        (0.0, TWO_PI),
        closed=True,
    )


@pytest.fixture(scope="session")
def unit_circle_param():
    return ParamCurve(
        CoefficientMap(cos={1: 1.0}), CoefficientMap(sin={1: 1.0}), (0.0, TWO_PI), closed=True
    )


def central_diff(fn, x, h=1e-5):
    return (fn(x + h) - fn(x - h)) / (2 * h)


def rng():
    return np.random.default_rng(20260810)
