import math

import numpy as np
import pytest

from curvelab.taylor import Jet


def jet_of(fn_derivs, x, order):
    """Jet from a list of derivative functions evaluated at x."""
    return Jet([fn_derivs[k](x) / math.factorial(k) for k in range(order + 1)])


def test_product_rule():
    x = 0.7
    sin = jet_of([math.sin, math.cos, lambda t: -math.sin(t), lambda t: -math.cos(t), math.sin], x, 4)
    exp_like = Jet.variable(x, 4)  # identity map
    prod = sin * exp_like
    # d/dx [x sin x] = sin x + x cos x ; second: 2cos x - x sin x
    assert prod.derivative_value(1) == pytest.approx(math.sin(x) + x * math.cos(x), rel=1e-12)
    assert prod.derivative_value(2) == pytest.approx(2 * math.cos(x) - x * math.sin(x), rel=1e-12)


def test_reciprocal_and_sqrt():
    x = 1.3
    f = Jet.variable(x, 5)
    inv = f.reciprocal()
    assert inv.derivative_value(3) == pytest.approx(-6 / x**4, rel=1e-12)
    root = f.sqrt()
    assert root.value() == pytest.approx(math.sqrt(x))
    assert root.derivative_value(1) == pytest.approx(0.5 / math.sqrt(x), rel=1e-12)
    assert root.derivative_value(2) == pytest.approx(-0.25 * x**-1.5, rel=1e-12)


def test_division_by_zero_constant():
    with pytest.raises(ZeroDivisionError):
        Jet([0.0, 1.0]).reciprocal()


def test_deriv_drops_order():
    j = Jet([1.0, 2.0, 3.0])
    d = j.deriv()
    assert d.order == 1
    assert np.allclose(d.c, [2.0, 6.0])


def test_mixed_order_operations():
    a = Jet([1.0, 1.0, 0.5, 0.1])
    b = a.deriv()  # one order lower
    c = a * b + 2.0
    assert c.order == b.order
    assert c.value() == pytest.approx(1.0 * 1.0 + 2.0)
