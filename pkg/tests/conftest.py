from pathlib import Path

import pytest

from curvelab import CurveComponent, HolomorphicCurve

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def line_curve():
    """(z, 1): rational curve, closed-form characteristic."""
    return HolomorphicCurve(1, (CurveComponent.poly([0, 1]), CurveComponent.one()),
                            0.0, 1.0)


@pytest.fixture
def exp_curve():
    """(e^z, 1): bounded spherical derivative, K = 1/2."""
    return HolomorphicCurve(1, (CurveComponent.exp_poly([0, 1]), CurveComponent.one()),
                            0.0, 0.5)


@pytest.fixture
def product_curve():
    """(z e^z, e^z, 1): n = 2, f_0 with a zero."""
    return HolomorphicCurve(
        2,
        (CurveComponent.poly_exp([0, 1], [0, 1]),
         CurveComponent.exp_poly([0, 1]),
         CurveComponent.one()),
        0.0, 0.55)


@pytest.fixture
def square_exp_curve():
    """(e^{z^2}, 1): sigma = 1."""
    return HolomorphicCurve(
        1, (CurveComponent.exp_poly([0, 0, 1]), CurveComponent.one()), 1.0, 1.05)


@pytest.fixture
def constant_curve():
    return HolomorphicCurve(1, (CurveComponent.poly([1]), CurveComponent.one()),
                            0.0, 1.0)
