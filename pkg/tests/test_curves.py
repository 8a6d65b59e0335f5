import math

import numpy as np
import pytest

from curvelab import (
    CurveComponent,
    HolomorphicCurve,
    component_log_moduli,
    estimate_growth,
    eval_component,
    spherical_derivative_of,
)
from curvelab.errors import CurveValidationError


class TestEvalComponent:
    def test_exp_at_zero(self):
        lm, phase, value = eval_component(CurveComponent.exp_poly([0, 1]), 0.0)
        assert lm == pytest.approx(0.0)
        assert value == pytest.approx(1.0)

    def test_poly_zero_flagged(self):
        lm, _, value = eval_component(CurveComponent.poly([0, 1]), 0.0)
        assert lm == -math.inf
        assert value == 0.0

    def test_exp_large_argument(self):
        lm, _, value = eval_component(CurveComponent.exp_poly([0, 1]), 10.0)
        assert lm == pytest.approx(10.0)
        assert value == pytest.approx(math.exp(10.0))

    def test_no_overflow_in_log_domain(self):
        lm, phase, value = eval_component(CurveComponent.exp_poly([0, 1]), 5000.0)
        assert lm == pytest.approx(5000.0)
        assert value is None
        assert abs(phase) == pytest.approx(1.0)


class TestLogNorm:
    def test_two_units(self, exp_curve):
        assert exp_curve.u(0.0) == pytest.approx(math.log(math.sqrt(2)))

    def test_line_at_origin(self, line_curve):
        assert line_curve.u(0.0) == pytest.approx(0.0)

    def test_log_sum_exp_tail(self, exp_curve):
        assert exp_curve.u(100.0) == pytest.approx(
            100 + math.log(math.sqrt(1 + math.exp(-200))))


class TestSphericalDerivative:
    def test_exp_at_zero(self, exp_curve):
        assert exp_curve.spherical_derivative(0.0) == pytest.approx(0.5)

    def test_constant_curve(self, constant_curve):
        z = np.array([0.0, 1.0 + 2j, -3.0])
        assert np.all(np.asarray(constant_curve.spherical_derivative(z)) == 0.0)

    def test_line_at_zero(self, line_curve):
        assert line_curve.spherical_derivative(0.0) == pytest.approx(1.0)

    def test_classical_formula_n1(self, exp_curve):
        # for n=1 and w = f_0/f_1 this is |w'|/(1+|w|^2)
        rng = np.random.default_rng(0)
        z = rng.uniform(-3, 3, 1000) + 1j * rng.uniform(-3, 3, 1000)
        w = np.exp(z)
        classical = np.abs(w) / (1 + np.abs(w) ** 2)
        ours = np.asarray(exp_curve.spherical_derivative(z))
        assert np.max(np.abs(ours - classical) / classical) < 1e-12

    def test_permutation_invariance(self, product_curve):
        rng = np.random.default_rng(1)
        z = rng.uniform(-5, 5, 200) + 1j * rng.uniform(-5, 5, 200)
        base = np.asarray(spherical_derivative_of(product_curve.components, z))
        perm = (product_curve.components[2], product_curve.components[0],
                product_curve.components[1])
        other = np.asarray(spherical_derivative_of(perm, z))
        assert np.allclose(base, other, rtol=1e-12, atol=1e-300)


class TestComponentLogModuli:
    def test_reduced_max_on_imaginary_axis(self):
        curve = HolomorphicCurve(
            2, (CurveComponent.exp_poly([0, 1]), CurveComponent.exp_poly([0, -1]),
                CurveComponent.one()), 0.0)
        u_all, u_star, argmax = component_log_moduli(curve, 2j)
        assert u_star == pytest.approx(0.0)
        assert argmax == [1, 2]

    def test_reduced_max_real_axis(self):
        curve = HolomorphicCurve(
            2, (CurveComponent.exp_poly([0, 1]), CurveComponent.exp_poly([0, -1]),
                CurveComponent.one()), 0.0)
        u_all, u_star, argmax = component_log_moduli(curve, 1.0)
        # u_1 = Re(-z) = -1, u_2 = 0: the constant component wins
        assert u_star == pytest.approx(0.0)
        assert argmax == [2]
        assert u_all[0] == pytest.approx(1.0)

    def test_single_reduced_component(self, line_curve):
        _, u_star, _ = component_log_moduli(line_curve, 3.0 + 1j)
        assert u_star == pytest.approx(0.0)


class TestValidation:
    def test_vanishing_middle_component_rejected(self):
        with pytest.raises(CurveValidationError, match="nonvanishing"):
            HolomorphicCurve(2, (CurveComponent.poly([0, 1]),
                                 CurveComponent.poly([0, 1]),
                                 CurveComponent.one()), 0.0)

    def test_last_component_must_be_one(self):
        with pytest.raises(CurveValidationError, match="constant 1"):
            HolomorphicCurve(1, (CurveComponent.one(),
                                 CurveComponent.exp_poly([0, 1])), 0.0)

    def test_degree_cap(self):
        with pytest.raises(CurveValidationError, match="exceeds"):
            HolomorphicCurve(2, (CurveComponent.poly([0, 1]),
                                 CurveComponent.exp_poly([0, 0, 0, 1]),
                                 CurveComponent.one()), 0.0)
        # same exponent fine once sigma is raised
        HolomorphicCurve(2, (CurveComponent.poly([0, 1]),
                             CurveComponent.exp_poly([0, 0, 0, 1]),
                             CurveComponent.one()), 0.5)


class TestEstimateGrowth:
    def test_exp_curve_K(self, exp_curve):
        sigma_hat, k_hat = estimate_growth(exp_curve, 5.0, 60.0, 8)
        assert abs(sigma_hat) < 1e-6
        assert k_hat == pytest.approx(0.5, abs=1e-6)

    def test_constant_curve_degenerate(self, constant_curve):
        assert estimate_growth(constant_curve, 1.0, 10.0, 4) == (0.0, 0.0)

    def test_square_exp_slope(self, square_exp_curve):
        sigma_hat, k_hat = estimate_growth(square_exp_curve, 5.0, 20.0, 8)
        assert sigma_hat == pytest.approx(1.0, abs=1e-6)
        assert k_hat == pytest.approx(1.0, abs=1e-6)
