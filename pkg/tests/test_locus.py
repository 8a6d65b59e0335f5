import math

import numpy as np
import pytest

from curvelab import (
    branch_asymptotics,
    count_branch_bound,
    regularity_radius,
    riesz_of_max,
    trace_branches,
)
from curvelab.characteristic import reduced_characteristic_polys
from curvelab.errors import LocusEmptyError
from curvelab.polynomials import ComplexPoly

Z = ComplexPoly([0, 1])
Z2 = ComplexPoly([0, 0, 1])
ZERO = ComplexPoly([])


class TestRegularityRadius:
    def test_linear_pair(self):
        assert regularity_radius([Z, ZERO]) == pytest.approx(2.0)

    def test_quadratic_pair(self):
        assert regularity_radius([Z2, -1 * Z2]) == pytest.approx(2.0)

    def test_identical_polys_error(self):
        with pytest.raises(LocusEmptyError):
            regularity_radius([Z, Z])


class TestTraceBranches:
    def test_imaginary_axis(self):
        summary = trace_branches([Z, ZERO], 2.0, 30.0)
        assert len(summary.branches) == 2
        for br in summary.branches:
            assert np.allclose(br.points.real, 0.0, atol=1e-9)
            assert np.allclose(br.densities, 1 / (2 * math.pi), atol=1e-12)
            assert br.active

    def test_diagonals(self):
        summary = trace_branches([Z2, -1 * Z2], 2.0, 30.0)
        assert len(summary.branches) == 4
        for br in summary.branches:
            # J(z) = |4z| along the diagonals
            assert np.allclose(br.densities,
                               4 * np.abs(br.points) / (2 * math.pi), rtol=1e-9)

    def test_duplicate_pair_no_branches(self):
        assert trace_branches([Z, Z], 2.0, 10.0).branches == []
        summary = trace_branches([Z, Z, ZERO], 2.0, 10.0)
        assert len(summary.branches) == 2  # duplicate dropped, one pair left

    def test_residual_invariant(self):
        rng = np.random.default_rng(7)
        polys = [ComplexPoly(rng.normal(size=3) + 1j * rng.normal(size=3)),
                 ComplexPoly(rng.normal(size=3) + 1j * rng.normal(size=3))]
        diff = polys[0] - polys[1]
        r0 = regularity_radius(polys)
        summary = trace_branches(polys, r0, 6 * r0)
        deg = int(diff.degree())
        for br in summary.branches:
            res = np.abs(np.asarray(diff(br.points)).real)
            assert np.all(res <= 1e-10 * (1 + np.abs(br.points) ** deg))


class TestAsymptotics:
    def test_linear(self):
        summary = trace_branches([Z, ZERO], 2.0, 40.0)
        b, c = branch_asymptotics(summary.branches[0])
        assert b == 0.0
        assert c == pytest.approx(1 / (2 * math.pi))

    def test_quadratic(self):
        summary = trace_branches([Z2, -1 * Z2], 2.0, 40.0)
        for br in summary.branches:
            b, c = branch_asymptotics(br)
            assert b == 1.0
            assert c == pytest.approx(2 / math.pi)

    def test_cubic_leading(self):
        # difference 3z^2: J = 6|z|
        summary = trace_branches([ComplexPoly([0, 0, 3]), ZERO], 2.0, 40.0)
        for br in summary.branches:
            b, c = branch_asymptotics(br)
            assert b == 1.0
            assert c == pytest.approx(3 / math.pi)


class TestRieszMass:
    def test_half_line(self):
        r0 = 2.0
        summary = trace_branches([Z, ZERO], r0, 45.0)
        for t in (5.0, 20.0, 40.0):
            nu = riesz_of_max([Z, ZERO], t, r0, summary)
            assert nu == pytest.approx((t - r0) / math.pi, rel=1e-4)

    def test_abs_square(self):
        r0 = 2.0
        summary = trace_branches([Z2, -1 * Z2], r0, 45.0)
        for t in (5.0, 20.0, 40.0):
            nu = riesz_of_max([Z2, -1 * Z2], t, r0, summary)
            assert nu == pytest.approx(4 * (t * t - r0 * r0) / math.pi, rel=1e-3)

    def test_matches_jensen_route(self):
        # independent oracle: nu(t) = t dT*/dt from the exact circle means
        polys = [Z2, -1 * Z2]
        r0 = 2.0
        summary = trace_branches(polys, r0, 45.0)
        h = 1e-5
        for t in (5.0, 10.0, 20.0):
            def nu_jensen(s):
                return (reduced_characteristic_polys(polys, s * math.exp(h))
                        - reduced_characteristic_polys(polys, s * math.exp(-h))) / (2 * h)
            oracle = nu_jensen(t) - nu_jensen(r0)
            assert riesz_of_max(polys, t, r0, summary) == pytest.approx(oracle, rel=0.01)


class TestBranchCountBound:
    def test_examples(self):
        assert count_branch_bound([Z, ZERO], 0.0) == (2, 4, True)
        assert count_branch_bound([Z2, -1 * Z2], 0.0) == (4, 4, True)
        assert count_branch_bound([Z], 0.0) == (0, 0, True)

    @pytest.mark.parametrize("sigma", [0.0, 0.5, 1.0])
    def test_randomized(self, sigma):
        rng = np.random.default_rng(int(sigma * 10))
        cap = math.floor(2 * sigma + 2)
        for _ in range(200):
            n = int(rng.integers(2, 5))
            polys = []
            for _ in range(n):
                deg = int(rng.integers(0, cap + 1))
                coeffs = rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)
                polys.append(ComplexPoly(coeffs))
            count, bound, ok = count_branch_bound(polys, sigma)
            assert ok
