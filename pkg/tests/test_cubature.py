"""Tests for the exact cubature rule and the discrete moments."""

import math

import numpy as np
import pytest

from mpinterp import (
    InvalidDegreeError,
    cheb_u,
    cubature_rule,
    discrete_moment_closed,
    discrete_moment_direct,
    exactness_table,
    integrate,
)


class TestRule:
    def test_constant_normalized_to_one(self):
        rule = cubature_rule(4)
        assert abs(integrate(rule, lambda x, y: 1.0).normalized - 1.0) < 1e-14

    def test_mixed_first_degree_vanishes(self):
        rule = cubature_rule(4)
        val = integrate(rule, lambda x, y: cheb_u(1, x) * cheb_u(1, y)).normalized
        assert abs(val) < 1e-13

    def test_x2y2(self):
        # (4/pi^2) * (integral of x^2 sqrt(1-x^2))^2 = (4/pi^2)(pi/8)^2 = 1/16
        rule = cubature_rule(2)
        assert abs(integrate(rule, lambda x, y: x * x * y * y).normalized - 1 / 16) < 1e-13

    def test_invalid_degree(self):
        with pytest.raises(InvalidDegreeError):
            cubature_rule(5)

    def test_weights_positive_and_normalized(self):
        rule = cubature_rule(12)
        assert np.all(rule.weights > 0)
        assert abs(rule.weights.sum() - 1.0) < 1e-12
        assert rule.exactness == 24


class TestIntegrate:
    def test_total_mass(self):
        rule = cubature_rule(2)
        assert abs(integrate(rule, lambda x, y: 1.0).raw - math.pi**2 / 4) < 1e-13

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_pure_second_degree_vanishes(self, n):
        rule = cubature_rule(n)
        val = integrate(rule, lambda x, y: cheb_u(2, x)).normalized
        assert abs(val) < 1e-13

    def test_smooth_function_self_consistency(self):
        f = lambda x, y: math.cos(x + y)
        a = integrate(cubature_rule(20), f).normalized
        b = integrate(cubature_rule(24), f).normalized
        assert abs(a - b) < 1e-10

    def test_nonfinite_value_names_node(self):
        rule = cubature_rule(2)
        x0, y0 = rule.nodes.points[0]

        def bad(x, y):
            return math.nan if (x, y) == (x0, y0) else 1.0

        with pytest.raises(ValueError) as excinfo:
            integrate(rule, bad)
        assert repr(x0) in str(excinfo.value)


class TestDiscreteMoments:
    def test_zero_zero(self):
        assert abs(discrete_moment_direct(4, 0, 0) - 5.25) < 1e-12

    def test_vanishing_cases(self):
        assert abs(discrete_moment_direct(4, 4, 0)) < 1e-12
        assert abs(discrete_moment_direct(4, 1, 1)) < 1e-12

    def test_closed_divisibility_cases(self):
        # n=6: i=8=(n+2), j=9=(n+3) and the doubly shifted pair i=6, j=7
        assert discrete_moment_closed(6, 8, 9) == -9.0
        assert discrete_moment_closed(6, 6, 7) == -9.0

    def test_closed_generic_zero(self):
        assert discrete_moment_closed(6, 3, 5) == 0.0
        assert discrete_moment_closed(10, 7, 20) == 0.0

    @pytest.mark.parametrize("n", [2, 6])
    def test_direct_matches_closed_exhaustive(self, n):
        tol = 1e-10 * (1 + (n + 2) * (n + 3) / 8)
        for i in range(2 * n + 7):
            for j in range(2 * n + 7):
                d = discrete_moment_direct(n, i, j)
                c = discrete_moment_closed(n, i, j)
                assert abs(d - c) < tol, (n, i, j)


class TestExactness:
    @pytest.mark.parametrize("n", [2, 4])
    def test_basis_sweep(self, n):
        for i, j, val, err in exactness_table(n):
            assert err < 1e-12, (i, j, val)

    def test_extended_table_shows_failures(self):
        # beyond total degree 2n the rule is no longer exact
        rows = exactness_table(2, 2 * 2 + 6)
        beyond = [err for i, j, _, err in rows if i + j > 4]
        assert max(beyond) > 1e-3
