"""Tests for Chebyshev evaluation and the trig summation identities."""

import math

import numpy as np
import pytest

from mpinterp import (
    DomainError,
    SingularityError,
    TrigSumKind,
    TripleSineArgs,
    cheb_t,
    cheb_u,
    cheb_u_values,
    trig_sum_closed,
    trig_sum_direct,
    triple_sine_sum_closed,
    triple_sine_sum_direct,
    weighted_sine_product_sum_closed,
    weighted_sine_product_sum_direct,
)

PAIR_KINDS = [TrigSumKind.ODD_COSINE, TrigSumKind.COSINE, TrigSumKind.SINE]
TRIPLE_KINDS = [TrigSumKind.SIN_SIN, TrigSumKind.COS_COS, TrigSumKind.SIN_COS]


class TestChebU:
    def test_u0_is_one(self):
        assert cheb_u(0, 0.3) == 1.0

    def test_max_attained_at_one(self):
        assert cheb_u(3, 1.0) == 4.0
        assert cheb_u(7, -1.0) == -8.0

    def test_zero_convention(self):
        assert cheb_u(-1, 0.5) == 0.0

    def test_domain_error(self):
        with pytest.raises(DomainError):
            cheb_u(2, 1.5)

    def test_bounded_by_degree_plus_one(self):
        x = np.linspace(-1, 1, 1000)
        for j in (1, 4, 9, 25):
            vals = cheb_u_values(j, x)[:, j]
            assert np.all(np.abs(vals) <= j + 1 + 1e-12)

    def test_sine_ratio_identity(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            theta = rng.uniform(0.01, np.pi - 0.01)
            j = int(rng.integers(0, 101))
            lhs = cheb_u(j, math.cos(theta)) * math.sin(theta)
            assert abs(lhs - math.sin((j + 1) * theta)) < 1e-12 * (j + 1)

    def test_discrete_orthogonality(self):
        # Gauss quadrature for the weight sqrt(1-x^2) with n+2 nodes is exact
        # through degree 2n+3, so it reproduces the pi/2 normalization.
        n = 8
        N = n + 2
        i = np.arange(1, N + 1)
        nodes = np.cos(i * np.pi / (N + 1))
        w = np.pi / (N + 1) * np.sin(i * np.pi / (N + 1)) ** 2
        U = cheb_u_values(n, nodes)
        gram = (U * w[:, None]).T @ U
        assert np.allclose(gram, np.pi / 2 * np.eye(n + 1), atol=1e-12)


class TestChebT:
    def test_value_at_one(self):
        assert cheb_t(5, 1.0) == 1.0

    def test_cos_pi(self):
        assert cheb_t(2, 0.0) == -1.0

    def test_composition(self):
        assert abs(cheb_t(4, math.cos(math.pi / 8))) < 1e-12

    def test_domain_error(self):
        with pytest.raises(DomainError):
            cheb_t(2, -1.1)


class TestTrigSums:
    def test_odd_cosine_single_term(self):
        assert np.isclose(trig_sum_closed(TrigSumKind.ODD_COSINE, 0, 1.0), math.cos(1.0))

    def test_cosine_example(self):
        assert np.isclose(trig_sum_closed(TrigSumKind.COSINE, 3, np.pi / 2), -1.0)

    def test_sin_sin_single_term(self):
        val = trig_sum_closed(TrigSumKind.SIN_SIN, 0, 0.7, 1.1)
        assert np.isclose(val, math.sin(0.7) * math.sin(1.1))

    def test_sine_direct_all_zero(self):
        assert trig_sum_direct(TrigSumKind.SINE, 4, 0.0) == 0.0

    def test_cos_cos_direct_is_literal(self):
        expected = sum(math.cos((i + 1) * 0.3) * math.cos((i + 1) * 0.9) for i in range(3))
        assert np.isclose(trig_sum_direct(TrigSumKind.COS_COS, 2, 0.3, 0.9), expected)

    def test_sin_cos_cross_check(self):
        d = trig_sum_direct(TrigSumKind.SIN_COS, 5, 1.2, 0.4)
        c = trig_sum_closed(TrigSumKind.SIN_COS, 5, 1.2, 0.4)
        assert abs(d - c) < 1e-12

    def test_closed_raises_on_singularity(self):
        with pytest.raises(SingularityError):
            trig_sum_closed(TrigSumKind.ODD_COSINE, 3, 0.0)
        with pytest.raises(SingularityError):
            trig_sum_closed(TrigSumKind.SINE, 3, 0.0)
        with pytest.raises(SingularityError):
            trig_sum_closed(TrigSumKind.SIN_SIN, 2, 0.5, 0.5)

    @pytest.mark.parametrize("kind", PAIR_KINDS)
    def test_pair_kinds_match_direct(self, kind):
        rng = np.random.default_rng(11)
        checked = 0
        while checked < 2000:
            m = int(rng.integers(0, 60))
            x = rng.uniform(-3.0, 3.0)
            if abs(math.sin(x)) < 1e-3 or abs(math.sin(x / 2)) < 1e-3:
                continue
            d = trig_sum_direct(kind, m, x)
            c = trig_sum_closed(kind, m, x)
            assert abs(d - c) <= 1e-10 * (1 + abs(d))
            checked += 1

    @pytest.mark.parametrize("kind", TRIPLE_KINDS)
    def test_triple_kinds_match_direct(self, kind):
        rng = np.random.default_rng(13)
        checked = 0
        while checked < 2000:
            l = int(rng.integers(0, 60))
            a, b = rng.uniform(-3.0, 3.0, 2)
            if abs(math.sin((a - b) / 2)) < 1e-3 or abs(math.sin((a + b) / 2)) < 1e-3:
                continue
            d = trig_sum_direct(kind, l, a, b)
            c = trig_sum_closed(kind, l, a, b)
            assert abs(d - c) <= 1e-10 * (1 + abs(d))
            checked += 1


class TestWeightedSineProduct:
    def test_symmetric_arguments_refuse(self):
        with pytest.raises(SingularityError):
            weighted_sine_product_sum_closed(0, 0.5, 0.5)

    @pytest.mark.parametrize("l,alpha,beta", [(3, 0.8, 1.3), (7, 2.0, 0.6)])
    def test_matches_direct(self, l, alpha, beta):
        d = weighted_sine_product_sum_direct(l, alpha, beta)
        c = weighted_sine_product_sum_closed(l, alpha, beta)
        assert abs(d - c) < 1e-12 * (1 + abs(d))

    def test_random_draws(self):
        rng = np.random.default_rng(17)
        checked = 0
        while checked < 2000:
            l = int(rng.integers(0, 50))
            a, b = rng.uniform(-3.0, 3.0, 2)
            guards = (math.sin((a - b) / 2), math.sin((a + b) / 2), math.sin(b))
            if min(abs(g) for g in guards) < 1e-3:
                continue
            d = weighted_sine_product_sum_direct(l, a, b)
            c = weighted_sine_product_sum_closed(l, a, b)
            assert abs(d - c) <= 1e-10 * (1 + abs(d))
            checked += 1


class TestTripleSineSum:
    def test_single_term(self):
        args = TripleSineArgs(0, 0.4, 0.9, 0.2)
        expected = math.sin(0.4) * math.sin(0.9) * math.sin(3 * 0.2)
        assert np.isclose(triple_sine_sum_closed(args), expected)
        assert np.isclose(triple_sine_sum_direct(args), expected)

    def test_matches_direct(self):
        # note (x + y - 2z)/2 must stay away from multiples of pi
        args = TripleSineArgs(6, 1.1, 0.3, 0.6)
        d = triple_sine_sum_direct(args)
        assert abs(triple_sine_sum_closed(args) - d) < 1e-11 * (1 + abs(d))

    def test_singularity(self):
        # (x - y - 2z)/2 = 0 for x=1.0, y=0.2, z=0.4
        with pytest.raises(SingularityError):
            triple_sine_sum_closed(TripleSineArgs(5, 1.0, 0.2, 0.4))

    def test_random_draws_up_to_degree_fifty(self):
        rng = np.random.default_rng(19)
        checked = 0
        while checked < 2000:
            n = int(rng.integers(0, 51))
            x, y, z = rng.uniform(-3.0, 3.0, 3)
            dens = (
                math.sin((x - y - 2 * z) / 2), math.sin((x - y + 2 * z) / 2),
                math.sin((x + y - 2 * z) / 2), math.sin((x + y + 2 * z) / 2),
            )
            if min(abs(d) for d in dens) < 1e-3:
                continue
            args = TripleSineArgs(n, x, y, z)
            d = triple_sine_sum_direct(args)
            c = triple_sine_sum_closed(args)
            assert abs(d - c) <= 1e-10 * (1 + abs(d))
            checked += 1
