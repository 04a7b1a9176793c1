import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracalc import (
    DomainError,
    FracOrder,
    InsufficientData,
    Polynomial,
    SampledSeries,
    caputo_integer,
    caputo_l1,
    caputo_l1_extended,
    caputo_poly,
    caputo_series,
    sample,
)
from oracle import ref_caputo_poly, ref_caputo_quad, rel_err

coeff_lists = st.lists(st.floats(-10.0, 10.0), min_size=0, max_size=6)


def monomial(k):
    return Polynomial((0.0,) * k + (1.0,))


class TestFracOrder:
    @pytest.mark.parametrize(
        "alpha,n", [(0.0, 0), (1.0, 1), (2.0, 2), (0.5, 1), (1.3, 2), (2.7, 3)]
    )
    def test_inner_derivative_count(self, alpha, n):
        assert FracOrder(alpha).n == n

    @pytest.mark.parametrize("alpha", [-0.1, float("nan"), float("inf")])
    def test_invalid_orders_rejected(self, alpha):
        with pytest.raises(DomainError):
            FracOrder(alpha)


class TestPolynomial:
    def test_zero_polynomial(self):
        p = Polynomial(())
        assert p.is_zero and p.degree == -1 and p(3.0) == 0.0

    def test_degree_ignores_trailing_zeros(self):
        assert Polynomial((1.0, 2.0, 0.0)).degree == 1

    def test_horner_evaluation(self):
        p = Polynomial((1.0, -2.0, 3.0))
        assert p(2.0) == 1.0 - 4.0 + 12.0

    def test_vectorized_evaluation(self):
        p = Polynomial((0.0, 1.0))
        np.testing.assert_array_equal(p(np.array([0.0, 0.5, 1.0])), [0.0, 0.5, 1.0])

    def test_derivative(self):
        assert Polynomial((1.0, 2.0, 3.0)).derivative().coeffs == (2.0, 6.0)

    def test_algebra(self):
        p = Polynomial((1.0, 2.0))
        q = Polynomial((0.0, 0.0, 1.0))
        assert (p + q).coeffs == (1.0, 2.0, 1.0)
        assert (2.0 * p).coeffs == (2.0, 4.0)


class TestSampledSeries:
    def test_basic_properties(self):
        s = SampledSeries(0.5, [0.0, 1.0, 2.0])
        assert s.n_steps == 2 and s.t_end == 1.0
        np.testing.assert_allclose(s.times(), [0.0, 0.5, 1.0])

    def test_values_are_frozen(self):
        s = SampledSeries(1.0, [0.0, 1.0, 2.0])
        with pytest.raises(ValueError):
            s.values[0] = 9.0

    @pytest.mark.parametrize("h", [0.0, -1.0, float("nan")])
    def test_bad_step_rejected(self, h):
        with pytest.raises(DomainError):
            SampledSeries(h, [0.0, 1.0, 2.0])

    def test_too_short_rejected(self):
        with pytest.raises(InsufficientData):
            SampledSeries(1.0, [0.0, 1.0])

    def test_non_finite_values_rejected(self):
        with pytest.raises(DomainError):
            SampledSeries(1.0, [0.0, float("nan"), 2.0])

    def test_nonzero_start_rejected(self):
        with pytest.raises(DomainError):
            SampledSeries(1.0, [0.0, 1.0, 2.0], t0=1.0)

    def test_truncated_on_grid(self):
        s = SampledSeries(0.25, np.arange(9.0))
        t = s.truncated(1.0)
        assert t.n_steps == 4 and t.t_end == 1.0

    def test_truncated_off_grid_rejected(self):
        s = SampledSeries(0.25, np.arange(9.0))
        with pytest.raises(DomainError):
            s.truncated(1.1)

    def test_truncated_beyond_range_rejected(self):
        s = SampledSeries(0.25, np.arange(9.0))
        with pytest.raises(DomainError):
            s.truncated(9.0)


class TestCaputoPoly:
    def test_constant_annihilated(self):
        assert caputo_poly(Polynomial((5.0,)), 0.5, 2.0) == 0.0

    def test_integer_order_is_classical(self):
        # d/dt t^2 at T=3
        assert caputo_poly(monomial(2), 1.0, 3.0) == 6.0

    def test_square_half_order(self):
        # Gamma(3)/Gamma(2.5) at T=1, frozen from the mpmath oracle.
        got = caputo_poly(monomial(2), 0.5, 1.0)
        assert rel_err(got, 1.5045055561273501) <= 1e-12
        assert rel_err(got, ref_caputo_poly((0, 0, 1), 0.5, 1.0)) <= 1e-12

    def test_low_degree_terms_vanish(self):
        # alpha in (1, 2): both constant and linear parts must drop out.
        p = Polynomial((4.0, -7.0, 0.0, 1.0))
        want = ref_caputo_poly((0.0, 0.0, 0.0, 1.0), 1.5, 2.0)
        assert rel_err(caputo_poly(p, 1.5, 2.0), want) <= 1e-11

    def test_monomials_against_oracle(self):
        rng = np.random.default_rng(23)
        for _ in range(60):
            k = int(rng.integers(1, 7))
            a = float(rng.uniform(0.01, k))
            if abs(a - round(a)) < 1e-6:
                continue
            t_end = float(rng.uniform(0.1, 10.0))
            got = caputo_poly(monomial(k), a, t_end)
            assert rel_err(got, ref_caputo_poly(monomial(k).coeffs, a, t_end)) <= 1e-11

    def test_order_zero_is_evaluation(self):
        p = Polynomial((1.0, 2.0, 3.0))
        assert caputo_poly(p, 0.0, 2.0) == p(2.0)

    @pytest.mark.parametrize("T", [0.0, -1.0])
    def test_non_positive_time_rejected(self, T):
        with pytest.raises(DomainError):
            caputo_poly(monomial(1), 0.5, T)

    @given(coeff_lists, coeff_lists, st.floats(-5.0, 5.0), st.floats(-5.0, 5.0),
           st.floats(0.01, 2.99), st.floats(0.1, 10.0))
    @settings(deadline=None, max_examples=200)
    def test_linearity(self, cp, cq, a, b, alpha, T):
        p, q = Polynomial(tuple(cp)), Polynomial(tuple(cq))
        lhs = caputo_poly(a * p + b * q, alpha, T)
        rhs = a * caputo_poly(p, alpha, T) + b * caputo_poly(q, alpha, T)
        # Scale by the cancellation-free magnitude of both operands.
        scale = abs(a) * caputo_poly(Polynomial(tuple(abs(c) for c in cp)), alpha, T) + \
            abs(b) * caputo_poly(Polynomial(tuple(abs(c) for c in cq)), alpha, T)
        assert abs(lhs - rhs) <= 1e-12 * scale + 1e-15

    @given(st.floats(-100.0, 100.0), st.floats(0.01, 1.99), st.floats(0.1, 10.0))
    @settings(deadline=None)
    def test_constants_annihilated_for_positive_orders(self, c, alpha, T):
        assert caputo_poly(Polynomial((c,)), alpha, T) == 0.0

    @given(coeff_lists, st.floats(0.1, 10.0))
    @settings(deadline=None)
    def test_first_order_coincides_with_derivative(self, cs, T):
        p = Polynomial(tuple(cs))
        assert caputo_poly(p, 1.0, T) == p.derivative()(T)


class TestCaputoL1:
    def test_constant_series_exactly_zero(self):
        s = sample(Polynomial((7.0,)), 1.0, 64)
        assert caputo_l1(s, 0.5) == 0.0

    def test_linear_is_exact(self):
        # L1 integrates its own interpolant exactly, and that interpolant
        # reproduces linear functions: only roundoff remains.
        got = caputo_l1(sample(Polynomial((0.0, 1.0)), 1.0, 1024), 0.5)
        assert rel_err(got, 1.1283791670955126) <= 1e-9  # 1/Gamma(1.5)

    def test_square_against_analytic_engine(self):
        got = caputo_l1(sample(monomial(2), 1.0, 4096), 0.5)
        want = caputo_poly(monomial(2), 0.5, 1.0)
        assert rel_err(got, want) <= 5e-3

    def test_power_grid_against_analytic_engine(self):
        for beta in (1, 2, 3, 4):
            s = sample(monomial(beta), 1.0, 4096)
            for a in (0.25, 0.5, 0.75):
                want = caputo_poly(monomial(beta), a, 1.0)
                got = caputo_l1(s, a)
                if want == 0.0:
                    assert abs(got) <= 1e-6
                else:
                    assert rel_err(got, want) <= 5e-3

    def test_non_polynomial_against_quadrature_oracle(self):
        import mpmath as mp

        t = np.arange(4097) / 4096
        got = caputo_l1(SampledSeries(1 / 4096, np.exp(t)), 0.5)
        want = ref_caputo_quad(mp.exp, 0.5, 1.0)
        assert rel_err(got, want) <= 1e-4

    def test_order_zero_returns_final_value(self):
        s = sample(monomial(2), 1.0, 16)
        assert caputo_l1(s, 0.0) == s.values[-1]

    def test_order_one_matches_integer_engine(self):
        s = sample(monomial(2), 1.0, 100)
        assert caputo_l1(s, 1.0) == caputo_integer(s, 1)

    def test_convergence_order(self):
        p = monomial(3)
        exact = caputo_poly(p, 0.5, 1.0)
        e512 = abs(caputo_l1(sample(p, 1.0, 512), 0.5) - exact)
        e1024 = abs(caputo_l1(sample(p, 1.0, 1024), 0.5) - exact)
        assert e512 / e1024 >= 2**1.3

    @pytest.mark.parametrize("alpha", [1.5, 2.0, -0.5])
    def test_order_outside_unit_interval_rejected(self, alpha):
        s = sample(monomial(1), 1.0, 8)
        with pytest.raises(DomainError):
            caputo_l1(s, alpha)

    @given(st.floats(-5.0, 5.0), st.floats(-5.0, 5.0), st.floats(0.05, 0.95))
    @settings(deadline=None, max_examples=60)
    def test_linearity_on_summed_series(self, a, b, alpha):
        s1 = sample(Polynomial((1.0, -2.0, 0.5)), 1.0, 128)
        s2 = sample(Polynomial((0.0, 3.0, 0.0, -1.0)), 1.0, 128)
        summed = SampledSeries(s1.h, a * s1.values + b * s2.values)
        lhs = caputo_l1(summed, alpha)
        d1, d2 = caputo_l1(s1, alpha), caputo_l1(s2, alpha)
        rhs = a * d1 + b * d2
        scale = abs(a) * abs(d1) + abs(b) * abs(d2)
        assert abs(lhs - rhs) <= 1e-12 * scale + 1e-12


class TestCaputoL1Extended:
    def test_constant_annihilated(self):
        s = sample(Polynomial((7.0,)), 1.0, 64)
        assert abs(caputo_l1_extended(s, 1.5)) <= 1e-10

    def test_linear_annihilated(self):
        got = caputo_l1_extended(sample(Polynomial((0.0, 1.0)), 1.0, 4096), 1.5)
        assert abs(got) <= 1e-6

    def test_square_against_analytic_engine(self):
        got = caputo_l1_extended(sample(monomial(2), 1.0, 4096), 1.5)
        want = caputo_poly(monomial(2), 1.5, 1.0)  # Gamma(3)/Gamma(1.5)
        assert rel_err(got, want) <= 1e-2
        assert rel_err(got, 2.2567583341910251) <= 1e-2

    def test_cubic_against_oracle(self):
        got = caputo_l1_extended(sample(monomial(3), 1.0, 4096), 1.25)
        assert rel_err(got, ref_caputo_poly(monomial(3).coeffs, 1.25, 1.0)) <= 1e-2

    @pytest.mark.parametrize("alpha", [1.0, 2.0, 0.5, 2.5])
    def test_order_outside_open_interval_rejected(self, alpha):
        s = sample(monomial(2), 1.0, 16)
        with pytest.raises(DomainError):
            caputo_l1_extended(s, alpha)

    def test_short_series_rejected(self):
        s = SampledSeries(1.0, [0.0, 1.0, 4.0, 9.0])  # N = 3
        with pytest.raises(InsufficientData):
            caputo_l1_extended(s, 1.5)


class TestCaputoInteger:
    def test_order_zero(self):
        assert caputo_integer(sample(monomial(2), 1.0, 100), 0) == 1.0

    def test_first_derivative(self):
        got = caputo_integer(sample(monomial(2), 1.0, 1000), 1)
        assert abs(got - 2.0) <= 1e-4

    def test_second_derivative(self):
        got = caputo_integer(sample(monomial(2), 1.0, 1000), 2)
        assert abs(got - 2.0) <= 1e-2

    def test_order_above_two_rejected(self):
        with pytest.raises(DomainError):
            caputo_integer(sample(monomial(2), 1.0, 100), 3)

    def test_short_series_rejected(self):
        s = SampledSeries(1.0, [0.0, 1.0, 4.0])
        with pytest.raises(InsufficientData):
            caputo_integer(s, 2)


class TestOrderZeroConvention:
    """The alpha -> 0+ limit is f(T) - f(0), but order 0 is defined as f(T).

    A jump therefore appears at alpha = 0 whenever f(0) != 0.  These tests
    pin the convention and keep the discontinuity visible instead of
    smoothing it over.
    """

    def test_polynomial_jump_at_zero_order(self):
        p = Polynomial((70.0, -0.2, 0.001))  # f(0) = f(200) = 70
        at_zero = caputo_poly(p, 0.0, 200.0)
        near_zero = caputo_poly(p, 1e-6, 200.0)
        assert at_zero == p(200.0) == 70.0
        assert abs(near_zero - (p(200.0) - p(0.0))) <= 1e-3  # limit is 0 here
        assert abs(at_zero - near_zero) > 60.0

    def test_sampled_jump_at_zero_order(self):
        p = Polynomial((70.0, -0.2, 0.001))
        s = sample(p, 200.0, 2000)
        at_zero = caputo_l1(s, 0.0)
        near_zero = caputo_l1(s, 1e-6)
        assert at_zero == s.values[-1]
        assert abs(near_zero - (s.values[-1] - s.values[0])) <= 1e-3
        assert abs(at_zero - near_zero) > 60.0


class TestCaputoSeriesDispatch:
    def test_routes_by_order(self):
        s = sample(monomial(2), 1.0, 256)
        assert caputo_series(s, 0.3) == caputo_l1(s, 0.3)
        assert caputo_series(s, 1.5) == caputo_l1_extended(s, 1.5)
        assert caputo_series(s, 1.0) == caputo_l1(s, 1.0)
        assert caputo_series(s, 0.0) == s.values[-1]

    @pytest.mark.parametrize("alpha", [2.0, 2.5, 10.0])
    def test_cap_at_two(self, alpha):
        with pytest.raises(DomainError):
            caputo_series(sample(monomial(2), 1.0, 256), alpha)
