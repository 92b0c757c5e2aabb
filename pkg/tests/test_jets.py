import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hzeta import Jet, SingularJet, jet_exp, pochhammer_jet, pow_negs
from hzeta.errors import DomainError

from conftest import assert_close, naive_pow


class TestConstruction:
    def test_variable_at_zero(self):
        assert Jet.variable(0.0, 1).coeffs == (0j, 1 + 0j)

    def test_variable_order3(self):
        assert Jet.variable(1.0, 3).coeffs == (1 + 0j, 1 + 0j, 0j, 0j)

    def test_variable_order0_complex(self):
        assert Jet.variable(2 + 3j, 0).coeffs == (2 + 3j,)

    def test_length_matches_order(self):
        j = Jet.variable(0.5, 4)
        assert j.order == 4 and len(j.coeffs) == 5

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            Jet(())

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            Jet.constant(1.0, -1)


class TestArithmetic:
    def test_one_times_one(self):
        one = Jet.constant(1.0, 1)
        assert (one * one).coeffs == (1 + 0j, 0j)

    def test_monomial_product(self):
        s = Jet.variable(0.0, 2)
        assert (s * s).coeffs == (0j, 0j, 1 + 0j)

    def test_exp_product_is_convolution(self):
        # exp(s) * exp(-s) at 0: convolve the coefficient lists by hand
        f = Jet(tuple(1.0 / math.factorial(j) for j in range(5)))
        g = Jet(tuple((-1.0) ** j / math.factorial(j) for j in range(5)))
        conv = [
            sum(f.coeffs[i] * g.coeffs[n - i] for i in range(n + 1)) for n in range(5)
        ]
        prod = f * g
        assert prod.coeffs == tuple(conv)
        for c, want in zip(prod.coeffs, (1, 0, 0, 0, 0)):
            assert abs(c - want) < 1e-15

    def test_order_mismatch_raises(self):
        with pytest.raises(ValueError, match="order mismatch"):
            Jet.variable(0, 1) + Jet.variable(0, 2)
        with pytest.raises(ValueError, match="order mismatch"):
            Jet.variable(0, 1) * Jet.variable(0, 2)

    def test_scalar_mixing(self):
        s = Jet.variable(2.0, 2)
        assert (s - 1).coeffs == (1 + 0j, 1 + 0j, 0j)
        assert (3 * s).coeffs == (6 + 0j, 3 + 0j, 0j)

    def test_order0_is_plain_complex(self):
        a = Jet.constant(1.3 - 0.4j, 0)
        b = Jet.constant(-2.1 + 0.9j, 0)
        assert (a * b).coeffs[0] == (1.3 - 0.4j) * (-2.1 + 0.9j)
        assert (a + b).coeffs[0] == (1.3 - 0.4j) + (-2.1 + 0.9j)
        assert a.reciprocal().coeffs[0] == 1.0 / (1.3 - 0.4j)


class TestReciprocal:
    def test_identity(self):
        assert Jet((1, 0, 0)).reciprocal().coeffs == (1 + 0j, 0j, 0j)

    def test_constant(self):
        assert Jet((2, 0)).reciprocal().coeffs == (0.5 + 0j, 0j)

    def test_geometric(self):
        # 1/(1+s) = 1 - s + s**2
        rec = Jet((1, 1, 0)).reciprocal()
        assert rec.coeffs == (1 + 0j, -1 + 0j, 1 + 0j)

    def test_roundtrip(self):
        a = Jet((1.5 - 0.5j, 0.3, -0.2 + 1j, 0.7))
        prod = a * a.reciprocal()
        assert abs(prod.coeffs[0] - 1) < 1e-15
        for c in prod.coeffs[1:]:
            assert abs(c) < 1e-14

    def test_singular(self):
        with pytest.raises(SingularJet):
            Jet((0, 1)).reciprocal()


class TestPowNegs:
    def test_base_one_is_constant(self):
        jet = pow_negs(1.0, Jet.variable(0.7 + 2j, 3))
        assert jet.coeffs[0] == 1
        for c in jet.coeffs[1:]:
            assert abs(c) < 1e-16

    def test_base_e(self):
        jet = pow_negs(math.e, Jet.variable(0.0, 2))
        for c, want in zip(jet.coeffs, (1.0, -1.0, 0.5)):
            assert abs(c - want) < 1e-14

    def test_base_two_at_one(self):
        jet = pow_negs(2.0, Jet.variable(1.0, 1))
        assert abs(jet.coeffs[0] - 0.5) < 1e-16
        assert abs(jet.coeffs[1] - (-math.log(2) / 2)) < 1e-15
        fd = (naive_pow(2, 1 + 1e-4) - naive_pow(2, 1 - 1e-4)) / 2e-4
        assert_close(jet.coeffs[1], fd, 1e-6, label="fd check")

    def test_zero_base_rejected(self):
        with pytest.raises(DomainError):
            pow_negs(0.0, Jet.variable(2.0, 1))

    @pytest.mark.parametrize("base", [2.0, 5.0, 0.37, 1.6 - 0.8j, -2.5 + 0.1j])
    @pytest.mark.parametrize("s0", [0.5, -1.2 + 3j, 2.0 - 1.0j])
    def test_against_fd_of_closed_form(self, base, s0):
        # derivative j checked as a first difference of the analytic
        # derivative of order j-1, which keeps the stencil well conditioned
        jet = pow_negs(base, Jet.variable(s0, 3))
        h = 1e-4
        log_b = cmath.log(base)
        for j in range(1, 4):
            def g(s, j=j):
                return (-log_b) ** (j - 1) * naive_pow(base, s)

            fd = (g(s0 + h) - g(s0 - h)) / (2 * h)
            raw = jet.derivative(j)
            assert_close(raw, fd, 1e-6, label=f"base={base} j={j}")

    def test_matches_cmath_exp_route(self):
        jet = pow_negs(7, Jet.variable(-3.0 + 9.0j, 0))
        assert_close(jet.coeffs[0], naive_pow(7, -3 + 9j), 1e-13)


class TestHelpers:
    def test_jet_exp_matches_series(self):
        a = Jet((0.3 - 0.2j, 1.1, -0.4, 0.25))
        e = jet_exp(a)
        s = Jet.variable(0.0, 3)
        composed = Jet.constant(1.0, 3)
        term = Jet.constant(1.0, 3)
        shifted = Jet((0j,) + a.coeffs[1:])
        for n in range(1, 8):
            term = term * shifted * (1.0 / n)
            composed = composed + term
        composed = cmath.exp(a.coeffs[0]) * composed
        for x, y in zip(e.coeffs, composed.coeffs):
            assert abs(x - y) < 1e-14

    def test_pochhammer(self):
        s = Jet.variable(2.0, 1)
        p = pochhammer_jet(s, 3)  # s(s+1)(s+2) = 24 at 2, derivative 26
        assert abs(p.coeffs[0] - 24) < 1e-13
        assert abs(p.derivative(1) - 26) < 1e-12
        assert pochhammer_jet(s, 0).coeffs == (1 + 0j, 0j)

    def test_derivative_scaling(self):
        jet = Jet((1.0, 2.0, 3.0))
        assert jet.derivative(2) == 6.0


coeff = st.builds(complex, st.floats(-2, 2), st.floats(-2, 2))


def jets(order):
    return st.lists(coeff, min_size=order + 1, max_size=order + 1).map(
        lambda c: Jet(tuple(c))
    )


class TestRingAxioms:
    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 4).flatmap(lambda n: st.tuples(jets(n), jets(n), jets(n))))
    def test_mul_associative(self, triple):
        a, b, c = triple
        left = (a * b) * c
        right = a * (b * c)
        for x, y in zip(left.coeffs, right.coeffs):
            assert abs(x - y) <= 1e-13 * max(1.0, abs(x), abs(y))

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 4).flatmap(lambda n: st.tuples(jets(n), jets(n), jets(n))))
    def test_distributive(self, triple):
        a, b, c = triple
        left = a * (b + c)
        right = a * b + a * c
        for x, y in zip(left.coeffs, right.coeffs):
            assert abs(x - y) <= 1e-13 * max(1.0, abs(x), abs(y))

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 4).flatmap(lambda n: st.tuples(jets(n), jets(n))))
    def test_mul_commutative(self, pair):
        a, b = pair
        for x, y in zip((a * b).coeffs, (b * a).coeffs):
            assert abs(x - y) <= 1e-13 * max(1.0, abs(x), abs(y))
