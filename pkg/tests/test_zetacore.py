import cmath
import math

import numpy as np
import pytest

from hzeta import (
    EulerMaclaurinParams,
    NearPole,
    PoleAtOne,
    regularized_tail_jet,
    riemann_zeta_jet,
    stieltjes_constants,
    zeta_tail_jet,
)
from hzeta.oracles import (
    euler_mascheroni_oracle,
    hurwitz_closed_form_oracle,
    stieltjes_gamma1_oracle,
)
from hzeta.zetacore import em_tail_jet

from conftest import assert_close, central_diff


def zeta_direct(sigma: float, start: int = 1, terms: int = 10**6) -> float:
    # direct summation with an integral tail estimate
    n = np.arange(start, terms, dtype=np.float64)
    partial = float(np.sum(n**-sigma))
    return partial + terms ** (1 - sigma) / (sigma - 1) + 0.5 * terms**-sigma


class TestRiemannZeta:
    def test_at_two(self):
        want = zeta_direct(2.0)
        got = riemann_zeta_jet(2.0).value
        assert_close(got, want, 1e-12, label="zeta(2)")
        assert abs(got - math.pi**2 / 6) < 1e-13

    def test_at_zero(self):
        want = hurwitz_closed_form_oracle(0, 1.0)  # -1/2
        assert_close(riemann_zeta_jet(0.0).value, want, 1e-13, relative=False)

    def test_at_minus_one(self):
        want = hurwitz_closed_form_oracle(1, 1.0)  # -1/12
        assert_close(riemann_zeta_jet(-1.0).value, want, 1e-13, relative=False)

    def test_pole_errors(self):
        with pytest.raises(PoleAtOne):
            riemann_zeta_jet(1.0)
        with pytest.raises(NearPole):
            riemann_zeta_jet(1.0 + 1e-9)

    def test_jet_matches_finite_differences(self):
        s0 = 2.0
        jet = riemann_zeta_jet(s0, 3)
        h = 1e-3

        def f(s):
            return riemann_zeta_jet(s).value

        for j in range(1, 4):
            fd = central_diff(f, s0, h, j)
            assert_close(jet.derivative(j), fd, 1e-6, label=f"zeta^({j})(2)")


class TestTail:
    def test_empty_head(self):
        assert_close(zeta_tail_jet(2.0, 1).value, riemann_zeta_jet(2.0).value, 1e-15)

    def test_k2(self):
        assert_close(
            zeta_tail_jet(2.0, 2).value, riemann_zeta_jet(2.0).value - 1.0, 1e-13
        )

    def test_k3_direct_sum(self):
        want = zeta_direct(4.0, start=3)
        assert_close(zeta_tail_jet(4.0, 3).value, want, 1e-12, label="zeta_3(4)")

    @pytest.mark.parametrize("k", [1, 2, 5, 10])
    @pytest.mark.parametrize("s0", [2.0, -0.5, 3.0 + 2.0j, -2.3 + 1.0j])
    def test_tail_identity(self, k, s0):
        head = sum(n ** (-complex(s0)) for n in range(1, k))
        got = zeta_tail_jet(s0, k).value + head
        assert_close(got, riemann_zeta_jet(s0).value, 1e-12, label=f"k={k}")


class TestRegularizedTail:
    def test_value_at_pole(self):
        assert_close(regularized_tail_jet(1.0, 1).value, 1.0, 1e-13)

    def test_first_coefficient_is_gamma(self):
        jet = regularized_tail_jet(1.0, 1, order=1)
        assert_close(jet.coeffs[0], 1.0, 1e-13)
        assert_close(jet.coeffs[1], euler_mascheroni_oracle(), 1e-12)

    def test_at_two(self):
        want = zeta_direct(2.0)
        assert_close(regularized_tail_jet(2.0, 1).value, want, 1e-12)

    @pytest.mark.parametrize("angle", range(8))
    def test_pole_cancellation_on_circle(self, angle):
        w = 1.0 + 0.1 * cmath.exp(1j * math.pi * angle / 4)
        reconstructed = regularized_tail_jet(w, 1).value / (w - 1.0)
        assert_close(
            reconstructed, riemann_zeta_jet(w).value, 1e-10, label=f"w={w}"
        )


class TestEulerMaclaurinRobustness:
    @pytest.mark.parametrize("sigma", [-3, -2, -1, 0, 2, 3, 4])
    @pytest.mark.parametrize("t", [0.0, 1.0, 10.0])
    def test_doubling_cutoff_within_error(self, sigma, t):
        s = complex(sigma, t)
        small, err_small = em_tail_jet(s, 1, 0, EulerMaclaurinParams(cutoff=24))
        big, err_big = em_tail_jet(s, 1, 0, EulerMaclaurinParams(cutoff=48))
        diff = abs(small.value - big.value)
        assert diff <= err_small + err_big, (
            f"s={s}: diff {diff:.3e} vs estimates {err_small:.3e}, {err_big:.3e}"
        )

    def test_params_validation(self):
        with pytest.raises(ValueError):
            EulerMaclaurinParams(cutoff=1)
        with pytest.raises(ValueError):
            EulerMaclaurinParams(bernoulli_depth=0)
        with pytest.raises(ValueError):
            EulerMaclaurinParams(bernoulli_depth=16)


class TestStieltjesConstants:
    def test_gamma0(self):
        table = stieltjes_constants(0)
        assert_close(table.gammas[0], euler_mascheroni_oracle(), 1e-12)
        assert abs(table.gammas[0].imag) < 1e-15

    def test_gamma1(self):
        # the table stores plain Laurent coefficients; the classical
        # tabulated constant is (-1)**r * r! times that, so r=1 flips sign
        table = stieltjes_constants(1)
        classical = -table.gammas[1]
        assert_close(classical, stieltjes_gamma1_oracle(), 1e-12)

    def test_prefix_stability(self):
        full = stieltjes_constants(5)
        assert stieltjes_constants(0).gammas == full.gammas[:1]
        assert stieltjes_constants(1).gammas == full.gammas[:2]

    def test_range_check(self):
        with pytest.raises(ValueError):
            stieltjes_constants(21)
        with pytest.raises(ValueError):
            stieltjes_constants(-1)
