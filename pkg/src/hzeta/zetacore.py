"""Riemann zeta and its k-tails as jets, via Euler-Maclaurin summation.

The continuation formula used everywhere is

    sum_{m >= start} m**-w  =  sum_{start <= m < M} m**-w
                             + M**(1-w) / (w - 1)
                             + M**-w / 2
                             + sum_j  B_{2j}/(2j)! * (w)_{2j-1} * M**(1-2j-w)

with (w)_p the rising product w(w+1)...(w+p-1).  The boundary M is
chosen adaptively: the smallest M whose predicted last correction term
sits below 1e-15 of the leading magnitude start**(-Re w).  Small
boundaries keep the summands small, which is what limits accuracy at
negative Re w, while the prediction keeps the asymptotic truncation
under control at large |Im w|.

The regularized variant multiplies through by (w - 1), turning the pole
term into plain M**(1-w); every summand is then an entire function of w
and the formula is valid at w = 1 itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NEAR_POLE_RADIUS, NearPole, PoleAtOne
from .jets import Jet, pow_negs, require_finite

# Bernoulli numbers B_2 .. B_30, exact rationals fixed at build time.
_BERNOULLI_EVEN = {
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
    18: Fraction(43867, 798),
    20: Fraction(-174611, 330),
    22: Fraction(854513, 138),
    24: Fraction(-236364091, 2730),
    26: Fraction(8553103, 6),
    28: Fraction(-23749461029, 870),
    30: Fraction(8615841276005, 14322),
}

# B_{2j} / (2j)! as binary64, j = 1..15
_EM_FACTOR = {
    j: float(_BERNOULLI_EVEN[2 * j] / math.factorial(2 * j)) for j in range(1, 16)
}

MAX_BERNOULLI_DEPTH = 15
_TRUNCATION_TARGET = 1e-15


@dataclass(frozen=True, slots=True)
class EulerMaclaurinParams:
    """Summation policy: cutoff is a floor on the boundary M (the
    direct-sum length), bernoulli_depth the number of B_{2j} correction
    terms."""

    cutoff: int = 4
    bernoulli_depth: int = 10

    def __post_init__(self):
        if self.cutoff < 2:
            raise ValueError("cutoff must be >= 2")
        if not 1 <= self.bernoulli_depth <= MAX_BERNOULLI_DEPTH:
            raise ValueError(
                f"bernoulli_depth must be in 1..{MAX_BERNOULLI_DEPTH}"
            )


DEFAULT_EM = EulerMaclaurinParams()


@dataclass(frozen=True, slots=True)
class StieltjesTable:
    """Laurent coefficients gamma_0 .. gamma_R of zeta at s = 1,
    in the plain-coefficient convention zeta(s) = 1/(s-1) + sum gamma_r (s-1)**r."""

    gammas: tuple[complex, ...]

    @property
    def order(self) -> int:
        return len(self.gammas) - 1


def _poch_magnitude(w0: complex, depth: int, order: int) -> float:
    # |(w)_{2*depth-1}| with each factor padded by the jet order, so the
    # bound stays valid for derivative coefficients when a factor is
    # near zero (terminating-series case at negative integer w).
    p = 1.0
    for j in range(2 * depth - 1):
        p *= abs(w0 + j) + order
        if p > 1e280:
            return 1e280
    return p


def _boundary_ok(
    pochmag: float, sigma: float, boundary: float, depth: int, absw: float, target: float
) -> bool:
    last = abs(_EM_FACTOR[depth]) * pochmag * boundary ** (1.0 - 2.0 * depth - sigma)
    if last > target:
        return False
    ratio = (
        (absw + 2 * depth - 1)
        * (absw + 2 * depth)
        / (4.0 * math.pi**2 * boundary * boundary)
    )
    return ratio <= 0.9 or last * 100.0 <= target


def choose_boundary(w0: complex, start: int, order: int, p: EulerMaclaurinParams) -> int:
    """Smallest EM boundary M >= max(cutoff, start) meeting the
    truncation target relative to the leading magnitude start**(-Re w)."""
    w0 = complex(w0)
    sigma = w0.real
    absw = abs(w0) + 2.0 * order
    pochmag = _poch_magnitude(w0, p.bernoulli_depth, order)
    scale = max(float(max(start, 1)) ** (-sigma), 1e-290)
    m = max(p.cutoff, start, 4)
    target = _TRUNCATION_TARGET * scale
    while not _boundary_ok(pochmag, sigma, float(m), p.bernoulli_depth, absw, target):
        m += max(1, m // 8)
        if m > 200000:
            break
    return m


def em_tail_jet(
    w0: complex,
    start: int,
    order: int = 0,
    p: EulerMaclaurinParams | None = None,
    regularized: bool = False,
) -> tuple[Jet, float]:
    """Jet of sum_{m >= start} m**-w at w0 (or of (w-1) times it when
    regularized), together with an a-posteriori error estimate.

    The estimate is twice the magnitude of the last Bernoulli correction
    plus a rounding allowance proportional to the largest summand.
    """
    p = p or DEFAULT_EM
    w0 = require_finite(complex(w0), "s")
    if start < 1:
        raise ValueError("start must be >= 1")
    if not regularized:
        if w0 == 1:
            raise PoleAtOne("zeta has a simple pole at s = 1")
        if abs(w0 - 1) < NEAR_POLE_RADIUS:
            raise NearPole(
                "s within 1e-8 of the pole; use the regularized form"
            )

    boundary = choose_boundary(w0, start, order, p)
    w_jet = Jet.variable(w0, order)
    w_minus_1 = w_jet - 1.0

    total = Jet.constant(0.0, order)
    peak = 0.0
    for m in range(start, boundary):
        term = pow_negs(m, w_jet)
        peak = max(peak, term.norm())
        total = total + term
    if regularized:
        total = w_minus_1 * total
        total = total + pow_negs(boundary, w_minus_1)
    else:
        total = total + pow_negs(boundary, w_minus_1) * w_minus_1.reciprocal()
    p_boundary = pow_negs(boundary, w_jet)
    corr_base = (w_minus_1 * p_boundary) if regularized else p_boundary
    peak = max(peak, total.norm())
    total = total + 0.5 * corr_base

    poch = w_jet
    last = 0.0
    for j in range(1, p.bernoulli_depth + 1):
        term = (_EM_FACTOR[j] * float(boundary) ** (1 - 2 * j)) * (poch * corr_base)
        total = total + term
        last = term.norm()
        if last < 1e-30 * total.norm():
            break
        poch = poch * ((w_jet + (2 * j - 1)) * (w_jet + 2 * j))

    err = 2.0 * last + 8.0 * 2.220446049250313e-16 * peak * math.sqrt(
        max(boundary - start, 1)
    )
    return total, err


def riemann_zeta_jet(
    s0: complex, order: int = 0, p: EulerMaclaurinParams | None = None
) -> Jet:
    """Jet of the Riemann zeta function at s0 (s0 != 1)."""
    jet, _ = em_tail_jet(s0, 1, order, p, regularized=False)
    return jet


def zeta_tail_jet(
    s0: complex, k: int, order: int = 0, p: EulerMaclaurinParams | None = None
) -> Jet:
    """Jet of zeta(s) minus its first k-1 Dirichlet terms, i.e. the
    continuation of sum_{m >= k} m**-s.  Summed directly from m = k, which
    preserves relative accuracy when the tail is small."""
    jet, _ = em_tail_jet(s0, k, order, p, regularized=False)
    return jet


def regularized_tail_jet(
    w0: complex, k: int, order: int = 0, p: EulerMaclaurinParams | None = None
) -> Jet:
    """Jet of the entire function (w-1) * sum_{m >= k} m**-w, valid at
    w0 = 1 included."""
    jet, _ = em_tail_jet(w0, k, order, p, regularized=True)
    return jet


_STIELTJES_MAX = 20


@lru_cache(maxsize=8)
def _stieltjes_cached(p: EulerMaclaurinParams) -> tuple[complex, ...]:
    # One fixed-order evaluation per parameter set; slicing it keeps the
    # prefix of lower-R requests bitwise stable.
    jet, _ = em_tail_jet(1.0, 1, _STIELTJES_MAX + 1, p, regularized=True)
    # (w-1)*zeta(w) = 1 + sum_r gamma_r (w-1)**(r+1)
    return tuple(jet.coeffs[r + 1] for r in range(_STIELTJES_MAX + 1))


def stieltjes_constants(
    r_max: int, p: EulerMaclaurinParams | None = None
) -> StieltjesTable:
    """Classical Stieltjes constants gamma_0 .. gamma_R as plain Laurent
    coefficients of zeta at s = 1 (gamma_1 carries the opposite sign of
    the (-1)**r/r! normalized tables)."""
    if not 0 <= r_max <= _STIELTJES_MAX:
        raise ValueError(f"R must be in 0..{_STIELTJES_MAX} for binary64 accuracy")
    return StieltjesTable(_stieltjes_cached(p or DEFAULT_EM)[: r_max + 1])
