"""Derivative identities of zeta(s, alpha), each checkable two ways.

The analytic route rests on d/d alpha zeta(s, alpha) = -s zeta(s+1, alpha)
pushed through r s-derivatives:

    d/d alpha zeta^(r)(s, alpha) = -r zeta^(r-1)(s+1, alpha)
                                   - s zeta^(r)(s+1, alpha)

with the r = 0 case dropping the first term.  At s = 0 the right side is
a 0 * pole product; it is evaluated instead as the r-th derivative of
the entire function -s zeta(s+1, alpha), never as a product of a zero
and an infinity.  The finite-difference route differentiates the s-jet
numerically in alpha and is what verify_identity compares against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import HZetaError
from .hurwitz import (
    DEFAULT_PARAMS,
    SeriesParams,
    hurwitz_alpha_derivative,
    hurwitz_jet,
    hurwitz_regularized_jet,
)
from .jets import require_finite

_REGULARIZED_RADIUS = 1e-8

IDENTITY_NAMES = (
    "INTERCHANGE",
    "RECURRENCE",
    "AT_ZERO",
    "AT_ONE",
    "GAMMA_DERIV",
    "MIXED_PARTIALS",
)


@dataclass(frozen=True, slots=True)
class IdentityReport:
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    method_notes: str


def _report(lhs: complex, rhs: complex, notes: str) -> IdentityReport:
    abs_res = abs(lhs - rhs)
    rel_res = abs_res / max(1.0, abs(lhs), abs(rhs))
    return IdentityReport(lhs, rhs, abs_res, rel_res, notes)


def dalpha_of_sderiv(
    s0: complex, alpha: complex, r: int = 0, p: SeriesParams | None = None
) -> complex:
    """d/d alpha of the r-th s-derivative of zeta at (s0, alpha).

    Generic s0: -r zeta^(r-1)(s0+1, alpha) - s0 zeta^(r)(s0+1, alpha),
    both derivatives from one jet at s0 + 1.  s0 = 1 is covered by the
    same expression (the defined value there).  s0 at or next to 0 takes
    the regularized route through the entire function -s zeta(s+1, alpha).
    """
    p = p or DEFAULT_PARAMS
    s0 = require_finite(complex(s0), "s")
    if r < 0:
        raise ValueError("derivative order must be >= 0")
    if abs(s0) < _REGULARIZED_RADIUS:
        # r-th raw derivative of -s*zeta(s+1,alpha) at s0, via the jet of
        # (w-1)*zeta(w,alpha) at w0 = s0 + 1
        g = hurwitz_regularized_jet(s0 + 1, alpha, r, p)
        return -g.value.derivative(r)
    jet = hurwitz_jet(s0 + 1, alpha, r, p).value
    value = -s0 * jet.derivative(r)
    if r > 0:
        value -= r * jet.derivative(r - 1)
    return value


def dalpha_sderiv_at_zero(
    alpha: complex, r: int = 0, p: SeriesParams | None = None
) -> complex:
    """Closed form of d/d alpha zeta^(r)(0, alpha): -r! gamma_{r-1}(alpha),
    with gamma_{-1}(alpha) taken as the constant 1."""
    if r < 0:
        raise ValueError("derivative order must be >= 0")
    if r == 0:
        return complex(-1.0)
    from .stieltjes import generalized_stieltjes

    table = generalized_stieltjes(alpha, r - 1, p)
    return -math.factorial(r) * table.gammas[r - 1]


def _sderiv(s0: complex, alpha: complex, r: int, p: SeriesParams) -> complex:
    return hurwitz_jet(s0, alpha, r, p).value.derivative(r)


def _fd_alpha(f, alpha: complex, h: float) -> complex:
    return (f(alpha + h) - f(alpha - h)) / (2.0 * h)


def _fd2_alpha(f, alpha: complex, h: float) -> complex:
    return (f(alpha + h) - 2.0 * f(alpha) + f(alpha - h)) / (h * h)


def verify_identity(
    name: str,
    s0: complex,
    alpha: complex,
    r: int,
    p: SeriesParams | None = None,
    h: float = 1e-4,
) -> IdentityReport:
    """Check one identity at one point: lhs from central finite
    differences in alpha, rhs from the closed form.  The name must be one
    of IDENTITY_NAMES."""
    p = p or DEFAULT_PARAMS
    if h <= 0:
        raise ValueError("finite-difference step must be positive")
    key = name.upper()
    if key not in IDENTITY_NAMES:
        raise ValueError(
            f"unknown identity {name!r}; expected one of {', '.join(IDENTITY_NAMES)}"
        )

    try:
        if key == "RECURRENCE":
            lhs = _fd_alpha(lambda a: _sderiv(s0, a, r, p), alpha, h)
            rhs = dalpha_of_sderiv(s0, alpha, r, p)
            notes = f"fd(h={h:g}) of sderiv r={r} at s={s0} vs shifted closed form"
        elif key == "INTERCHANGE":
            lhs = _fd_alpha(lambda a: _sderiv(s0, a, r, p), alpha, h)
            # d^r/ds^r of -s*zeta(s+1,alpha), via the entire product jet
            g = hurwitz_regularized_jet(complex(s0) + 1, alpha, r, p)
            rhs = -g.value.derivative(r)
            notes = f"fd(h={h:g}) of sderiv r={r} vs jet of -s*zeta(s+1,a)"
        elif key == "MIXED_PARTIALS":
            lhs = _fd_alpha(lambda a: _sderiv(s0, a, r, p), alpha, h)
            rhs = hurwitz_alpha_derivative(s0, alpha, 1, r, p).value.derivative(r)
            notes = f"fd(h={h:g}) in alpha of d^{r}/ds^{r} vs analytic mixed partial"
        elif key == "AT_ZERO":
            lhs = _fd_alpha(lambda a: _sderiv(0.0, a, r, p), alpha, h)
            rhs = dalpha_sderiv_at_zero(alpha, r, p)
            notes = f"fd(h={h:g}) of sderiv r={r} at s=0 vs -r! gamma_(r-1)"
        elif key == "AT_ONE":
            from .stieltjes import generalized_stieltjes

            lhs = math.factorial(r) * _fd_alpha(
                lambda a: generalized_stieltjes(a, r, p).gammas[r], alpha, h
            )
            rhs = dalpha_of_sderiv(1.0, alpha, r, p)
            notes = f"r! * fd(h={h:g}) of gamma_{r}(alpha) vs defined value at s=1"
        else:  # GAMMA_DERIV
            from .stieltjes import dgamma_dalpha, generalized_stieltjes

            lhs = _fd_alpha(
                lambda a: generalized_stieltjes(a, r, p).gammas[r], alpha, h
            )
            rhs = dgamma_dalpha(alpha, r, p)
            notes = f"fd(h={h:g}) of gamma_{r}(alpha) vs closed form at s=2"
    except HZetaError as exc:
        raise type(exc)(
            f"{key} at s={s0}, alpha={alpha}, r={r}: {exc}"
        ) from exc
    return _report(lhs, rhs, notes)
