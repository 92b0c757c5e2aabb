"""Complex truncated-Taylor (jet) arithmetic in one formal variable.

A jet of order R stores the Taylor coefficients [f, f', f''/2!, ...,
f^(R)/R!] of an analytic function at a base point.  Sums are
coefficientwise, products are truncated Cauchy products, so pushing jets
through a formula yields the derivatives of the formula without symbolic
work.  Coefficients are Taylor-normalized (divided by j!); multiply by
j! to recover raw derivatives.

All values are immutable and every operation is a pure function, so jets
may be shared freely between threads.
"""

from __future__ import annotations

import cmath
import decimal
import math
from dataclasses import dataclass

from .errors import DomainError, SingularJet

_SPLIT = 134217729.0  # 2**27 + 1, Dekker splitting constant


def _two_prod(a: float, b: float) -> tuple[float, float]:
    """Product of two floats as an exact (head, tail) pair."""
    p = a * b
    ah = _SPLIT * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLIT * b
    bh = bh - (bh - b)
    bl = b - bh
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


_LOG_DD: dict[int, tuple[float, float]] = {}


def _log_dd(m: int) -> tuple[float, float]:
    """log(m) for integer m >= 1 as a (head, tail) double pair.

    Memoized; entries are written once and never mutated, which is safe
    under concurrent readers.
    """
    v = _LOG_DD.get(m)
    if v is None:
        with decimal.localcontext() as ctx:
            ctx.prec = 40
            d = decimal.Decimal(m).ln()
        hi = float(d)
        lo = float(d - decimal.Decimal(hi))
        v = _LOG_DD[m] = (hi, lo)
    return v


def require_finite(z: complex, what: str = "value") -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite {what}: {z!r}")
    return z


@dataclass(frozen=True, slots=True)
class Jet:
    """Truncated Taylor expansion with complex coefficients.

    coeffs[j] holds f^(j)(s0) / j!.  The order is len(coeffs) - 1.
    Arithmetic between two jets requires equal order.
    """

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("a jet needs at least its order-0 coefficient")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @classmethod
    def constant(cls, value: complex, order: int) -> "Jet":
        if order < 0:
            raise ValueError("order must be >= 0")
        return cls((complex(value),) + (0j,) * order)

    @classmethod
    def variable(cls, value: complex, order: int) -> "Jet":
        """Jet of the identity function at the given base point."""
        if order < 0:
            raise ValueError("order must be >= 0")
        c = [complex(value)] + [0j] * order
        if order >= 1:
            c[1] = 1 + 0j
        return cls(tuple(c))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def value(self) -> complex:
        return self.coeffs[0]

    def derivative(self, j: int) -> complex:
        """Raw j-th derivative at the base point, coeffs[j] * j!."""
        return self.coeffs[j] * math.factorial(j)

    def norm(self) -> float:
        """Sup norm over coefficients."""
        return max(abs(c) for c in self.coeffs)

    def is_finite(self) -> bool:
        return all(math.isfinite(c.real) and math.isfinite(c.imag) for c in self.coeffs)

    def _check_order(self, other: "Jet") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError(
                f"jet order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if isinstance(other, Jet):
            self._check_order(other)
            return Jet(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        z = complex(other)
        return Jet((self.coeffs[0] + z,) + self.coeffs[1:])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet):
            self._check_order(other)
            return Jet(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))
        return self + (-complex(other))

    def __rsub__(self, other):
        return (-self) + complex(other)

    def __neg__(self):
        return Jet(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Jet):
            self._check_order(other)
            a, b = self.coeffs, other.coeffs
            n = len(a)
            return Jet(
                tuple(
                    sum(a[j] * b[i - j] for j in range(i + 1)) for i in range(n)
                )
            )
        z = complex(other)
        return Jet(tuple(z * c for c in self.coeffs))

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet":
        """Truncated Taylor reciprocal; requires a nonzero leading coefficient."""
        a = self.coeffs
        if a[0] == 0:
            raise SingularJet("reciprocal of a jet with zero leading coefficient")
        n = len(a)
        r = [1.0 / a[0]] + [0j] * (n - 1)
        for k in range(1, n):
            r[k] = -sum(a[j] * r[k - j] for j in range(1, k + 1)) / a[0]
        return Jet(tuple(r))

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return self * (1.0 / complex(other))


def jet_exp(a: Jet) -> Jet:
    """exp of a jet via the standard convolution recurrence."""
    c = a.coeffs
    n = len(c)
    e = [cmath.exp(c[0])] + [0j] * (n - 1)
    for k in range(1, n):
        e[k] = sum(j * c[j] * e[k - j] for j in range(1, k + 1)) / k
    return Jet(tuple(e))


def pow_negs(base: complex, s_jet: Jet) -> Jet:
    """Jet of w -> base**(-w), the principal branch, along the given s-jet.

    The order-0 coefficient is assembled from a magnitude/phase split
    rather than exp(-s*log base): the magnitude |base|**(-sigma) comes
    from a single real pow, and for integer bases the phase t*log(base)
    is formed with an extended-precision log so that no |s*log base|
    amplification of rounding enters.  This keeps the large summands of
    the continuation formulas at a few ulps even at strongly negative
    Re s.
    """
    b = complex(base)
    if b == 0:
        raise DomainError("zero base in power: alpha lies in the excluded set")
    s0 = s_jet.coeffs[0]
    sigma, t = s0.real, s0.imag

    try:
        if b.imag == 0.0 and b.real > 0.0 and b.real.is_integer() and b.real <= 9e15:
            m = int(b.real)
            hi, lo = _log_dd(m)
            mag = float(m) ** (-sigma)
            p, err = _two_prod(t, hi)
            # reduce the dominant product mod 2*pi before the small parts join
            phase = math.remainder(p, 2.0 * math.pi) + (err + t * lo)
            e0 = mag * complex(math.cos(phase), -math.sin(phase))
            log_b = complex(hi + lo, 0.0)
        else:
            r = abs(b)
            theta = math.atan2(b.imag, b.real)
            log_r = math.log(r)
            mag = r ** (-sigma) * math.exp(t * theta)
            phase = sigma * theta + t * log_r
            e0 = mag * complex(math.cos(phase), -math.sin(phase))
            log_b = complex(log_r, theta)
    except OverflowError:
        raise DomainError(
            f"power with base {base!r} overflows binary64 at s={s0!r}"
        ) from None

    n = len(s_jet.coeffs)
    if n == 1:
        return Jet((e0,))
    a = [-log_b * c for c in s_jet.coeffs]
    e = [e0] + [0j] * (n - 1)
    for k in range(1, n):
        e[k] = sum(j * a[j] * e[k - j] for j in range(1, k + 1)) / k
    return Jet(tuple(e))


def pochhammer_jet(s_jet: Jet, n: int) -> Jet:
    """Jet of the rising product s(s+1)...(s+n-1); n = 0 gives 1."""
    out = Jet.constant(1.0, s_jet.order)
    for j in range(n):
        out = out * (s_jet + j)
    return out


class KahanJetSum:
    """Compensated coefficientwise accumulator for jets of a fixed order."""

    __slots__ = ("_sum", "_comp", "_n")

    def __init__(self, order: int):
        self._n = order + 1
        self._sum = [0j] * self._n
        self._comp = [0j] * self._n

    def add(self, jet: Jet) -> None:
        s, c = self._sum, self._comp
        for i, x in enumerate(jet.coeffs):
            y = x - c[i]
            t = s[i] + y
            c[i] = (t - s[i]) - y
            s[i] = t

    def jet(self) -> Jet:
        return Jet(tuple(self._sum))

    def norm(self) -> float:
        return max(abs(c) for c in self._sum)
