import cmath
import math

import pytest


def assert_close(got: complex, want: complex, tol: float, *, relative=True, label=""):
    got = complex(got)
    want = complex(want)
    err = abs(got - want)
    bound = tol * max(1.0, abs(got), abs(want)) if relative else tol
    assert err <= bound, (
        f"{label}: got {got}, want {want}, |diff| = {err:.3e} > {bound:.3e}"
    )


def central_diff(f, x: complex, h: float, order: int = 1) -> complex:
    """Fourth-order central finite-difference stencils for derivatives
    up to order 3."""
    if order == 1:
        return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h)
    if order == 2:
        return (
            -f(x - 2 * h)
            + 16 * f(x - h)
            - 30 * f(x)
            + 16 * f(x + h)
            - f(x + 2 * h)
        ) / (12 * h * h)
    if order == 3:
        return (
            f(x - 3 * h)
            - 8 * f(x - 2 * h)
            + 13 * f(x - h)
            - 13 * f(x + h)
            + 8 * f(x + 2 * h)
            - f(x + 3 * h)
        ) / (8 * h**3)
    raise ValueError("stencils implemented for order 1..3 only")


def naive_pow(base: complex, s: complex) -> complex:
    """Reference base**-s through cmath, independent of the jet code."""
    return cmath.exp(-s * cmath.log(base))


@pytest.fixture(scope="session")
def euler_gamma():
    from hzeta.oracles import euler_mascheroni_oracle

    return euler_mascheroni_oracle()


def grid_alphas():
    return (0.3, 0.5, 1.0, 1.7, 2 + 1j)
