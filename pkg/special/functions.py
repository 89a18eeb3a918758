"""
Order-zero spherical Bessel and Hankel functions of complex argument.

Only order zero enters the radially symmetric modes, so every function here is
a closed form in sin, cos and exp. Near the origin j0 and j0' are evaluated by
their Maclaurin series to avoid the cancellation in sin(z)/z.
"""
import cmath
import functools
import math

import numpy as np

from .exceptions import DomainError, NonFiniteError

# Below this modulus the series branch is used
SERIES_SWITCH = 1e-2

# Enough terms for 1e-15 absolute error on |z| <= 1
SERIES_TERMS = 12

_J0_SERIES = tuple((-1) ** k / math.factorial(2 * k + 1) for k in range(SERIES_TERMS))


def ensure_finite(value, label):
    """Return ``value`` unchanged, or raise if either component is NaN or infinite."""
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonFiniteError(f"{label} is not finite: {value!r}")
    return value


def overflow_guard(func):
    """Report overflow inside cmath as a non-finite result of ``func``."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except OverflowError as exc:
            raise NonFiniteError(f"{func.__name__} overflowed: {exc}") from exc
    return wrapper


def sph_j0_series(z, terms=SERIES_TERMS):
    """Maclaurin series of sin(z)/z."""
    z = complex(z)
    z2 = z * z
    total = 0j
    power = 1 + 0j
    for coeff in _J0_SERIES[:terms]:
        total += coeff * power
        power *= z2
    return total


def sph_j0_prime_series(z, terms=SERIES_TERMS):
    """Maclaurin series of the derivative of sin(z)/z."""
    z = complex(z)
    z2 = z * z
    total = 0j
    power = z
    for k in range(1, terms + 1):
        coeff = (-1) ** k * 2 * k / math.factorial(2 * k + 1)
        total += coeff * power
        power *= z2
    return total


@overflow_guard
def sph_j0(z):
    """Spherical Bessel function of the first kind, j0(z) = sin(z)/z."""
    z = complex(z)
    if abs(z) < SERIES_SWITCH:
        return sph_j0_series(z)
    return ensure_finite(cmath.sin(z) / z, "j0(z)")


@overflow_guard
def sph_j0_prime(z):
    """j0'(z) = (z cos z - sin z) / z**2."""
    z = complex(z)
    if abs(z) < SERIES_SWITCH:
        return sph_j0_prime_series(z)
    return ensure_finite((z * cmath.cos(z) - cmath.sin(z)) / (z * z), "j0'(z)")


@overflow_guard
def sph_h0(z):
    """Spherical Hankel function of the first kind, h0(z) = -i exp(iz) / z."""
    z = complex(z)
    if z == 0:
        raise DomainError("h0 has a pole at z = 0")
    return ensure_finite(-1j * cmath.exp(1j * z) / z, "h0(z)")


@overflow_guard
def sph_h0_prime(z):
    """h0'(z) = exp(iz) (z + i) / z**2."""
    z = complex(z)
    if z == 0:
        raise DomainError("h0' has a pole at z = 0")
    return ensure_finite(cmath.exp(1j * z) * (z + 1j) / (z * z), "h0'(z)")


def principal_sqrt(z):
    # cmath.sqrt already returns the root with non-negative real part
    return ensure_finite(cmath.sqrt(complex(z)), "sqrt(z)")


def principal_log(z):
    """Principal logarithm, imaginary part in (-pi, pi], cut on the negative reals."""
    z = complex(z)
    if z == 0:
        raise DomainError("log is undefined at z = 0")
    return ensure_finite(cmath.log(z), "log(z)")


def sph_j0_array(x):
    """Vectorized j0 for numpy arrays, with the same series branch near zero."""
    x = np.asarray(x)
    small = np.abs(x) < SERIES_SWITCH
    safe = np.where(small, 1.0, x)
    direct = np.sin(safe) / safe
    series = np.polyval(_J0_SERIES[::-1], x * x)
    return np.where(small, series, direct)
