"""
Asymptotic expansion of the nanosphere resonance lambda_h in the radius h.

    lambda_h = R0(h) + R1(h) + R2(h)

R0 = lambda0 - i (1 / 4 pi) lambda0**(5/2) U0**2 h is the limit eigenvalue with
its first-order shift. R1 is the series built from the ball moments M_n,
whose h**k coefficient is

    -(1 / 4 pi) lambda0**2 lambda0**(k/2) i**k / k! M_(k-1),   k >= 2.

R2 is what remains of the exact resonance; its leading coefficients are
extracted by subtracting R0 and R1 from the Taylor series of lambda_h.
All of this is at eta0 = 1 except where eta0 is an explicit argument.

The first-order coefficient carries the factor 1 / 4 pi. Without it the h
term would not equal -i pi h, which is the h term of the exact resonance.
"""
import functools
import logging
import math

import mpmath

from limits.eigenpair import LAMBDA0, first_order_coefficient
from moments.integrals import moment_closed_form, moment_quadrature
from resonances.exact import nanosphere_resonance
from resonances.models import NanoScaling
from special.exceptions import DomainError

from .models import ApproximationLevel, ExpansionSeries

logger = logging.getLogger(__name__)

# Numerical differentiation in mpmath is reliable to this order at the default precision
MAX_TAYLOR_ORDER = 8
DEFAULT_TAYLOR_DPS = 40
# R1 and R2 are truncated after h**3 unless higher moments are supplied
DEFAULT_TRUNCATION = 3

_POWERS_OF_I = (1, 1j, -1, -1j)


def r0_series(lam0=LAMBDA0):
    """{0: lambda0, 1: -i pi}, the leading term of the expansion."""
    return ExpansionSeries.from_coefficients(
        {0: complex(lam0), 1: -1j * first_order_coefficient(lam0)}, label='R0',
    )


def default_moments(max_order=DEFAULT_TRUNCATION):
    """Closed forms for M1 and M2, converged quadrature beyond."""
    return [moment_closed_form(n) if n <= 2 else moment_quadrature(n) for n in range(1, max_order)]


def r1_series(max_order=DEFAULT_TRUNCATION, moments=None, lam0=LAMBDA0):
    """
    R1 through h**max_order from the moments M_1 .. M_(max_order - 1). A
    Monte Carlo moment passes its standard error to the coefficient it feeds.
    """
    if int(max_order) != max_order or max_order < 2:
        raise DomainError(f"R1 starts at h**2; max_order must be at least 2, got {max_order}")
    max_order = int(max_order)
    if moments is None:
        moments = default_moments(max_order)
    by_order = {estimate.n: estimate for estimate in moments}

    coefficients = {}
    for k in range(2, max_order + 1):
        estimate = by_order.get(k - 1)
        if estimate is None:
            raise DomainError(f"the h^{k} coefficient of R1 needs M{k - 1}, which was not supplied")
        factor = -lam0 ** 2 * lam0 ** (k / 2) * _POWERS_OF_I[k % 4] / (4 * math.pi * math.factorial(k))
        coefficients[k] = (factor * estimate.value, abs(factor) * estimate.stderr)
    return ExpansionSeries.from_coefficients(coefficients, max_order, label='R1')


def _exact_lambda_mp(h, eta0):
    # (pi/2 - i asinh(h / sqrt(eta0)))**2 / (eta0 + h**2), the squared wave number
    return (mpmath.pi / 2 - 1j * mpmath.asinh(h / mpmath.sqrt(eta0))) ** 2 / (eta0 + h ** 2)


@functools.lru_cache(maxsize=16)
def _taylor_coefficients(order, eta0, dps):
    with mpmath.workdps(dps):
        eta0_mp = mpmath.mpf(eta0)
        coefficients = mpmath.taylor(lambda h: _exact_lambda_mp(h, eta0_mp), 0, order)
        return tuple(complex(c) for c in coefficients)


def taylor_exact(order=4, eta0=1.0, dps=DEFAULT_TAYLOR_DPS):
    """
    Taylor coefficients of the exact nanosphere resonance lambda_h at h = 0,
    differentiated numerically in mpmath at ``dps`` digits.
    """
    if int(order) != order or order < 0:
        raise DomainError(f"Taylor order must be a non-negative integer, got {order}")
    if order > MAX_TAYLOR_ORDER:
        raise DomainError(f"Taylor order {order} exceeds the supported maximum {MAX_TAYLOR_ORDER}")
    if not eta0 > 0:
        raise DomainError(f"contrast constant eta0 must be positive, got {eta0}")
    coefficients = _taylor_coefficients(int(order), float(eta0), int(dps))
    logger.debug("Taylor coefficients of lambda_h to order %d: %s", order, coefficients)
    return ExpansionSeries.from_coefficients(dict(enumerate(coefficients)), int(order), label='exact')


def r2_coeffs(max_order=DEFAULT_TRUNCATION, moments=None, lam0=LAMBDA0):
    """Leading coefficients of R2: Taylor series of lambda_h minus R0 and R1."""
    remainder = taylor_exact(max_order) - r0_series(lam0) - r1_series(max_order, moments, lam0)
    r2 = remainder.restricted(2, max_order)
    return ExpansionSeries(r2.terms, r2.truncation_order, label='R2')


def exact_lambda(h, eta0=1.0):
    """lambda_h of the nanosphere of radius h and susceptibility eta0 / h**2."""
    return nanosphere_resonance(NanoScaling(h, eta0)).lam


def r2_extract(h, order=DEFAULT_TRUNCATION, moments=None):
    """R2(h) = lambda_h - R0(h) - R1(h), with R1 truncated after h**order."""
    if not h > 0:
        raise DomainError(f"h must be positive, got {h}")
    return exact_lambda(h) - r0_series().evaluate(h) - r1_series(order, moments).evaluate(h)


@functools.lru_cache(maxsize=8)
def _partial_sums(lam0):
    r0 = r0_series(lam0)
    r1 = r1_series(DEFAULT_TRUNCATION, lam0=lam0)
    return {
        ApproximationLevel.R0: r0,
        ApproximationLevel.R0R1: r0 + r1,
        ApproximationLevel.R0R1R2: r0 + r1 + r2_coeffs(DEFAULT_TRUNCATION, lam0=lam0),
    }


def approximation(level, lam0=LAMBDA0):
    """The partial sum of the expansion at ``level``, R1 and R2 cut after h**3."""
    if level not in ApproximationLevel.values:
        raise DomainError(f"unknown approximation level {level!r}")
    return _partial_sums(lam0)[ApproximationLevel(level)]


def approx_lambda(h, level, lam0=LAMBDA0):
    if not 0 < h < 1:
        raise DomainError(f"h must lie in (0, 1), got {h}")
    return approximation(level, lam0).evaluate(h)
