"""
Limit eigenpair on the unit ball.

As h -> 0 the nanosphere resonance tends to the first eigenvalue of
lambda T0 u = u, where T0 is the Newtonian potential (1 / 4 pi) int_B u(y) / |x - y| dy.
On the ball the radial eigenfunction is sin(pi r / 2) / r with eigenvalue pi**2 / 4.
"""
import logging
import math

import numpy as np

from special.exceptions import DomainError
from special.functions import sph_j0_array
from special.quadrature import DEFAULT_ORDER, adaptive_integrate, integrate

from .models import LimitEigenpair

logger = logging.getLogger(__name__)

LAMBDA0 = math.pi ** 2 / 4
# L2(B) normalization of sin(pi r / 2) / r
NORMALIZATION = 1 / math.sqrt(2 * math.pi)


def lambda0():
    return LAMBDA0


def u0(r):
    """
    (1 / sqrt(2 pi)) sin(pi r / 2) / r, evaluated as (pi / 2) j0(pi r / 2) so
    that r = 0 is handled by the series. Accepts scalars or arrays on [0, 1].
    """
    values = np.asarray(r, dtype=float)
    if np.any(values < 0) or np.any(values > 1) or np.any(np.isnan(values)):
        raise DomainError("u0 is defined on [0, 1] only")
    result = NORMALIZATION * (math.pi / 2) * sph_j0_array(0.5 * math.pi * values)
    if result.ndim == 0:
        return float(result)
    return result


def U0():
    """Integral of u0 over the ball, 16 / (pi sqrt(2 pi))."""
    return 16 / (math.pi * math.sqrt(2 * math.pi))


def U0_quadrature(order=DEFAULT_ORDER):
    return 4 * math.pi * integrate(lambda r: r * r * u0(r), 0.0, 1.0, order)


def normalization(order=DEFAULT_ORDER):
    """4 pi int_0^1 u0(r)**2 r**2 dr; equals one."""
    return 4 * math.pi * integrate(lambda r: (r * u0(r)) ** 2, 0.0, 1.0, order)


def first_order_coefficient(lam=LAMBDA0):
    """
    (1 / 4 pi) lambda0**(5/2) U0**2, the magnitude of the imaginary h term of
    the resonance. Equals pi for the true eigenvalue.
    """
    return lam ** 2.5 * U0() ** 2 / (4 * math.pi)


def limit_eigenpair():
    return LimitEigenpair(lambda0=LAMBDA0, u0=u0, U0=U0())


def newtonian_potential_radial(f, r, order=DEFAULT_ORDER):
    """
    int_B f(|y|) / |x - y| dy at |x| = r for a vectorized radial density f,
    reduced to 4 pi [(1 / r) int_0^r s**2 f(s) ds + int_r^1 s f(s) ds].
    """
    if not 0 <= r <= 1:
        raise DomainError(f"radius must lie in [0, 1], got {r}")
    outer = adaptive_integrate(lambda s: s * f(s), r, 1.0, order)
    if r == 0:
        return 4 * math.pi * outer
    inner = adaptive_integrate(lambda s: s * s * f(s), 0.0, r, order)
    return 4 * math.pi * (inner / r + outer)


def verify_limit_eigenpair(grid, lam=None, eigenfunction=None, order=DEFAULT_ORDER):
    """
    Max over ``grid`` of |(lam / 4 pi) V[f](r) - f(r)|, where V is the radial
    Newtonian potential. Defaults to the true eigenpair; ``lam`` and
    ``eigenfunction`` override it.
    """
    lam = LAMBDA0 if lam is None else lam
    f = u0 if eigenfunction is None else eigenfunction
    worst = 0.0
    for r in grid:
        if not 0 < r <= 1:
            raise DomainError(f"grid points must lie in (0, 1], got {r}")
        residual = abs(lam / (4 * math.pi) * newtonian_potential_radial(f, r, order) - float(f(r)))
        worst = max(worst, residual)
    logger.debug("eigenpair residual %.3e over %d points (lambda=%r)", worst, len(grid), lam)
    return worst
