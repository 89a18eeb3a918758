"""
Deterministic evaluation of the ball moments M_n.

Integrating out the angles of x and then of y leaves

    M_n = 4 pi / (n + 2) int_0^1 int_0^1 [(rx + ry)**(n + 2) - |rx - ry|**(n + 2)]
          sin(pi rx / 2) sin(pi ry / 2) drx dry.

|rx - ry|**(n + 2) is not smooth across the diagonal for odd n, so the square
is integrated as two triangles, each with a collapsed tensor rule.
"""
import logging
import math

import numpy as np

from special.exceptions import DomainError
from special.quadrature import DEFAULT_ORDER, gauss_legendre, integrate, tensor_gauss, triangle_gauss

from .models import MomentEstimate, MomentMethod

logger = logging.getLogger(__name__)

MIN_ORDER = 8
SQRT_2PI = math.sqrt(2 * math.pi)


def _check_order(n):
    if int(n) != n or n < 1:
        raise DomainError(f"moment order must be a positive integer, got {n}")
    return int(n)


def _check_rule(order):
    if order < MIN_ORDER:
        raise DomainError(f"quadrature order must be at least {MIN_ORDER}, got {order}")


def radial_kernel(n, rx, ry):
    return (rx + ry) ** (n + 2) - np.abs(rx - ry) ** (n + 2)


def _integrand(n, rx, ry):
    return radial_kernel(n, rx, ry) * np.sin(0.5 * np.pi * rx) * np.sin(0.5 * np.pi * ry)


def moment_closed_form(n):
    if n == 1:
        value = 128 / math.pi ** 3
    elif n == 2:
        value = 768 / math.pi ** 5 * (math.pi ** 2 - 8)
    else:
        raise DomainError(f"no closed form for M{n}; only n = 1 and n = 2 are known")
    return MomentEstimate(n=n, value=value, method=MomentMethod.CLOSED_FORM)


def moment_quadrature(n, order=DEFAULT_ORDER):
    n = _check_order(n)
    _check_rule(order)
    total = 0.0
    for upper in (True, False):
        rx, ry, w = triangle_gauss(order, upper=upper)
        total += float(np.dot(w, _integrand(n, rx, ry)))
    value = 4 * math.pi / (n + 2) * total
    logger.debug("M%d by split quadrature of order %d: %.17g", n, order, value)
    return MomentEstimate(n=n, value=value, method=MomentMethod.QUADRATURE)


def moment_tensor_unsplit(n, order=DEFAULT_ORDER):
    """The same integral with one tensor rule over the whole square, ignoring the diagonal."""
    n = _check_order(n)
    _check_rule(order)
    rx, ry, w = tensor_gauss(order)
    return 4 * math.pi / (n + 2) * float(np.dot(w, _integrand(n, rx, ry)))


def inner_integral_closed_form(n, ry):
    """
    I(ry) = int_B |x - y|**n u0(x) dx at |y| = ry, in closed form for n = 1, 2.
    """
    if not 0 < ry <= 1:
        raise DomainError(f"ry must lie in (0, 1], got {ry}")
    pi = math.pi
    if n == 1:
        return 16 * SQRT_2PI / (pi ** 4 * ry) * (pi ** 2 * ry - 4 * math.sin(pi * ry / 2))
    if n == 2:
        return 8 * SQRT_2PI / pi ** 4 * (pi ** 2 * ry ** 2 + 3 * pi ** 2 - 24)
    raise DomainError(f"no closed inner integral for n = {n}")


def inner_integral(n, ry, order=DEFAULT_ORDER):
    """
    I(ry) = sqrt(2 pi) / ((n + 2) ry) int_0^1 [(rx + ry)**(n + 2) - |rx - ry|**(n + 2)] sin(pi rx / 2) drx,
    split at rx = ry.
    """
    n = _check_order(n)
    if not 0 < ry <= 1:
        raise DomainError(f"ry must lie in (0, 1], got {ry}")

    def f(rx):
        return radial_kernel(n, rx, ry) * np.sin(0.5 * np.pi * rx)

    total = integrate(f, 0.0, ry, order)
    if ry < 1:
        total += integrate(f, ry, 1.0, order)
    return SQRT_2PI / ((n + 2) * ry) * total


def moment_two_stage(n, order=DEFAULT_ORDER):
    """M_n = 2 sqrt(2 pi) int_0^1 I(ry) ry sin(pi ry / 2) dry with the inner integral done first."""
    n = _check_order(n)
    _check_rule(order)
    nodes, weights = gauss_legendre(order)
    inner = np.array([inner_integral(n, ry, order) for ry in nodes])
    value = 2 * SQRT_2PI * float(np.dot(weights, inner * nodes * np.sin(0.5 * np.pi * nodes)))
    return MomentEstimate(n=n, value=value, method=MomentMethod.QUADRATURE)
