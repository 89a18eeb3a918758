"""
Gauss-Legendre rules on intervals, rectangles and right triangles.

Integrands are vectorized callables taking numpy arrays of nodes.
"""
import functools
import logging

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 64


@functools.lru_cache(maxsize=32)
def _reference_rule(order):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


def gauss_legendre(order, a=0.0, b=1.0):
    """Return tuple (x, w) of Gauss points and weights of the given order on [a, b]."""
    if order < 1:
        raise ValueError(f"quadrature order must be positive, got {order}")
    nodes, weights = _reference_rule(order)
    half = 0.5 * (b - a)
    return a + (nodes + 1.0) * half, weights * half


def integrate(f, a, b, order=DEFAULT_ORDER):
    x, w = gauss_legendre(order, a, b)
    return float(np.dot(w, f(x)))


def adaptive_integrate(f, a, b, order=DEFAULT_ORDER, tol=1e-14, max_depth=12):
    """
    Adaptive panel refinement: a panel is accepted when its single-rule value
    agrees with the sum over its two halves to ``tol`` (relative to the panel
    magnitude, absolute below one).
    """
    def panel(lo, hi, whole, depth):
        mid = 0.5 * (lo + hi)
        left = integrate(f, lo, mid, order)
        right = integrate(f, mid, hi, order)
        refined = left + right
        if abs(refined - whole) <= tol * max(1.0, abs(refined)) or depth >= max_depth:
            if depth >= max_depth:
                logger.warning("adaptive quadrature hit depth %d on [%g, %g]", depth, lo, hi)
            return refined
        return panel(lo, mid, left, depth + 1) + panel(mid, hi, right, depth + 1)

    if a == b:
        return 0.0
    return panel(a, b, integrate(f, a, b, order), 0)


def tensor_gauss(order, xintval=(0.0, 1.0), yintval=(0.0, 1.0)):
    """
    Return tuple (xx, yy, ww) of (x, y) coordinates and weights of the tensor
    rule of the given order in each direction.
    """
    x, wx = gauss_legendre(order, *xintval)
    y, wy = gauss_legendre(order, *yintval)
    xx, yy = np.meshgrid(x, y, indexing='ij')
    ww = np.outer(wx, wy)
    return xx.ravel(), yy.ravel(), ww.ravel()


def triangle_gauss(order, upper=True):
    """
    Collapsed tensor rule on a triangle of the unit square.

    ``upper=True`` covers {0 <= x <= y <= 1}, otherwise {0 <= y < x <= 1}.
    The map (u, v) -> (u v, u) has Jacobian u, so polynomials in (x, y) of
    degree < 2 order - 1 are integrated exactly.
    """
    u, v, w = tensor_gauss(order)
    inner = u * v
    weights = w * u
    if upper:
        return inner, u, weights
    return u, inner, weights
