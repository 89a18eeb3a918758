"""
Closed-form resonances of a dielectric ball for radially symmetric modes.

Inside the ball the mode is A j0(k s rho), outside B h0(k rho), with
s = sqrt(1 + eta). Continuity of the field and of its radial derivative at
rho = r gives the matching equation

    F(k) = s h0(k r) j0'(k s r) - h0'(k r) j0(k s r) = 0,

which reduces to G(k) = sin(k r s) + i s cos(k r s) = 0 since
F = -exp(i k r) G / (s k**2 r**2). Its roots are

    k_m = (pi/2 + m pi - i log((s + 1) / sqrt(eta))) / (r s),   m = 0, 1, ...

The simplified nanosphere formula for eta0 = 1 is often printed with an
inverse sine of h. Substituting eta = 1 / h**2 gives log(sqrt(1 + h**2) + h),
which is asinh(h); only asinh reproduces the Taylor coefficient 7 i pi / 6 at
h**3 (arcsin would give 5 i pi / 6), so asinh is used throughout.
"""
import cmath
import logging
import math

from special.exceptions import DomainError
from special.functions import (
    ensure_finite, overflow_guard, principal_log, principal_sqrt, sph_h0, sph_h0_prime, sph_j0,
    sph_j0_prime,
)

from .models import CERTIFICATION_THRESHOLD, ModeSource, NanoScaling, ResonanceMode

logger = logging.getLogger(__name__)


def _check_branch(m):
    if int(m) != m or m < 0:
        raise DomainError(f"branch index must be a non-negative integer, got {m}")
    return int(m)


def log_term(spec):
    """log((sqrt(eta + 1) + 1) / sqrt(eta)), the decay part of r s k."""
    if spec.eta == 0:
        raise DomainError("no resonance for zero contrast")
    return principal_log((spec.index + 1) / principal_sqrt(spec.eta))


def wave_number_exact(spec, m=0):
    m = _check_branch(m)
    k = (math.pi / 2 + m * math.pi - 1j * log_term(spec)) / (spec.radius * spec.index)
    k = ensure_finite(k, "wave number")
    if k.real <= 0:
        raise DomainError(f"{spec} has no branch-{m} resonance with positive real part")
    return k


def wave_number_symbolic(spec):
    """
    The form returned by a symbolic solver, -i log(i (s + 1) / sqrt(eta)) / (r s);
    the principal logarithm puts it on branch 0.
    """
    if spec.eta == 0:
        raise DomainError("no resonance for zero contrast")
    s = spec.index
    argument = 1j * (s + 1) / principal_sqrt(spec.eta)
    return ensure_finite(-1j * principal_log(argument) / (spec.radius * s), "wave number")


def interface_residual(k, spec):
    """Matching-equation residual F(k); zero at resonances, pole at k = 0."""
    k = complex(k)
    if k == 0:
        raise DomainError("interface residual has a pole at k = 0")
    s = spec.index
    z = k * spec.radius
    w = z * s
    return s * sph_h0(z) * sph_j0_prime(w) - sph_h0_prime(z) * sph_j0(w)


@overflow_guard
def dispersion_residual(k, spec):
    """Entire reduction G(k) = sin(k r s) + i s cos(k r s) of the matching equation."""
    s = spec.index
    w = complex(k) * spec.radius * s
    return ensure_finite(cmath.sin(w) + 1j * s * cmath.cos(w), "dispersion residual")


@overflow_guard
def dispersion_derivative(k, spec):
    """G'(k) = r s (cos(k r s) - i s sin(k r s))."""
    s = spec.index
    rs = spec.radius * s
    w = complex(k) * rs
    return ensure_finite(rs * (cmath.cos(w) - 1j * s * cmath.sin(w)), "dispersion derivative")


def certify(k, spec, branch_m, source=ModeSource.CLOSED_FORM, iterations=0):
    """Wrap ``k`` as a ResonanceMode carrying both residual magnitudes."""
    k = complex(k)
    return ResonanceMode(
        k=k,
        lam=k * k,
        branch_m=branch_m,
        interface_residual=abs(interface_residual(k, spec)),
        dispersion_residual=abs(dispersion_residual(k, spec)),
        source=source,
        iterations=iterations,
    )


def resonance_exact(spec, m=0):
    mode = certify(wave_number_exact(spec, m), spec, m)
    logger.debug("closed form %s for %s", mode, spec)
    return mode


def nanosphere_resonance(scaling, m=0):
    """Resonance of the ball of radius h with susceptibility eta0 / h**2."""
    return resonance_exact(scaling.sphere(), m)


def nanosphere_wave_number_simplified(h, eta0=1.0, m=0):
    """(pi/2 + m pi - i asinh(h / sqrt(eta0))) / sqrt(eta0 + h**2)."""
    scaling = NanoScaling(h, eta0)
    m = _check_branch(m)
    decay = math.asinh(scaling.h / math.sqrt(scaling.eta0))
    return complex(math.pi / 2 + m * math.pi, -decay) / math.sqrt(scaling.eta0 + scaling.h ** 2)


def mode_coefficients(mode, spec, threshold=CERTIFICATION_THRESHOLD):
    """
    Amplitudes (A, B) of the interior and exterior fields, normalized to A = 1
    so that the field is continuous at the surface.
    """
    if not mode.certified(threshold):
        raise DomainError(
            f"mode {mode} is not certified: residuals {mode.interface_residual:.3e}, "
            f"{mode.dispersion_residual:.3e} exceed {threshold:.1e}"
        )
    outside = sph_h0(mode.k * spec.radius)
    if outside == 0:
        raise DomainError("h0 vanishes at the surface; exterior amplitude is undefined")
    return 1 + 0j, sph_j0(mode.k * spec.index * spec.radius) / outside


def evaluate_mode(mode, spec, rho):
    """Field value at distance ``rho`` from the centre."""
    if rho < 0:
        raise DomainError(f"radial distance must be non-negative, got {rho}")
    a, b = mode_coefficients(mode, spec)
    if rho <= spec.radius:
        return a * sph_j0(mode.k * spec.index * rho)
    return b * sph_h0(mode.k * rho)


def mode_radial_derivative(mode, spec, rho, side=None):
    """
    Radial derivative of the field. ``side`` picks the interior ('inside') or
    exterior ('outside') expression; by default it follows ``rho``.
    """
    if rho < 0:
        raise DomainError(f"radial distance must be non-negative, got {rho}")
    if side is None:
        side = 'inside' if rho <= spec.radius else 'outside'
    a, b = mode_coefficients(mode, spec)
    if side == 'inside':
        ks = mode.k * spec.index
        return a * ks * sph_j0_prime(ks * rho)
    if side == 'outside':
        return b * mode.k * sph_h0_prime(mode.k * rho)
    raise ValueError(f"side must be 'inside' or 'outside', got {side!r}")
