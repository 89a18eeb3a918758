"""
Value types for sphere resonances. Nothing here is database-backed; the
choices enum is Django's so that it serializes and validates like the rest
of the project.
"""
import math
from dataclasses import dataclass, field

from django.conf import settings
from django.db import models

from special.exceptions import DomainError
from special.functions import principal_sqrt

# Both residuals below this certify a mode
CERTIFICATION_THRESHOLD = 1e-9


class ModeSource(models.TextChoices):
    CLOSED_FORM = 'closed_form', 'Closed form'
    NEWTON = 'newton', 'Newton iteration'


@dataclass(frozen=True)
class SphereSpec:
    """
    Dielectric ball of radius ``radius`` and susceptibility ``eta`` in vacuum.

    By default ``eta`` must be real and non-negative. ``allow_complex`` admits
    any complex contrast for which sqrt(1 + eta) stays off its branch cut.
    Zero contrast is a valid spec (the dispersion relation is defined) but has
    no resonance.
    """
    radius: float
    eta: complex
    allow_complex: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'radius', float(self.radius))
        object.__setattr__(self, 'eta', complex(self.eta))
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise DomainError(f"radius must be positive and finite, got {self.radius}")
        if not (math.isfinite(self.eta.real) and math.isfinite(self.eta.imag)):
            raise DomainError(f"susceptibility must be finite, got {self.eta}")
        if self.allow_complex:
            if self.eta.imag == 0 and self.eta.real <= -1:
                raise DomainError(f"1 + eta lies on the branch cut for eta = {self.eta}")
        elif self.eta.imag != 0 or self.eta.real < 0:
            raise DomainError(
                f"susceptibility must be real and non-negative, got {self.eta} "
                "(pass allow_complex=True for complex contrast)"
            )

    @property
    def index(self):
        """s = sqrt(1 + eta), the refractive index of the ball."""
        return principal_sqrt(1 + self.eta)

    def __str__(self):
        return f"ball(r={self.radius:g}, eta={self.eta:g})"


@dataclass(frozen=True)
class NanoScaling:
    """Nanosphere of radius h with high contrast eta0 / h**2."""
    h: float
    eta0: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.h) and self.h > 0):
            raise DomainError(f"scale factor h must be positive, got {self.h}")
        if not (math.isfinite(self.eta0) and self.eta0 > 0):
            raise DomainError(f"contrast constant eta0 must be positive, got {self.eta0}")

    @property
    def eta(self):
        return self.eta0 / self.h ** 2

    def sphere(self):
        return SphereSpec(radius=self.h, eta=self.eta)


@dataclass(frozen=True)
class ResonanceMode:
    k: complex
    lam: complex
    branch_m: int
    interface_residual: float
    dispersion_residual: float
    source: str = ModeSource.CLOSED_FORM
    iterations: int = 0

    def certified(self, threshold=CERTIFICATION_THRESHOLD):
        return self.interface_residual < threshold and self.dispersion_residual < threshold

    def __str__(self):
        return f"m={self.branch_m} k={self.k:.15g} ({self.source})"


@dataclass(frozen=True)
class SolverConfig:
    tol: float = 1e-13
    max_iter: int = 60
    seed_offset: complex = 0.1 + 0.1j
    # a converged iterate also needs a Newton step below step_tol * max(1, |k|)
    step_tol: float = 1e-10
    workers: int = field(default=1, compare=False)

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError(f"solver tolerance must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise DomainError(f"max_iter must be at least 1, got {self.max_iter}")
        if not self.step_tol > 0:
            raise DomainError(f"step tolerance must be positive, got {self.step_tol}")

    @classmethod
    def from_settings(cls, **overrides):
        conf = settings.RESONANCE
        values = {
            'tol': conf['SOLVER_TOL'],
            'max_iter': conf['SOLVER_MAX_ITER'],
            'seed_offset': conf['SOLVER_SEED_OFFSET'],
            'step_tol': conf['SOLVER_STEP_TOL'],
        }
        values.update(overrides)
        return cls(**values)
