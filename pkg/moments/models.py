from dataclasses import dataclass
from typing import Optional

from django.db import models

from special.exceptions import DomainError


class MomentMethod(models.TextChoices):
    CLOSED_FORM = 'closed_form', 'Closed form'
    QUADRATURE = 'quadrature', 'Gauss-Legendre quadrature'
    MONTE_CARLO = 'monte_carlo', 'Monte Carlo'


@dataclass(frozen=True)
class MomentEstimate:
    """
    M_n = int_B int_B |x - y|**n u0(x) u0(y) dx dy. ``stderr``, ``samples``,
    ``seed`` and ``shards`` are only meaningful for Monte Carlo estimates.
    """
    n: int
    value: float
    method: str
    stderr: float = 0.0
    samples: int = 0
    seed: Optional[int] = None
    shards: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"moment order must be at least 1, got {self.n}")
        if not self.value > 0:
            raise DomainError(f"moment M{self.n} must be positive, got {self.value}")
        if self.stderr < 0:
            raise DomainError(f"standard error must be non-negative, got {self.stderr}")

    def __str__(self):
        if self.method == MomentMethod.MONTE_CARLO:
            return f"M{self.n} = {self.value:.10g} +/- {self.stderr:.2g} ({self.samples} samples)"
        return f"M{self.n} = {self.value:.15g} ({self.method})"
