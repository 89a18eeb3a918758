import math
from dataclasses import dataclass

from django.db import models

from special.exceptions import DomainError


class ApproximationLevel(models.TextChoices):
    R0 = 'R0', 'Leading term'
    R0R1 = 'R0R1', 'Leading term and R1'
    R0R1R2 = 'R0R1R2', 'Leading term, R1 and R2'


@dataclass(frozen=True)
class ExpansionTerm:
    power: int
    value: complex
    stderr: float = 0.0


@dataclass(frozen=True)
class ExpansionSeries:
    """
    Truncated power series in h. Terms are kept sorted by power; a missing
    power below ``truncation_order`` has coefficient zero.
    """
    terms: tuple
    truncation_order: int
    label: str = ''

    def __post_init__(self):
        powers = [term.power for term in self.terms]
        if any(b <= a for a, b in zip(powers, powers[1:])):
            raise DomainError(f"powers must be strictly increasing, got {powers}")
        if powers and (powers[0] < 0 or powers[-1] > self.truncation_order):
            raise DomainError(f"powers {powers} fall outside 0..{self.truncation_order}")

    @classmethod
    def from_coefficients(cls, coefficients, truncation_order=None, label=''):
        """Build from a mapping power -> value or power -> (value, stderr)."""
        terms = []
        for power in sorted(coefficients):
            entry = coefficients[power]
            value, stderr = entry if isinstance(entry, tuple) else (entry, 0.0)
            terms.append(ExpansionTerm(power, complex(value), float(stderr)))
        if truncation_order is None:
            truncation_order = terms[-1].power if terms else 0
        return cls(tuple(terms), truncation_order, label)

    @property
    def powers(self):
        return [term.power for term in self.terms]

    def term(self, power):
        for term in self.terms:
            if term.power == power:
                return term
        if 0 <= power <= self.truncation_order:
            return ExpansionTerm(power, 0j)
        raise DomainError(f"power {power} is beyond the truncation order {self.truncation_order}")

    def coefficient(self, power):
        return self.term(power).value

    def evaluate(self, h):
        return sum((term.value * h ** term.power for term in self.terms), 0j)

    def restricted(self, low, high):
        """The terms with low <= power <= high."""
        kept = tuple(term for term in self.terms if low <= term.power <= high)
        return ExpansionSeries(kept, min(high, self.truncation_order), self.label)

    def _combine(self, other, sign):
        merged = {}
        for term in self.terms:
            merged[term.power] = (term.value, term.stderr)
        for term in other.terms:
            value, stderr = merged.get(term.power, (0j, 0.0))
            merged[term.power] = (value + sign * term.value, math.hypot(stderr, term.stderr))
        return ExpansionSeries.from_coefficients(
            merged, max(self.truncation_order, other.truncation_order),
        )

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __str__(self):
        body = ' + '.join(f"({term.value:.15g}) h^{term.power}" for term in self.terms)
        return f"{self.label or 'series'}: {body or '0'}"
