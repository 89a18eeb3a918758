"""
Comparison data for the exact nanosphere resonance against its partial sums,
one row per radius h.
"""
import csv
import logging
from dataclasses import dataclass

import numpy as np

from expansions.models import ApproximationLevel
from expansions.series import approx_lambda, exact_lambda
from limits.eigenpair import LAMBDA0
from special.exceptions import DomainError

logger = logging.getLogger(__name__)

FIGURE_HEADER = 'h,re_exact,im_exact,re_r0,im_r0,re_r0r1,im_r0r1,re_r0r1r2,im_r0r1r2'
# Enough digits for a float64 to survive a text round trip
CSV_FORMAT = '.17g'


@dataclass(frozen=True)
class FigureRow:
    h: float
    exact: complex
    r0: complex
    r0r1: complex
    r0r1r2: complex

    def values(self):
        """Floats in header order."""
        numbers = [self.h]
        for value in (self.exact, self.r0, self.r0r1, self.r0r1r2):
            numbers.extend((value.real, value.imag))
        return numbers


def figure_row(h, lam0=LAMBDA0):
    return FigureRow(
        h=float(h),
        exact=exact_lambda(h),
        r0=approx_lambda(h, ApproximationLevel.R0, lam0),
        r0r1=approx_lambda(h, ApproximationLevel.R0R1, lam0),
        r0r1r2=approx_lambda(h, ApproximationLevel.R0R1R2, lam0),
    )


def figure_rows(h_min, h_max, steps, lam0=LAMBDA0):
    if not 0 < h_min < h_max < 1:
        raise DomainError(f"need 0 < h_min < h_max < 1, got h_min={h_min}, h_max={h_max}")
    if steps < 2:
        raise DomainError(f"need at least 2 steps, got {steps}")
    rows = [figure_row(h, lam0) for h in np.linspace(h_min, h_max, int(steps))]
    logger.info("computed %d figure rows on [%g, %g]", len(rows), h_min, h_max)
    return rows


def write_csv(rows, stream):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(FIGURE_HEADER.split(','))
    for row in rows:
        writer.writerow([format(value, CSV_FORMAT) for value in row.values()])
