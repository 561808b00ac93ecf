# -*- coding: utf-8 -*-
"""
Least-squares power-law fits of recorded distances against the round.
"""

import logging
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import RateFitError
from approachabilitykit.calculator.record import RunRecord


logger = logging.getLogger(__name__)


class RateFit:
    """
    ``slope``, ``intercept`` and ``r_squared`` of log(value) against log(t).
    When some value is zero or negative no fit is made and ``converged`` is
    set instead.
    """

    def __init__(self, slope=None, intercept=None, r_squared=None, points=0, converged=False):
        self.slope = slope
        self.intercept = intercept
        self.r_squared = r_squared
        self.points = points
        self.converged = converged

    @property
    def status(self):
        return 'converged-to-zero' if self.converged else 'fit'

    def __repr__(self):
        if self.converged:
            return 'RateFit(converged-to-zero, points=%d)' % self.points
        return 'RateFit(slope=%.6g, intercept=%.6g, r2=%.6g, points=%d)' % (self.slope, self.intercept, self.r_squared, self.points)


def fit_power_law(t, values, t_min=1):
    t = np.asarray(t, dtype=float)
    values = np.asarray(values, dtype=float)
    keep = t >= t_min
    t = t[keep]
    values = values[keep]
    if t.size < RATE_FIT_MIN_POINTS:
        raise RateFitError('need at least %d checkpoints with t >= %r, got %d' % (RATE_FIT_MIN_POINTS, t_min, t.size))
    if np.any(values <= 0.0):
        return RateFit(points=int(t.size), converged=True)

    x = np.log(t)
    y = np.log(values)
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    spread = float(np.sum((y - y.mean()) ** 2))
    r_squared = 1.0 - float(np.sum(residual ** 2)) / spread if spread > 0.0 else 1.0
    return RateFit(float(slope), float(intercept), r_squared, int(t.size))


def fit_rate(record, column, t_min=1):
    assert isinstance(record, RunRecord), 'record is not a RunRecord class: %r' % record
    return fit_power_law(record.column('t'), record.column(column), t_min)


def fit_discrepancy_rate(record, t_min=1):
    """
    Fit of |delta_T| / T, the rate of the known-game strategy.
    """
    t = np.asarray(record.column('t'), dtype=float)
    return fit_power_law(t, np.asarray(record.column('delta_norm')) / t, t_min)
