##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
import numpy as np

TOLERANCE = 1e-12


class CumulativeHazard(object):
    """Non-decreasing step function H(t), 0 before the first time."""

    __slots__ = ('times', 'hazard')

    def __init__(self, times, hazard):
        times = np.array(times, dtype=float).reshape(-1)
        hazard = np.array(hazard, dtype=float).reshape(-1)
        if len(times) != len(hazard):
            raise ValueError('times and hazard differ in length')
        if len(times) and (not np.all(np.isfinite(times)) or np.any(np.diff(times) <= 0)):
            raise ValueError('hazard times must be finite and strictly increasing')
        if np.any(hazard < -TOLERANCE) or np.any(np.isnan(hazard)):
            raise ValueError('cumulative hazard must be non-negative')
        if np.any(np.diff(hazard) < -TOLERANCE):
            raise ValueError('cumulative hazard must be non-decreasing')
        times.setflags(write=False)
        hazard.setflags(write=False)
        object.__setattr__(self, 'times', times)
        object.__setattr__(self, 'hazard', hazard)

    def __setattr__(self, name, value):
        raise AttributeError('CumulativeHazard is immutable')

    def __len__(self):
        return len(self.times)

    def __repr__(self):
        return 'CumulativeHazard(steps={})'.format(len(self.times))

    def evaluate(self, t):
        """Return H(t); t may be a scalar or an array."""
        t = np.asarray(t, dtype=float)
        if not len(self.times):
            values = np.zeros(t.shape)
        else:
            index = np.searchsorted(self.times, t, side='right') - 1
            values = np.where(index >= 0, self.hazard[np.maximum(index, 0)], 0.0)
        return float(values) if values.ndim == 0 else values

    def scaled(self, factor):
        """Return factor * H."""
        if factor < 0:
            raise ValueError('hazard scale must be non-negative')
        return CumulativeHazard(self.times, self.hazard * factor)
