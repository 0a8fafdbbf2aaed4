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


def _vector(values, name, dtype=float):
    array = np.array(values, dtype=dtype).reshape(-1)
    array.setflags(write=False)
    return array


class SurvivalCurve(object):
    """Right-continuous step function S(t) with optional confidence bounds.

    S(t) is 1 before times[0] and survival[k] on [times[k], times[k+1]).
    at_risk and events hold the n_i and d_i tallies behind each step when
    the curve comes from a product-limit fit. ci_flags marks steps whose
    bounds are degenerate.
    """

    __slots__ = ('times', 'survival', 'ci_lower', 'ci_upper', 'at_risk', 'events', 'ci_flags')

    def __init__(self, times, survival, ci_lower=None, ci_upper=None,
                 at_risk=None, events=None, ci_flags=None):
        times = _vector(times, 'times')
        survival = _vector(survival, 'survival')
        if len(times) != len(survival):
            raise ValueError('times and survival differ in length')
        if len(times) and (not np.all(np.isfinite(times)) or np.any(np.diff(times) <= 0)):
            raise ValueError('curve times must be finite and strictly increasing')
        if np.any(survival < -TOLERANCE) or np.any(survival > 1 + TOLERANCE):
            raise ValueError('survival values must lie in [0, 1]')
        if np.any(np.diff(survival) > TOLERANCE):
            raise ValueError('survival values must be non-increasing')
        fields = {'times': times, 'survival': survival}
        for name, values in (('ci_lower', ci_lower), ('ci_upper', ci_upper),
                             ('at_risk', at_risk), ('events', events)):
            if values is not None:
                values = _vector(values, name)
                if len(values) != len(times):
                    raise ValueError('{} length differs from times'.format(name))
            fields[name] = values
        if (ci_lower is None) != (ci_upper is None):
            raise ValueError('confidence bounds come in pairs')
        if ci_lower is not None:
            if np.any(fields['ci_lower'] > survival + TOLERANCE) or \
                    np.any(fields['ci_upper'] < survival - TOLERANCE):
                raise ValueError('confidence bounds must enclose the survival values')
        if ci_flags is not None:
            ci_flags = _vector(ci_flags, 'ci_flags', dtype=bool)
        else:
            ci_flags = _vector(np.zeros(len(times)), 'ci_flags', dtype=bool)
        fields['ci_flags'] = ci_flags
        for name, value in fields.items():
            object.__setattr__(self, name, value)

    def __setattr__(self, name, value):
        raise AttributeError('SurvivalCurve is immutable')

    def __len__(self):
        return len(self.times)

    def __repr__(self):
        return 'SurvivalCurve(steps={})'.format(len(self.times))

    @property
    def has_ci(self):
        return self.ci_lower is not None

    def evaluate(self, t):
        """Return S(t); t may be a scalar or an array."""
        t = np.asarray(t, dtype=float)
        if np.any(t < 0):
            raise ValueError('evaluation times must be non-negative')
        values = self.step_values(self.survival, t, before=1.0)
        return float(values) if np.ndim(values) == 0 else values

    def step_values(self, values, t, before=1.0):
        """Return an arbitrary per-step vector evaluated as a step function."""
        t = np.asarray(t, dtype=float)
        if not len(self.times):
            return np.full(t.shape, before, dtype=float)
        index = np.searchsorted(self.times, t, side='right') - 1
        return np.where(index >= 0, np.asarray(values)[np.maximum(index, 0)], before)
