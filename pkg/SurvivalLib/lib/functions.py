##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
"""Operations on curves and cumulative hazards shared by every model."""
from collections import OrderedDict

import numpy as np
import pandas as pd

from .base.CumulativeHazard import CumulativeHazard
from .base.SurvivalCurve import SurvivalCurve

CURVE_COLUMNS = ['time', 'at_risk', 'events', 'survival', 'ci_lower', 'ci_upper', 'group']


def curve_eval(curve, t):
    """Return S at the largest step time <= t, or 1 before the first step."""
    if t < 0:
        raise ValueError('evaluation time must be non-negative, got {}'.format(t))
    return curve.evaluate(t)


def chf_eval(chf, t):
    """Return H at the largest grid time <= t, or 0 before the first."""
    return chf.evaluate(t)


def chf_to_survival(chf):
    """Return the survival curve exp(-H) on the hazard's own grid."""
    return SurvivalCurve(chf.times, np.exp(-np.asarray(chf.hazard)))


def curve_median(curve):
    """Return the first step time where S <= 0.5, or None."""
    below = np.nonzero(curve.survival <= 0.5)[0]
    if not len(below):
        return None
    return float(curve.times[below[0]])


def group_counts(labels, order=None):
    """Return an ordered mapping of group label to size."""
    counts = OrderedDict()
    for label in (order or sorted(set(labels), key=str)):
        counts[label] = 0
    for label in labels:
        if label not in counts:
            counts[label] = 0
        counts[label] += 1
    return counts


def curve_to_frame(curve, group=None, eval_times=None):
    """Return a frame of the curve on its step times plus eval_times.

    Rows at requested times that are not step times carry the step values
    in force at that time and zero events; at_risk there is left empty.
    """
    grid = np.asarray(curve.times, dtype=float)
    if eval_times is not None and len(eval_times):
        grid = np.union1d(grid, np.asarray(eval_times, dtype=float))
    on_step = np.isin(grid, curve.times)
    step_index = np.searchsorted(curve.times, grid)
    frame = pd.DataFrame(OrderedDict([
        ('time', grid),
        ('at_risk', [float(curve.at_risk[k]) if hit and curve.at_risk is not None else np.nan
                     for k, hit in zip(step_index, on_step)]),
        ('events', [float(curve.events[k]) if hit and curve.events is not None else 0.0
                    for k, hit in zip(step_index, on_step)]),
        ('survival', curve.step_values(curve.survival, grid, before=1.0)),
        ('ci_lower', curve.step_values(curve.ci_lower, grid, before=1.0) if curve.has_ci else np.nan),
        ('ci_upper', curve.step_values(curve.ci_upper, grid, before=1.0) if curve.has_ci else np.nan),
        ('group', group if group is not None else 'all'),
    ]))
    return frame[CURVE_COLUMNS]


def curves_to_frame(curves, eval_times=None):
    """Stack several labelled curves into one frame."""
    frames = [curve_to_frame(curve, group=str(label), eval_times=eval_times)
              for label, curve in curves.items()]
    if not frames:
        return pd.DataFrame(columns=CURVE_COLUMNS)
    return pd.concat(frames, ignore_index=True)


def hazard_on_grid(chf, grid):
    """Return H evaluated on grid as a CumulativeHazard."""
    grid = np.asarray(grid, dtype=float)
    return CumulativeHazard(grid, chf.evaluate(grid) if len(grid) else [])
