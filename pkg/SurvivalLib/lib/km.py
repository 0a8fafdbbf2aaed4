##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
"""Kaplan-Meier product-limit estimation."""
from collections import OrderedDict

import numpy as np
from scipy import stats

from .base.SurvivalCurve import SurvivalCurve
from .exceptions import DataError
from .functions import group_counts
from .helpers.SurvivalLibLog import SURVLOG
from .spec.KmOptions import KmOptions

LOG = SURVLOG.add_log('km')


def event_tallies(times, events):
    """Return (event_times, at_risk, deaths) at every distinct event time.

    Deaths precede censorings recorded at the same time, so a subject
    censored at t_i is still at risk at t_i.
    """
    times = np.asarray(times, dtype=float)
    events = np.asarray(events, dtype=bool)
    if times.ndim != 1 or len(times) != len(events):
        raise ValueError('times and events must be vectors of equal length')
    if not len(times):
        raise ValueError('cannot estimate a survival curve from no samples')
    if np.any(~np.isfinite(times)) or np.any(times < 0):
        raise ValueError('times must be finite and non-negative')
    event_times, deaths = np.unique(times[events], return_counts=True)
    ordered = np.sort(times)
    at_risk = len(times) - np.searchsorted(ordered, event_times, side='left')
    return event_times, at_risk.astype(float), deaths.astype(float)


def km_fit(times, events, options=None):
    """Return the product-limit SurvivalCurve with Greenwood bounds."""
    options = options or KmOptions()
    event_times, at_risk, deaths = event_tallies(times, events)
    survival = np.cumprod(1.0 - deaths / at_risk)
    survival = np.where(survival < 0, 0.0, survival)

    with np.errstate(divide='ignore', invalid='ignore'):
        greenwood = np.cumsum(deaths / (at_risk * (at_risk - deaths)))
    degenerate = (survival <= 0) | ~np.isfinite(greenwood)
    z = stats.norm.ppf(0.5 + options.confidence_level / 2.0)

    with np.errstate(divide='ignore', invalid='ignore'):
        if options.ci_method == 'log-log':
            log_s = np.log(survival)
            spread = z * np.sqrt(greenwood) / np.abs(log_s)
            lower = survival ** np.exp(spread)
            upper = survival ** np.exp(-spread)
        else:
            spread = z * survival * np.sqrt(greenwood)
            lower = survival - spread
            upper = survival + spread
    lower = np.where(degenerate, 0.0, np.clip(lower, 0.0, 1.0))
    upper = np.where(degenerate, 0.0, np.clip(upper, 0.0, 1.0))
    # rounding can leave a bound a hair on the wrong side of S
    lower = np.minimum(lower, survival)
    upper = np.where(degenerate, upper, np.maximum(upper, survival))

    if degenerate.any():
        LOG.debug('Degenerate confidence bounds at {} step(s)'.format(int(degenerate.sum())))
    return SurvivalCurve(event_times, survival, lower, upper, at_risk, deaths, degenerate)


def km_stratified(d, group_labels, options=None, order=None):
    """Return an ordered mapping of group label to its own product-limit curve.

    group_labels holds one label per sample of d. Groups named in order but
    absent from the labels are an error.
    """
    labels = list(group_labels)
    if len(labels) != d.n:
        raise ValueError('expected {} group labels, got {}'.format(d.n, len(labels)))
    if any(x is None for x in labels):
        raise DataError('every sample needs a group label')
    counts = group_counts(labels, order)
    curves = OrderedDict()
    for label, size in counts.items():
        if not size:
            raise DataError('group {} is empty'.format(label))
        members = np.array([x == label for x in labels], dtype=bool)
        curves[label] = km_fit(d.times[members], d.events[members], options)
        LOG.debug('Group {}: {} samples, {} events'.format(label, size, int(d.events[members].sum())))
    return curves
