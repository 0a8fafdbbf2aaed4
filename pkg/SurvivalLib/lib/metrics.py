##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
"""Censoring-aware discrimination metrics.

Pair usability for the concordance index: (i, j) is usable when
T_i < T_j and subject i had the event. Pairs whose shorter time is censored
and pairs of tied times are not usable. Risk ties count one half.

Horizon ROC labels: positive when the event happened at or before the
horizon, negative when the observed time exceeds it, excluded when
censored at or before it.
"""
from collections import OrderedDict, namedtuple

import numpy as np
import pandas as pd
from scipy import stats

from .exceptions import DataError
from .helpers.SurvivalLibLog import SURVLOG

LOG = SURVLOG.add_log('metrics')

PAIR_RULE = 'usable iff T_i < T_j and event_i; risk ties count 0.5; tied times excluded'
HORIZON_RULE = 'positive: event and T <= h; negative: T > h; excluded: censored and T <= h'

BLOCK = 1024


class ConcordanceResult(namedtuple('ConcordanceResult', [
        'c_index', 'concordant', 'discordant', 'tied_risk', 'usable_pairs'])):
    """Harrell concordance with its pair tallies."""

    __slots__ = ()

    def to_dict(self):
        data = OrderedDict(zip(self._fields, self))
        data['pair_rule'] = PAIR_RULE
        return data


class RocResult(namedtuple('RocResult', [
        'horizon', 'thresholds', 'fpr', 'tpr', 'auc', 'n_positive', 'n_negative', 'n_excluded'])):
    """ROC curve at a fixed horizon; the first point sits at threshold +inf."""

    __slots__ = ()

    @property
    def points(self):
        return list(zip(self.fpr.tolist(), self.tpr.tolist()))

    def to_frame(self):
        return pd.DataFrame(OrderedDict([
            ('threshold', self.thresholds), ('fpr', self.fpr), ('tpr', self.tpr)]))

    def to_dict(self):
        return OrderedDict([
            ('horizon', float(self.horizon)),
            ('auc', float(self.auc)),
            ('n_positive', int(self.n_positive)),
            ('n_negative', int(self.n_negative)),
            ('n_excluded', int(self.n_excluded)),
            ('labeling', HORIZON_RULE),
        ])


class EvaluationReport(object):
    """Per-model test metrics collected by the evaluate command."""

    def __init__(self, horizon):
        self.horizon = float(horizon)
        self.models = OrderedDict()

    def add(self, name, concordance, roc, **extra):
        entry = OrderedDict([('concordance', concordance), ('roc', roc)])
        entry.update(extra)
        self.models[name] = entry

    def comparison_frame(self):
        rows = []
        for name, entry in self.models.items():
            rows.append(OrderedDict([
                ('model', name),
                ('c_index', entry['concordance'].c_index),
                ('auc', entry['roc'].auc),
                ('usable_pairs', entry['concordance'].usable_pairs),
                ('n_positive', entry['roc'].n_positive),
                ('n_negative', entry['roc'].n_negative),
                ('n_excluded', entry['roc'].n_excluded),
            ]))
        return pd.DataFrame(rows)

    def to_dict(self):
        models = OrderedDict()
        for name, entry in self.models.items():
            item = OrderedDict()
            for key, value in entry.items():
                item[key] = value.to_dict() if hasattr(value, 'to_dict') else value
            models[name] = item
        return OrderedDict([('horizon', self.horizon), ('models', models)])


def _check_lengths(times, events, risks):
    times = np.asarray(times, dtype=float)
    events = np.asarray(events, dtype=bool)
    risks = np.asarray(risks, dtype=float)
    if not (times.ndim == events.ndim == risks.ndim == 1):
        raise ValueError('times, events and risks must be vectors')
    if not (len(times) == len(events) == len(risks)):
        raise ValueError('times, events and risks differ in length ({}, {}, {})'.format(
            len(times), len(events), len(risks)))
    if np.any(np.isnan(risks)):
        raise ValueError('risk scores must not be NaN')
    return times, events, risks


def concordance_index(times, events, risks):
    """Return Harrell's concordance of risks against observed survival."""
    times, events, risks = _check_lengths(times, events, risks)
    if len(times) < 2:
        raise ValueError('the concordance index needs at least 2 samples')
    concordant = discordant = tied = 0
    shorter = np.nonzero(events)[0]
    for start in range(0, len(shorter), BLOCK):
        rows = shorter[start:start + BLOCK]
        usable = times[rows, None] < times[None, :]
        higher = risks[rows, None] > risks[None, :]
        lower = risks[rows, None] < risks[None, :]
        concordant += int(np.sum(usable & higher))
        discordant += int(np.sum(usable & lower))
        tied += int(np.sum(usable & ~higher & ~lower))
    usable_pairs = concordant + discordant + tied
    if not usable_pairs:
        raise DataError('no usable pairs for the concordance index')
    c_index = (concordant + 0.5 * tied) / float(usable_pairs)
    return ConcordanceResult(c_index, concordant, discordant, tied, usable_pairs)


def roc_auc_rank(positives, negatives):
    """Return P(risk_pos > risk_neg) + 0.5 P(tie) from average ranks."""
    positives = np.asarray(positives, dtype=float)
    negatives = np.asarray(negatives, dtype=float)
    if not len(positives) or not len(negatives):
        raise DataError('AUC needs at least one positive and one negative')
    ranks = stats.rankdata(np.concatenate([positives, negatives]), method='average')
    n_pos, n_neg = len(positives), len(negatives)
    return float((ranks[:n_pos].sum() - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg))


def horizon_labels(times, events, horizon):
    """Return (positive mask, negative mask) at horizon."""
    times = np.asarray(times, dtype=float)
    events = np.asarray(events, dtype=bool)
    positive = events & (times <= horizon)
    negative = times > horizon
    return positive, negative


def roc_at_horizon(times, events, risks, horizon=1000.0):
    """Return the ROC curve of risks for the outcome 'event by horizon'."""
    times, events, risks = _check_lengths(times, events, risks)
    if not horizon > 0:
        raise ValueError('horizon must be positive, got {}'.format(horizon))
    positive, negative = horizon_labels(times, events, horizon)
    n_pos, n_neg = int(positive.sum()), int(negative.sum())
    excluded = len(times) - n_pos - n_neg
    if not n_pos or not n_neg:
        raise DataError('horizon {} leaves {} positive and {} negative samples'.format(
            horizon, n_pos, n_neg))
    if excluded:
        LOG.debug('{} samples censored before horizon {} excluded from ROC'.format(excluded, horizon))

    kept = positive | negative
    scores, labels = risks[kept], positive[kept]
    thresholds = np.unique(scores)[::-1]
    # samples with risk >= threshold are called positive
    index = np.searchsorted(-thresholds, -scores)
    tp = np.cumsum(np.bincount(index, weights=labels.astype(float), minlength=len(thresholds)))
    fp = np.cumsum(np.bincount(index, weights=(~labels).astype(float), minlength=len(thresholds)))
    tpr = np.concatenate([[0.0], tp / n_pos])
    fpr = np.concatenate([[0.0], fp / n_neg])
    auc = float(np.sum(np.diff(fpr) * (tpr[1:] + tpr[:-1]) / 2.0))
    return RocResult(float(horizon), np.concatenate([[np.inf], thresholds]), fpr, tpr, auc,
                     n_pos, n_neg, excluded)
