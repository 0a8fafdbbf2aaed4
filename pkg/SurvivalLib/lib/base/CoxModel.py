##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
import json
from collections import OrderedDict

import numpy as np

from ..exceptions import DataError
from .CumulativeHazard import CumulativeHazard

FORMAT = 'survivallib.cox-model'
FORMAT_VERSION = 1


class CoxModel(object):
    """Fitted proportional hazards model.

    beta and covariance are in the raw units of the training covariates;
    baseline is the Breslow cumulative hazard of the reference subject x = 0.
    """

    __slots__ = ('feature_names', 'beta', 'covariance', 'log_likelihood',
                 'null_log_likelihood', 'iterations', 'tie_method', 'baseline',
                 'n_samples', 'n_events')

    def __init__(self, feature_names, beta, covariance, log_likelihood, iterations,
                 tie_method='efron', baseline=None, null_log_likelihood=None,
                 n_samples=None, n_events=None):
        feature_names = tuple(str(x) for x in feature_names)
        beta = np.array(beta, dtype=float).reshape(-1)
        covariance = np.array(covariance, dtype=float).reshape(len(beta), len(beta))
        if len(beta) != len(feature_names):
            raise ValueError('{} coefficients for {} features'.format(len(beta), len(feature_names)))
        if not np.allclose(covariance, covariance.T, rtol=1e-8, atol=1e-12):
            raise ValueError('covariance must be symmetric')
        beta.setflags(write=False)
        covariance.setflags(write=False)
        values = dict(
            feature_names=feature_names, beta=beta, covariance=covariance,
            log_likelihood=float(log_likelihood), iterations=int(iterations),
            tie_method=str(tie_method), baseline=baseline,
            null_log_likelihood=None if null_log_likelihood is None else float(null_log_likelihood),
            n_samples=n_samples, n_events=n_events)
        for name, value in values.items():
            object.__setattr__(self, name, value)

    def __setattr__(self, name, value):
        raise AttributeError('CoxModel is immutable')

    def __repr__(self):
        return 'CoxModel(p={}, loglik={:.4f}, iterations={})'.format(
            self.p, self.log_likelihood, self.iterations)

    @property
    def p(self):
        return len(self.beta)

    @property
    def standard_errors(self):
        return np.sqrt(np.clip(np.diag(self.covariance), 0.0, None))

    def with_baseline(self, baseline):
        """Return a copy carrying baseline."""
        return CoxModel(self.feature_names, self.beta, self.covariance, self.log_likelihood,
                        self.iterations, self.tie_method, baseline, self.null_log_likelihood,
                        self.n_samples, self.n_events)

    def to_dict(self):
        data = OrderedDict([
            ('format', FORMAT),
            ('version', FORMAT_VERSION),
            ('feature_names', list(self.feature_names)),
            ('beta', self.beta.tolist()),
            ('covariance', self.covariance.tolist()),
            ('log_likelihood', self.log_likelihood),
            ('null_log_likelihood', self.null_log_likelihood),
            ('iterations', self.iterations),
            ('tie_method', self.tie_method),
            ('n_samples', self.n_samples),
            ('n_events', self.n_events),
            ('baseline', None),
        ])
        if self.baseline is not None:
            data['baseline'] = OrderedDict([('times', self.baseline.times.tolist()),
                                            ('hazard', self.baseline.hazard.tolist())])
        return data

    @classmethod
    def from_dict(cls, data):
        if data.get('format') != FORMAT:
            raise DataError('not a Cox model document (format {!r})'.format(data.get('format')))
        if data.get('version') != FORMAT_VERSION:
            raise DataError('unsupported Cox model version {!r}'.format(data.get('version')))
        baseline = data.get('baseline')
        if baseline is not None:
            baseline = CumulativeHazard(baseline['times'], baseline['hazard'])
        return cls(data['feature_names'], data['beta'], data['covariance'],
                   data['log_likelihood'], data['iterations'], data.get('tie_method', 'efron'),
                   baseline, data.get('null_log_likelihood'), data.get('n_samples'),
                   data.get('n_events'))

    def save(self, path):
        with open(path, 'w') as handle:
            json.dump(self.to_dict(), handle, indent=2)
            handle.write('\n')

    @classmethod
    def load(cls, path):
        try:
            with open(path) as handle:
                return cls.from_dict(json.load(handle))
        except (IOError, OSError, ValueError, KeyError) as e:
            raise DataError('unable to load Cox model {}: {}'.format(path, e))
