##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
import numpy as np

from .SurvivalSample import SurvivalSample


def _frozen(array):
    array.setflags(write=False)
    return array


class Dataset(object):
    """Column-oriented set of survival samples sharing one feature list.

    Instances are immutable; the numpy views returned by times, events, X
    and sample_ids are read-only.
    """

    __slots__ = ('_feature_names', '_samples', '_times', '_events', '_X', '_ids')

    def __init__(self, feature_names, samples):
        feature_names = tuple(str(x) for x in feature_names)
        if len(set(feature_names)) != len(feature_names):
            raise ValueError('feature names must be unique: {}'.format(list(feature_names)))
        samples = tuple(samples)
        for i, sample in enumerate(samples):
            if not isinstance(sample, SurvivalSample):
                raise ValueError('item {} is not a SurvivalSample'.format(i))
            if len(sample.covariates) != len(feature_names):
                raise ValueError('sample {} has {} covariates, expected {}'.format(
                    sample.sample_id or i, len(sample.covariates), len(feature_names)))
        p = len(feature_names)
        object.__setattr__(self, '_feature_names', feature_names)
        object.__setattr__(self, '_samples', samples)
        object.__setattr__(self, '_times', _frozen(np.array([s.time for s in samples], dtype=float)))
        object.__setattr__(self, '_events', _frozen(np.array([s.event for s in samples], dtype=bool)))
        object.__setattr__(self, '_X', _frozen(
            np.array([s.covariates for s in samples], dtype=float).reshape(len(samples), p)))
        object.__setattr__(self, '_ids', tuple(
            s.sample_id if s.sample_id is not None else str(i) for i, s in enumerate(samples)))

    def __setattr__(self, name, value):
        raise AttributeError('Dataset is immutable')

    @classmethod
    def from_arrays(cls, times, events, X=None, feature_names=None, sample_ids=None):
        """Build a dataset from parallel arrays."""
        times = np.asarray(times, dtype=float)
        events = np.asarray(events)
        n = len(times)
        if len(events) != n:
            raise ValueError('times and events differ in length ({} vs {})'.format(n, len(events)))
        if X is None:
            X = np.zeros((n, 0))
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X.reshape(n, 1)
        if X.shape[0] != n:
            raise ValueError('covariate rows ({}) differ from sample count ({})'.format(X.shape[0], n))
        if feature_names is None:
            feature_names = ['x{}'.format(j + 1) for j in range(X.shape[1])]
        if sample_ids is None:
            sample_ids = [None] * n
        samples = [SurvivalSample(times[i], int(events[i]), X[i], sample_ids[i]) for i in range(n)]
        return cls(feature_names, samples)

    @property
    def feature_names(self):
        return list(self._feature_names)

    @property
    def samples(self):
        return self._samples

    @property
    def n(self):
        return len(self._samples)

    @property
    def p(self):
        return len(self._feature_names)

    @property
    def times(self):
        return self._times

    @property
    def events(self):
        return self._events

    @property
    def X(self):
        return self._X

    @property
    def sample_ids(self):
        return list(self._ids)

    def __len__(self):
        return self.n

    def __repr__(self):
        return 'Dataset(n={}, p={}, events={})'.format(self.n, self.p, int(self._events.sum()))

    def subset(self, indices):
        """Return a dataset of the samples at indices, in that order."""
        return Dataset(self._feature_names, [self._samples[i] for i in indices])

    def select_features(self, names):
        """Return a dataset restricted to the named features, in that order."""
        missing = [x for x in names if x not in self._feature_names]
        if missing:
            raise ValueError('unknown features: {}'.format(', '.join(missing)))
        columns = [self._feature_names.index(x) for x in names]
        samples = [SurvivalSample(s.time, s.event, [s.covariates[j] for j in columns], s.sample_id)
                   for s in self._samples]
        return Dataset(names, samples)

    def column(self, name):
        """Return the values of one feature."""
        if name not in self._feature_names:
            raise ValueError('unknown feature: {}'.format(name))
        return self._X[:, self._feature_names.index(name)]

    def canonical_order(self):
        """Return indices sorting samples by identifier (stable)."""
        return sorted(range(self.n), key=lambda i: self._ids[i])
