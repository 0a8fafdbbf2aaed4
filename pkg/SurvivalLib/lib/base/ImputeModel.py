##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
from collections import OrderedDict


class ImputeModel(object):
    """Per-column medians fitted on a partition of a table."""

    __slots__ = ('medians', 'fit_rows')

    def __init__(self, medians, fit_rows=None):
        object.__setattr__(self, 'medians', OrderedDict((str(k), float(v)) for k, v in medians.items()))
        object.__setattr__(self, 'fit_rows', fit_rows)

    def __setattr__(self, name, value):
        raise AttributeError('ImputeModel is immutable')

    def __repr__(self):
        return 'ImputeModel({})'.format(dict(self.medians))

    @property
    def columns(self):
        return list(self.medians)

    def covers(self, columns):
        return all(c in self.medians for c in columns)
