##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
import math
from collections import namedtuple


class SurvivalSample(namedtuple('SurvivalSample', ['time', 'event', 'covariates', 'sample_id'])):
    """One subject: follow-up time in days, event flag, covariate vector.

    event is True when death was observed and False when the subject is
    right-censored at time.
    """
    __slots__ = ()

    def __new__(cls, time, event, covariates=(), sample_id=None):
        time = float(time)
        if not math.isfinite(time) or time < 0:
            raise ValueError('sample time must be finite and non-negative, got {}'.format(time))
        if event not in (0, 1, True, False):
            raise ValueError('sample event must be 0/1 or boolean, got {!r}'.format(event))
        covariates = tuple(float(x) for x in covariates)
        if sample_id is not None:
            sample_id = str(sample_id)
        return super(SurvivalSample, cls).__new__(cls, time, bool(event), covariates, sample_id)

    @property
    def p(self):
        return len(self.covariates)
