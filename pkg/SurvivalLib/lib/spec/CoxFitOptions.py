##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
from collections import OrderedDict

from ..base.types import OpenUnitFloat, TieMethod, PositiveFloat, PositiveInt
from .Spec import Spec


def non_negative_int(value):
    if isinstance(value, bool) or int(value) != value or int(value) < 0:
        raise ValueError('expected a non-negative integer, got {!r}'.format(value))
    return int(value)


class CoxFitOptions(Spec):
    """Newton-Raphson options for the Cox partial likelihood

        :param tie_method: efron or breslow
        :type tie_method: str
        :param tolerance: Convergence bound on the log partial likelihood change
        :type tolerance: float
        :param gradient_tolerance: Convergence bound on the scaled score
        :type gradient_tolerance: float
        :param max_iterations: Newton iterations before giving up
        :type max_iterations: int
        :param step_halving_max: Halvings tried when a step lowers the objective
        :type step_halving_max: int
        :param confidence_level: Coverage of the Wald intervals in the summary
        :type confidence_level: float
    """

    name = 'cox'
    PARAMS = OrderedDict([
        ('tie_method', {'type': TieMethod, 'default': 'efron'}),
        ('tolerance', {'type': PositiveFloat, 'default': 1e-9}),
        ('gradient_tolerance', {'type': PositiveFloat, 'default': 1e-6}),
        ('max_iterations', {'type': PositiveInt, 'default': 100}),
        ('step_halving_max', {'type': non_negative_int, 'default': 10}),
        ('confidence_level', {'type': OpenUnitFloat, 'default': 0.95}),
    ])
