#!/usr/bin/env python

##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################

""" Core types, option specs and curve helpers

"""
import math

import numpy as np

from SurvivalLib.tests.SurvTestBase import SurvTestBase
from SurvivalLib.lib.base.CumulativeHazard import CumulativeHazard
from SurvivalLib.lib.base.Dataset import Dataset
from SurvivalLib.lib.base.SurvivalCurve import SurvivalCurve
from SurvivalLib.lib.base.SurvivalSample import SurvivalSample
from SurvivalLib.lib.base.types import CiMethod, TieMethod, PositiveInt, OpenUnitFloat
from SurvivalLib.lib.functions import (chf_eval, chf_to_survival, curve_eval, curve_median,
                                       curve_to_frame, group_counts)
from SurvivalLib.lib.km import km_fit
from SurvivalLib.lib.spec.CoxFitOptions import CoxFitOptions
from SurvivalLib.lib.spec.RsfOptions import RsfOptions
from SurvivalLib.lib.spec.RunConfig import RunConfig


class TestSamplesAndDatasets(SurvTestBase):
    """SurvivalSample and Dataset contracts"""

    def test_sample_rejects_negative_time(self):
        with self.assertRaises(ValueError):
            SurvivalSample(-1.0, 1, [0.0])

    def test_sample_rejects_infinite_time(self):
        with self.assertRaises(ValueError):
            SurvivalSample(float('inf'), 0, [])

    def test_dataset_requires_common_width(self):
        samples = [SurvivalSample(1, 1, [1.0, 2.0]), SurvivalSample(2, 0, [1.0])]
        with self.assertRaises(ValueError):
            Dataset(['a', 'b'], samples)

    def test_dataset_requires_unique_names(self):
        with self.assertRaises(ValueError):
            Dataset(['a', 'a'], [SurvivalSample(1, 1, [1.0, 2.0])])

    def test_dataset_is_read_only(self):
        d = Dataset.from_arrays([1, 2], [1, 0], [[1.0], [2.0]], ['x'], ['a', 'b'])
        with self.assertRaises(ValueError):
            d.times[0] = 5.0
        with self.assertRaises(AttributeError):
            d.foo = 1
        self.assertEqual((d.n, d.p), (2, 1))

    def test_subset_and_select(self):
        d = Dataset.from_arrays([1, 2, 3], [1, 0, 1], [[1, 10], [2, 20], [3, 30]], ['x', 'y'],
                                ['c', 'a', 'b'])
        sub = d.subset([2, 0])
        self.assertEqual(sub.sample_ids, ['b', 'c'])
        self.assertEqual(d.select_features(['y']).feature_names, ['y'])
        self.assertEqual(list(d.column('y')), [10.0, 20.0, 30.0])
        self.assertEqual(d.canonical_order(), [1, 2, 0])


class TestCurves(SurvTestBase):
    """SurvivalCurve, CumulativeHazard and helpers"""

    def test_curve_eval_before_and_at_step(self):
        curve = SurvivalCurve([2.0], [0.5])
        self.assertEqual(curve_eval(curve, 1.0), 1.0)
        self.assertEqual(curve_eval(curve, 2.0), 0.5)

    def test_curve_eval_from_km(self):
        curve = km_fit([1, 2, 3, 4], [1, 0, 1, 1])
        self.assertAlmostEqual(curve_eval(curve, 3.0), 0.375, places=12)

    def test_curve_eval_negative_time(self):
        with self.assertRaises(ValueError):
            curve_eval(SurvivalCurve([2.0], [0.5]), -1.0)

    def test_curve_rejects_increasing_survival(self):
        with self.assertRaises(ValueError):
            SurvivalCurve([1.0, 2.0], [0.4, 0.6])

    def test_curve_rejects_bounds_outside(self):
        with self.assertRaises(ValueError):
            SurvivalCurve([1.0], [0.5], ci_lower=[0.6], ci_upper=[0.7])

    def test_chf_to_survival(self):
        self.assertEqual(list(chf_to_survival(CumulativeHazard([1.0], [0.0])).survival), [1.0])
        half = chf_to_survival(CumulativeHazard([1.0], [math.log(2)]))
        self.assertAlmostEqual(half.survival[0], 0.5, places=12)
        curve = chf_to_survival(CumulativeHazard([1.0, 2.0], [0.5, 1.5]))
        self.assertAlmostEqual(curve.survival[0], 0.6065, places=4)
        self.assertAlmostEqual(curve.survival[1], 0.2231, places=4)

    def test_chf_to_survival_is_antitone(self):
        low = chf_to_survival(CumulativeHazard([1.0, 2.0], [0.1, 0.2]))
        high = chf_to_survival(CumulativeHazard([1.0, 2.0], [0.3, 0.9]))
        self.assertTrue(np.all(high.survival < low.survival))

    def test_chf_eval(self):
        chf = CumulativeHazard([1.0, 3.0], [0.5, 1.5])
        self.assertEqual(chf_eval(chf, 0.5), 0.0)
        self.assertEqual(chf_eval(chf, 2.0), 0.5)
        self.assertEqual(chf_eval(chf, 3.0), 1.5)

    def test_hazard_must_not_decrease(self):
        with self.assertRaises(ValueError):
            CumulativeHazard([1.0, 2.0], [1.0, 0.5])

    def test_curve_median(self):
        self.assertEqual(curve_median(km_fit([1, 2, 3, 4], [1, 0, 1, 1])), 3.0)
        self.assertIsNone(curve_median(SurvivalCurve([1.0], [0.9])))

    def test_curve_to_frame_union_grid(self):
        curve = km_fit([1, 2, 3, 4], [1, 0, 1, 1])
        frame = curve_to_frame(curve, group='g', eval_times=[2.5])
        self.assertEqual(list(frame['time']), [1.0, 2.5, 3.0, 4.0])
        self.assertEqual(list(frame['survival'])[1], 0.75)
        self.assertEqual(list(frame['events']), [1.0, 0.0, 1.0, 1.0])
        self.assertEqual(set(frame['group']), set(['g']))

    def test_group_counts(self):
        counts = group_counts(['M', 'F', 'M'], order=['M', 'F'])
        self.assertEqual(list(counts.items()), [('M', 2), ('F', 1)])


class TestOptionSpecs(SurvTestBase):
    """Validated option objects"""

    def test_choice_alias(self):
        self.assertEqual(CiMethod('loglog'), 'log-log')
        with self.assertRaises(ValueError):
            TieMethod('exact')

    def test_scalar_types(self):
        self.assertEqual(PositiveInt('3'), 3)
        with self.assertRaises(ValueError):
            PositiveInt(0)
        with self.assertRaises(ValueError):
            PositiveInt(2.5)
        with self.assertRaises(ValueError):
            OpenUnitFloat(1.0)

    def test_unknown_parameter(self):
        with self.assertRaises(ValueError) as context:
            CoxFitOptions(tie='efron')
        self.assertIn("Unrecognized parameter 'tie'", str(context.exception))

    def test_defaults_echoed(self):
        data = CoxFitOptions().to_dict()
        self.assertEqual(data['tie_method'], 'efron')
        self.assertEqual(data['max_iterations'], 100)
        self.assertEqual(data['confidence_level'], 0.95)
        with self.assertRaises(ValueError):
            CoxFitOptions(confidence_level=1.5)

    def test_mtry(self):
        self.assertEqual(RsfOptions().effective_mtry(7), 3)
        with self.assertRaises(ValueError):
            RsfOptions(mtry=8).effective_mtry(7)

    def test_run_seed_propagates(self):
        config = RunConfig.from_dict({'seed': 5})
        self.assertEqual(config.preprocess.seed, 5)
        self.assertEqual(config.rsf.seed, 5)

    def test_model_features_with_exclusion(self):
        config = RunConfig.from_dict({'features': ['a', 'b', 'c'], 'exclude': ['b']})
        self.assertEqual(config.model_features(['a', 'b', 'c', 'd']), ['a', 'c'])
        with self.assertRaises(ValueError):
            config.model_features(['a', 'b'])


def test_suite():
    """Return test suite for this module."""
    from unittest import TestSuite, defaultTestLoader
    suite = TestSuite()
    for case in (TestSamplesAndDatasets, TestCurves, TestOptionSpecs):
        suite.addTest(defaultTestLoader.loadTestsFromTestCase(case))
    return suite
test_suite.__test__ = False

if __name__ == "__main__":
    from zope.testrunner.runner import Runner
    runner = Runner(found_suites=[test_suite()])
    runner.run()
