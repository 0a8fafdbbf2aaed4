#!/usr/bin/env python

##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################

""" Command line driver

"""
import contextlib
import io
import json
import os

import numpy as np
import pandas as pd
from scipy import stats

from SurvivalLib.tests.SurvTestBase import SurvTestBase
from SurvivalLib.lib.libexec.SurvCommand import (EXIT_DATA, EXIT_NUMERIC, EXIT_OK, SurvCommand,
                                                 format_p, main)


class CommandTestBase(SurvTestBase):

    def afterSetUp(self):
        self.out = self.make_tempdir()
        self.config = self.data_path('config.yaml')

    def invoke(self, *args, **kwargs):
        """Run main() with captured stdout; return (status, stdout)."""
        out = kwargs.get('out', self.out)
        stream = io.StringIO()
        with contextlib.redirect_stdout(stream):
            status = main(['-q', '-c', self.config, '-o', out] + list(args))
        return status, stream.getvalue()

    def read(self, name, out=None):
        with open(os.path.join(out or self.out, name), 'rb') as handle:
            return handle.read()


class TestPipelineCommands(CommandTestBase):
    """preprocess through report on the fixture tables"""

    def test_full_run(self):
        for verb in ('preprocess', 'km', 'fit-cox', 'fit-rsf', 'evaluate', 'report'):
            status, _ = self.invoke(verb)
            self.assertEqual(status, EXIT_OK, verb)
        for name in ('dataset.tsv', 'preprocess_audit.json', 'correlation.csv', 'km_overall.csv',
                     'km_gender.csv', 'km_age.csv', 'km_gender.svg', 'km_groups.csv', 'cox_model.json',
                     'cox_summary.csv', 'rsf_model.json', 'rsf_summary.json', 'roc_cox.csv',
                     'roc_rsf.csv', 'evaluation.json', 'comparison.csv', 'report.txt'):
            self.assertTrue(os.path.isfile(os.path.join(self.out, name)), name)

        evaluation = json.loads(self.read('evaluation.json').decode('utf-8'))
        self.assertEqual(list(evaluation['models']), ['cox', 'rsf'])
        for entry in evaluation['models'].values():
            self.assertTrue(0.5 < entry['concordance']['c_index'] <= 1.0)
            self.assertTrue(0.0 <= entry['roc']['auc'] <= 1.0)

        summary = pd.read_csv(os.path.join(self.out, 'cox_summary.csv'))
        self.assertEqual(list(summary['feature'])[:2], ['PFI.time', 'days_to_new_tumor_event'])
        np.testing.assert_allclose(summary['hazard_ratio'], np.exp(summary['coef']))

        groups = pd.read_csv(os.path.join(self.out, 'km_groups.csv'), dtype={'group': str})
        self.assertEqual(list(groups['group']), ['all', 'FEMALE', 'MALE', '0-60', '61-100'])
        overall = groups.iloc[0]
        self.assertEqual(overall['n'], groups[groups['stratification'] == 'gender']['n'].sum())

        report = self.read('report.txt').decode('utf-8')
        self.assertIn('Model comparison', report)
        self.assertIn('gender_encoded', report)
        self.assertTrue(self.read('km_gender.svg').startswith(b'<?xml'))

    def test_rerun_is_byte_identical(self):
        other = self.make_tempdir()
        for out in (self.out, other):
            self.assertEqual(self.invoke('preprocess', out=out)[0], EXIT_OK)
            self.assertEqual(self.invoke('fit-rsf', '--trees', '10', out=out)[0], EXIT_OK)
        self.assertEqual(self.read('dataset.tsv'), self.read('dataset.tsv', other))
        self.assertEqual(self.read('rsf_model.json'), self.read('rsf_model.json', other))

    def test_worker_count_gives_identical_model(self):
        other = self.make_tempdir()
        for out, jobs in ((self.out, '1'), (other, '2')):
            self.assertEqual(self.invoke('preprocess', out=out)[0], EXIT_OK)
            self.assertEqual(self.invoke('fit-rsf', '--trees', '10', '--jobs', jobs, out=out)[0], EXIT_OK)
        self.assertEqual(self.read('rsf_model.json'), self.read('rsf_model.json', other))

    def test_audit_echoes_run(self):
        self.invoke('preprocess', '--seed', '3')
        audit = json.loads(self.read('preprocess_audit.json').decode('utf-8'))
        self.assertEqual(audit['run']['seed'], 3)
        self.assertEqual(audit['split']['seed'], 3)
        self.assertEqual(audit['imputation']['fit_on'], 'train')

    def test_compat_imputation_flag(self):
        self.invoke('preprocess', '--compat-impute-full')
        audit = json.loads(self.read('preprocess_audit.json').decode('utf-8'))
        self.assertEqual(audit['imputation']['fit_on'], 'full')

    def test_cox_intervals_use_cox_confidence(self):
        with open(self.config) as handle:
            text = handle.read()
        text = text.replace('survival.tsv', self.data_path('survival.tsv'))
        text = text.replace('clinicalMatrix.json', self.data_path('clinicalMatrix.json'))
        self.config = os.path.join(self.out, 'levels.yaml')
        with open(self.config, 'w') as handle:
            handle.write(text + '\nkm:\n  confidence_level: 0.5\ncox:\n  confidence_level: 0.9\n')
        self.assertEqual(self.invoke('preprocess')[0], EXIT_OK)
        self.assertEqual(self.invoke('fit-cox')[0], EXIT_OK)
        summary = pd.read_csv(os.path.join(self.out, 'cox_summary.csv'))
        np.testing.assert_allclose(summary['ci_high_coef'] - summary['coef'],
                                   stats.norm.ppf(0.95) * summary['se'], rtol=1e-6)

    def test_ablation(self):
        self.invoke('preprocess')
        status, _ = self.invoke('fit-cox', '--exclude', 'PFI.time')
        self.assertEqual(status, EXIT_OK)
        summary = pd.read_csv(os.path.join(self.out, 'cox_summary.csv'))
        self.assertNotIn('PFI.time', list(summary['feature']))


class TestCommandErrors(CommandTestBase):
    """Exit statuses"""

    def test_unknown_verb(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                main(['frobnicate'])
        self.assertEqual(context.exception.code, 2)

    def test_two_verbs(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                main(['km', 'report'])
        self.assertEqual(context.exception.code, 2)

    def test_missing_artifact(self):
        status, _ = self.invoke('evaluate')
        self.assertEqual(status, EXIT_DATA)

    def test_missing_config(self):
        status = main(['-q', '-c', os.path.join(self.out, 'absent.yaml'), 'preprocess'])
        self.assertEqual(status, EXIT_DATA)

    def test_unknown_feature(self):
        self.invoke('preprocess')
        status, _ = self.invoke('fit-cox', '--features', 'PFI.time,no_such_column')
        self.assertEqual(status, EXIT_DATA)

    def test_unwritable_output(self):
        blocker = os.path.join(self.out, 'blocker')
        with open(blocker, 'w') as handle:
            handle.write('not a directory\n')
        status, _ = self.invoke('preprocess', out=os.path.join(blocker, 'sub'))
        self.assertEqual(status, EXIT_DATA)

    def test_constant_covariate(self):
        rows = ['sample_id\ttime\tevent\tx\tflat']
        for i in range(20):
            rows.append('s{:02d}\t{}\t{}\t{}\t1'.format(i, 10 + i, i % 2, (i * 7) % 11))
        with open(os.path.join(self.out, 'dataset.tsv'), 'w') as handle:
            handle.write('\n'.join(rows) + '\n')
        status, _ = self.invoke('fit-cox', '--features', 'x,flat')
        self.assertEqual(status, EXIT_NUMERIC)


class TestCommandOptions(SurvTestBase):
    """Option parsing and config overrides"""

    def test_overrides(self):
        command = SurvCommand(['-c', self.data_path('config.yaml'), '-s', '9', '--trees', '3',
                               '--horizon', '500', '--exclude', 'days_to_new_tumor_event', 'fit-rsf'])
        command.parseOptions()
        config = command.buildConfig()
        self.assertEqual(command.verb, 'fit-rsf')
        self.assertEqual((config.seed, config.preprocess.seed, config.rsf.seed), (9, 9, 9))
        self.assertEqual(config.rsf.n_trees, 3)
        self.assertEqual(config.horizon, 500.0)
        self.assertEqual(config.exclude, ['days_to_new_tumor_event'])
        self.assertTrue(os.path.isabs(config.inputs.survival))

    def test_format_p(self):
        self.assertEqual(format_p(0.001), '<0.005')
        self.assertEqual(format_p(0.31), '0.31')


def test_suite():
    """Return test suite for this module."""
    from unittest import TestSuite, defaultTestLoader
    suite = TestSuite()
    for case in (TestPipelineCommands, TestCommandErrors, TestCommandOptions):
        suite.addTest(defaultTestLoader.loadTestsFromTestCase(case))
    return suite
test_suite.__test__ = False

if __name__ == "__main__":
    from zope.testrunner.runner import Runner
    runner = Runner(found_suites=[test_suite()])
    runner.run()
