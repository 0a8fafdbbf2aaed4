##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
import logging
import os
import sys
from collections import OrderedDict
from optparse import OptionGroup, OptionParser

import numpy as np
import pandas as pd

from .. import cox, ingest, km, metrics, rsf
from ..base.CoxModel import CoxModel
from ..base.SurvivalForest import SurvivalForest
from ..exceptions import DataError, NumericError
from ..functions import curve_median, curves_to_frame
from ..helpers.SurvivalLibLog import DEFAULTLOG, SurvivalLibLog
from ..helpers.utils import load_config, read_json, require_file, write_frame, write_json
from ..plots import render_step_svg
from ..spec.PreprocessSpec import string_list

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_NUMERIC = 4

DATASET_FILE = 'dataset.tsv'
AUDIT_FILE = 'preprocess_audit.json'
COX_MODEL_FILE = 'cox_model.json'
RSF_MODEL_FILE = 'rsf_model.json'
EVALUATION_FILE = 'evaluation.json'
KM_GROUPS_FILE = 'km_groups.csv'
REPORT_FILE = 'report.txt'

LOG = DEFAULTLOG


def _out(config, name):
    return os.path.join(config.output, name)


def _ensure_output(config):
    if not os.path.isdir(config.output):
        os.makedirs(config.output)


def _load_dataset(config):
    return ingest.read_dataset(require_file(_out(config, DATASET_FILE), 'preprocess'))


def _split(config, dataset):
    return ingest.stratified_split(dataset, config.preprocess.split_ratio, config.preprocess.seed)


def _code_label(value):
    value = float(value)
    return str(int(value)) if value.is_integer() else str(value)


def cmd_preprocess(config):
    """Run the preprocessing pipeline and write the dataset, audit and correlations."""
    inputs = config.inputs
    if not inputs.survival and not inputs.clinical:
        raise DataError('no input tables configured (inputs.survival / inputs.clinical)')
    spec = config.preprocess
    tables = []
    for name in ('survival', 'clinical'):
        path = getattr(inputs, name)
        if path:
            tables.append(ingest.load_table(path, getattr(inputs, name + '_format'),
                                            getattr(inputs, name + '_key'), spec.missing_values))
    pipeline = ingest.PreprocessPipeline(spec)
    dataset, train, test = pipeline.run(tables)
    _ensure_output(config)
    ingest.write_dataset(dataset, _out(config, DATASET_FILE))
    audit = pipeline.audit
    audit['run'] = config.to_dict()
    write_json(_out(config, AUDIT_FILE), audit)
    correlations = ingest.feature_correlations(dataset)
    correlations.index.name = 'column'
    correlations.reset_index().to_csv(_out(config, 'correlation.csv'), index=False, lineterminator='\n')

    censoring = audit['censoring']
    print('preprocess: {} samples, {} features, {} events ({:.1%} censored)'.format(
        dataset.n, dataset.p, censoring['events'], censoring['censored_fraction']))
    print('split: {} train / {} test'.format(train.n, test.n))
    return dataset


def _stratify(dataset, name, entry):
    column = entry['column']
    if column not in dataset.feature_names:
        raise DataError('stratification {}: column {} not in the dataset'.format(name, column))
    values = dataset.column(column)
    if 'edges' in entry:
        return ingest.bin_age_groups(values, entry['edges']), ingest.age_group_labels(entry['edges'])
    labels = []
    for value in values:
        code = _code_label(value)
        if code not in entry['labels']:
            raise DataError('stratification {}: value {} has no label'.format(name, code))
        labels.append(entry['labels'][code])
    return labels, list(OrderedDict.fromkeys(entry['labels'].values()))


def cmd_km(config):
    """Write overall and stratified product-limit curves plus group counts."""
    dataset = _load_dataset(config)
    _ensure_output(config)
    eval_times = [config.horizon]
    sets = OrderedDict([('overall', OrderedDict([('all', km.km_fit(dataset.times, dataset.events,
                                                                   config.km))]))])
    counts = [OrderedDict([('stratification', 'overall'), ('group', 'all'), ('n', dataset.n),
                           ('events', int(dataset.events.sum()))])]
    for name, entry in config.strata.items():
        labels, order = _stratify(dataset, name, entry)
        present = [x for x in order if x in set(labels)]
        for label in order:
            if label not in present:
                LOG.warning('stratification {}: group {} is empty'.format(name, label))
        curves = km.km_stratified(dataset, labels, config.km, order=present)
        sets[name] = curves
        for label in present:
            members = np.array([x == label for x in labels], dtype=bool)
            counts.append(OrderedDict([('stratification', name), ('group', label),
                                       ('n', int(members.sum())),
                                       ('events', int(dataset.events[members].sum()))]))

    for name, curves in sets.items():
        write_frame(_out(config, 'km_{}.csv'.format(name)), curves_to_frame(curves, eval_times))
        if config.svg:
            title = 'Kaplan-Meier' if name == 'overall' else 'Kaplan-Meier by {}'.format(name)
            with open(_out(config, 'km_{}.svg'.format(name)), 'w') as handle:
                handle.write(render_step_svg(curves, title=title))
    for row in counts:
        median = curve_median(sets[row['stratification']][row['group']])
        row['median_survival'] = median
    frame = pd.DataFrame(counts)
    write_frame(_out(config, KM_GROUPS_FILE), frame)
    for row in counts:
        print('km {stratification:>10} {group:>10}: n={n} events={events} median={median_survival}'.format(**row))
    return sets


def _model_data(config, dataset):
    features = config.model_features(dataset.feature_names)
    if not features:
        raise DataError('no model features left after exclusions')
    train, test = _split(config, dataset)
    return train.select_features(features), test.select_features(features)


def cox_summary_frame(rows):
    return pd.DataFrame([OrderedDict(row._asdict()) for row in rows])


def cmd_fit_cox(config):
    """Fit the Cox model on the training partition and write model and summary."""
    dataset = _load_dataset(config)
    train, _ = _model_data(config, dataset)
    model = cox.cox_fit(train, config.cox)
    _ensure_output(config)
    model.save(_out(config, COX_MODEL_FILE))
    rows = cox.cox_summary(model, config.cox.confidence_level)
    write_frame(_out(config, 'cox_summary.csv'), cox_summary_frame(rows))
    write_json(_out(config, 'cox_summary.json'), OrderedDict([
        ('n_samples', model.n_samples),
        ('n_events', model.n_events),
        ('iterations', model.iterations),
        ('log_likelihood', model.log_likelihood),
        ('null_log_likelihood', model.null_log_likelihood),
        ('tie_method', model.tie_method),
        ('options', config.cox.to_dict()),
        ('coefficients', [OrderedDict(row._asdict()) for row in rows]),
    ]))
    print('fit-cox: {} samples, {} events, {} iterations'.format(
        model.n_samples, model.n_events, model.iterations))
    print(format_cox_table(rows))
    return model


def cmd_fit_rsf(config):
    """Grow the forest on the training partition and write model and OOB summary."""
    dataset = _load_dataset(config)
    train, _ = _model_data(config, dataset)
    forest = rsf.rsf_fit(train, config.rsf)
    oob = rsf.rsf_oob_cindex(forest, train)
    _ensure_output(config)
    forest.save(_out(config, RSF_MODEL_FILE))
    write_json(_out(config, 'rsf_summary.json'), OrderedDict([
        ('n_samples', train.n),
        ('n_events', int(train.events.sum())),
        ('features', forest.feature_names),
        ('options', forest.options),
        ('mtry', config.rsf.effective_mtry(train.p)),
        ('time_grid_size', len(forest.time_grid)),
        ('oob_c_index', oob),
    ]))
    print('fit-rsf: {} trees on {} samples, OOB C-index {:.4f}'.format(forest.n_trees, train.n, oob))
    return forest


def cmd_evaluate(config):
    """Score both fitted models on the test partition."""
    dataset = _load_dataset(config)
    cox_model = CoxModel.load(require_file(_out(config, COX_MODEL_FILE), 'fit-cox'))
    forest = SurvivalForest.load(require_file(_out(config, RSF_MODEL_FILE), 'fit-rsf'))
    _, test = _split(config, dataset)
    report = metrics.EvaluationReport(config.horizon)
    risks = OrderedDict([
        ('cox', cox.cox_predict_risk(cox_model, test.select_features(list(cox_model.feature_names)).X)),
        ('rsf', rsf.rsf_risk_score(forest, test.select_features(forest.feature_names).X)),
    ])
    for name, risk in risks.items():
        concordance = metrics.concordance_index(test.times, test.events, risk)
        roc = metrics.roc_at_horizon(test.times, test.events, risk, config.horizon)
        report.add(name, concordance, roc, n_test=test.n)
        write_frame(_out(config, 'roc_{}.csv'.format(name)), roc.to_frame())
        print('evaluate {}: C-index {:.4f} ({} usable pairs), AUC@{:g} {:.4f}'.format(
            name, concordance.c_index, concordance.usable_pairs, config.horizon, roc.auc))
    write_json(_out(config, EVALUATION_FILE), report.to_dict())
    write_frame(_out(config, 'comparison.csv'), report.comparison_frame())
    return report


def format_p(value):
    return '<0.005' if value < 0.005 else '{:.2f}'.format(value)


def format_cox_table(rows):
    '''return a Table-1 style text table rounded to 2 decimals'''
    header = ['covariate', 'coef', 'exp(coef)', 'se(coef)', 'coef lower 95%', 'coef upper 95%',
              'exp(coef) lower 95%', 'exp(coef) upper 95%', 'z', 'p']
    body = []
    for row in rows:
        cells = [row.coef, row.hazard_ratio, row.se, row.ci_low_coef, row.ci_high_coef,
                 row.ci_low_hr, row.ci_high_hr, row.z]
        body.append([row.feature] + ['{:.2f}'.format(x) for x in cells] + [format_p(row.p_value)])
    widths = [max(len(line[k]) for line in [header] + body) for k in range(len(header))]
    lines = ['  '.join(cell.ljust(widths[k]) if k == 0 else cell.rjust(widths[k])
                       for k, cell in enumerate(line)) for line in [header] + body]
    return '\n'.join(lines)


def cmd_report(config):
    """Write a plain-text report of the Cox summary, model comparison and group counts."""
    cox_model = CoxModel.load(require_file(_out(config, COX_MODEL_FILE), 'fit-cox'))
    evaluation = read_json(_out(config, EVALUATION_FILE))
    sections = ['Cox proportional hazards (n={}, events={})'.format(
        cox_model.n_samples, cox_model.n_events)]
    sections.append(format_cox_table(cox.cox_summary(cox_model, config.cox.confidence_level)))
    sections.append('')
    sections.append('Model comparison on the test partition (horizon {:g} days)'.format(
        evaluation['horizon']))
    sections.append('{:<8}{:>10}{:>10}{:>14}{:>10}'.format('model', 'C-index', 'AUC', 'usable pairs',
                                                           'excluded'))
    for name, entry in evaluation['models'].items():
        sections.append('{:<8}{:>10.3f}{:>10.3f}{:>14}{:>10}'.format(
            name, entry['concordance']['c_index'], entry['roc']['auc'],
            entry['concordance']['usable_pairs'], entry['roc']['n_excluded']))
    rsf_summary = _out(config, 'rsf_summary.json')
    if os.path.isfile(rsf_summary):
        sections.append('Forest OOB C-index: {:.3f}'.format(read_json(rsf_summary)['oob_c_index']))
    groups = _out(config, KM_GROUPS_FILE)
    if os.path.isfile(groups):
        sections.append('')
        sections.append('Kaplan-Meier groups')
        frame = pd.read_csv(groups, keep_default_na=False, dtype={'group': str})
        for row in frame.itertuples(index=False):
            sections.append('  {:<10} {:<10} n={:<6} events={:<6} median={}'.format(
                row.stratification, row.group, row.n, row.events, row.median_survival or 'not reached'))
    text = '\n'.join(sections) + '\n'
    _ensure_output(config)
    with open(_out(config, REPORT_FILE), 'w') as handle:
        handle.write(text)
    sys.stdout.write(text)
    return text


class SurvCommand(object):
    '''SurvCommand'''
    LOG = DEFAULTLOG

    VERBS = OrderedDict([
        ('preprocess', cmd_preprocess),
        ('km', cmd_km),
        ('fit-cox', cmd_fit_cox),
        ('fit-rsf', cmd_fit_rsf),
        ('evaluate', cmd_evaluate),
        ('report', cmd_report),
    ])

    def __init__(self, args=None):
        from ...survivallib import __version__
        self.version = __version__
        self.inputArgs = sys.argv[1:] if args is None else list(args)
        self.options = None
        self.verb = None
        self.config = None
        self.buildOptions()

    def buildOptions(self):
        ''''''
        self.parser = OptionParser(usage='%prog [options] {}'.format('|'.join(self.VERBS)),
                                   version='%prog {}'.format(self.version))

        group = OptionGroup(self.parser, 'Run')
        group.add_option('-c', '--config', dest='config',
                         help='run configuration file (YAML or JSON)')
        group.add_option('-o', '--out', dest='out',
                         help='output directory')
        group.add_option('-s', '--seed', dest='seed', type='int',
                         help='seed for the split and the forest')
        group.add_option('--horizon', dest='horizon', type='float',
                         help='ROC horizon in days')
        self.parser.add_option_group(group)

        group = OptionGroup(self.parser, 'Features')
        group.add_option('--features', dest='features',
                         help='comma separated model features')
        group.add_option('--exclude', dest='exclude',
                         help='comma separated features to leave out (ablation)')
        group.add_option('--compat-impute-full', dest='impute_full', action='store_true',
                         default=False, help='fit imputation medians on every row before the split')
        self.parser.add_option_group(group)

        group = OptionGroup(self.parser, 'Forest')
        group.add_option('--trees', dest='trees', type='int',
                         help='number of trees')
        group.add_option('--jobs', dest='jobs', type='int',
                         help='parallel workers used to grow trees')
        self.parser.add_option_group(group)

        group = OptionGroup(self.parser, 'Logging')
        group.add_option('-v', '--verbose', dest='verbose', action='store_true', default=False,
                         help='log debug messages')
        group.add_option('-q', '--quiet', dest='quiet', action='store_true', default=False,
                         help='log errors only')
        self.parser.add_option_group(group)

    def parseOptions(self):
        """Parse the command line; usage errors exit with status 2."""
        (self.options, args) = self.parser.parse_args(args=self.inputArgs)
        if len(args) != 1:
            self.parser.error('exactly one command expected, one of: {}'.format(', '.join(self.VERBS)))
        if args[0] not in self.VERBS:
            self.parser.error('unknown command {}, expected one of: {}'.format(
                args[0], ', '.join(self.VERBS)))
        if self.options.verbose and self.options.quiet:
            self.parser.error('--verbose and --quiet are mutually exclusive')
        self.verb = args[0]

    def setupLogging(self):
        level = logging.INFO
        if self.options.verbose:
            level = logging.DEBUG
        elif self.options.quiet:
            level = logging.ERROR
        SurvivalLibLog.set_level(level)
        SurvivalLibLog.enable_log_stderr(self.LOG)

    def buildConfig(self):
        """Return the run configuration with command line overrides applied."""
        config = load_config(self.options.config)
        options = self.options
        changes = {}
        if options.seed is not None:
            changes['seed'] = options.seed
            changes['preprocess'] = config.preprocess.replace(seed=options.seed)
            changes['rsf'] = config.rsf.replace(seed=options.seed)
        if options.impute_full:
            preprocess = changes.get('preprocess', config.preprocess)
            changes['preprocess'] = preprocess.replace(impute_full_table=True)
        if options.trees is not None or options.jobs is not None:
            forest = changes.get('rsf', config.rsf)
            updates = {}
            if options.trees is not None:
                updates['n_trees'] = options.trees
            if options.jobs is not None:
                updates['n_jobs'] = options.jobs
            changes['rsf'] = forest.replace(**updates)
        if options.horizon is not None:
            changes['horizon'] = options.horizon
        if options.features is not None:
            changes['features'] = string_list(options.features)
        if options.exclude is not None:
            changes['exclude'] = string_list(options.exclude)
        if options.out is not None:
            changes['output'] = options.out
        return config.replace(**changes) if changes else config

    def run(self):
        """run the specified function"""
        self.config = self.buildConfig()
        self.LOG.debug('Running {} with output {}'.format(self.verb, self.config.output))
        self.VERBS[self.verb](self.config)
        return EXIT_OK


def main(args=None):
    '''console entry point; returns the process exit status'''
    command = SurvCommand(args)
    command.parseOptions()
    command.setupLogging()
    try:
        return command.run()
    except NumericError as e:
        command.LOG.error('{}: {}'.format(e.__class__.__name__, e))
        return EXIT_NUMERIC
    except (DataError, ValueError, KeyError, OSError) as e:
        command.LOG.error('{}: {}'.format(e.__class__.__name__, e))
        return EXIT_DATA


if __name__ == '__main__':
    sys.exit(main())
