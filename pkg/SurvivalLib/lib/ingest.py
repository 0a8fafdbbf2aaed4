##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
"""Clinical table ingestion and preprocessing.

Pipeline order is fixed: merge -> rename -> drop empty columns -> select
columns -> drop missing labels -> impute -> encode -> IQR outlier removal
-> split. Every stage returns a new table and never adds rows.
"""
import csv
import io
import math
from collections import OrderedDict

import numpy as np
import pandas as pd

from .base.Dataset import Dataset
from .base.ImputeModel import ImputeModel
from .base.RawTable import RawTable
from .base.SurvivalSample import SurvivalSample
from .base.types import TableFormat
from .exceptions import DataError, IngestError
from .helpers.SurvivalLibLog import SURVLOG
from .spec.PreprocessSpec import DEFAULT_MISSING_VALUES

LOG = SURVLOG.add_log('ingest')

QUANTILE_METHOD = 'linear'
DATASET_COLUMNS = ['sample_id', 'time', 'event']


# Loading ###################################################################


def load_table(path, format='tsv', key_column=None, missing_values=None):
    """Return a RawTable read from a tab-separated or JSON-records file.

    Empty cells and the missing_values sentinels become missing. The key
    column defaults to the first column.
    """
    format = TableFormat(format)
    if missing_values is None:
        missing_values = DEFAULT_MISSING_VALUES
    missing_values = [str(x) for x in missing_values]
    try:
        with io.open(path, 'r', encoding='utf-8', newline='') as handle:
            text = handle.read()
    except (IOError, OSError) as e:
        raise IngestError('unable to read {}: {}'.format(path, e))

    if format == 'tsv':
        frame = _parse_tsv(text, path, missing_values)
    else:
        frame = _parse_json(text, path, missing_values)

    if key_column is None:
        key_column = str(frame.columns[0])
    if key_column not in frame.columns:
        raise IngestError('{}: key column {} not found'.format(path, key_column), column=key_column)
    LOG.info('Loaded {}: {} rows, {} columns'.format(path, len(frame), len(frame.columns)))
    return RawTable(frame, key_column)


def _parse_tsv(text, path, missing_values):
    text = text.replace('\r\n', '\n')
    lines = text.split('\n')
    if not lines or not lines[0].strip():
        raise IngestError('{}: header row missing'.format(path), line=1)
    header = lines[0].split('\t')
    duplicates = sorted(set(x for x in header if header.count(x) > 1))
    if duplicates:
        raise IngestError('{}: duplicate header names: {}'.format(path, ', '.join(duplicates)), line=1)
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip() and number == len(lines):
            continue
        cells = line.split('\t')
        if len(cells) != len(header):
            raise IngestError('{}: line {} has {} cells, expected {}'.format(
                path, number, len(cells), len(header)), line=number)
    frame = pd.read_csv(
        io.StringIO(text), sep='\t', dtype=str, keep_default_na=False,
        na_values=missing_values, quoting=csv.QUOTE_NONE, skip_blank_lines=True,
        lineterminator='\n')
    return frame


def _parse_json(text, path, missing_values):
    try:
        frame = pd.read_json(io.StringIO(text), orient='records', dtype=False,
                             convert_dates=False, keep_default_dates=False)
    except ValueError as e:
        raise IngestError('{}: not a JSON array of records ({})'.format(path, e))
    if frame.columns.duplicated().any():
        raise IngestError('{}: duplicate field names'.format(path))
    sentinels = set(missing_values)
    return frame.astype(object).map(
        lambda v: None if v is None or (isinstance(v, float) and math.isnan(v))
        or (isinstance(v, str) and v in sentinels) else v)


# Table stages ##############################################################


def merge_on_key(a, b):
    """Inner join of two tables on their key columns.

    The result keeps a's key name and row order. A column present in both
    inputs keeps a's cells, filling a's missing cells from b.
    """
    for table, name in ((a, 'left'), (b, 'right')):
        keys = pd.Series(table.keys)
        offenders = sorted(set(keys[keys.duplicated()]))
        if offenders:
            raise IngestError('duplicate keys in {} table: {}'.format(name, ', '.join(offenders)),
                              column=table.key_column)
    left = a.frame
    right = b.frame.rename(columns={b.key_column: a.key_column})
    left[a.key_column] = left[a.key_column].map(str)
    right[a.key_column] = right[a.key_column].map(str)
    merged = left.merge(right, how='inner', on=a.key_column, suffixes=('', '__right'), sort=False)
    for column in [c for c in merged.columns if c.endswith('__right')]:
        base = column[:-len('__right')]
        merged[base] = merged[base].where(merged[base].notna(), merged[column])
        merged = merged.drop(columns=[column])
        LOG.debug('Coalesced column {} present in both tables'.format(base))
    LOG.info('Merged {} x {} rows on {}: {} rows, {} columns'.format(
        a.n, b.n, a.key_column, len(merged), len(merged.columns)))
    return RawTable(merged, a.key_column)


def rename_columns(t, mapping):
    """Return t with columns renamed by mapping (source -> new name)."""
    if not mapping:
        return t
    missing = [c for c in mapping if not t.has_column(c)]
    if missing:
        LOG.warning('Rename skipped for absent columns: {}'.format(', '.join(missing)))
    frame = t.frame.rename(columns=dict((k, v) for k, v in mapping.items() if k not in missing))
    if frame.columns.duplicated().any():
        raise IngestError('rename produced duplicate columns: {}'.format(
            sorted(set(frame.columns[frame.columns.duplicated()]))))
    key = mapping.get(t.key_column, t.key_column)
    return RawTable(frame, key)


def drop_empty_columns(t):
    """Return t without columns that have no non-missing cell; the key stays."""
    frame = t.frame
    empty = [c for c in frame.columns if c != t.key_column and frame[c].isna().all()]
    if empty:
        LOG.debug('Dropping empty columns: {}'.format(', '.join(empty)))
    return RawTable(frame.drop(columns=empty), t.key_column)


def select_columns(t, columns):
    """Return t projected onto the key column plus columns, in that order."""
    missing = [c for c in columns if not t.has_column(c)]
    if missing:
        raise IngestError('columns not found: {}'.format(', '.join(missing)), column=missing[0])
    keep = [t.key_column] + [c for c in columns if c != t.key_column]
    return RawTable(t.frame[keep], t.key_column)


def _label_masks(frame, time_col, event_col):
    times = pd.to_numeric(frame[time_col], errors='coerce').astype(float)
    events = pd.to_numeric(frame[event_col], errors='coerce').astype(float)
    time_ok = np.isfinite(times) & (times >= 0)
    event_ok = events.isin([0.0, 1.0])
    unparseable = frame[event_col].notna() & ~event_ok
    return times, events, time_ok & event_ok, unparseable


def drop_missing_labels(t, time_col, event_col):
    """Return rows whose time is a number >= 0 and whose event is 0 or 1.

    Event values outside {0, 1} are dropped with a warning, never coerced.
    """
    for column in (time_col, event_col):
        if not t.has_column(column):
            raise IngestError('label column {} not found'.format(column), column=column)
    frame = t.frame
    times, events, valid, unparseable = _label_masks(frame, time_col, event_col)
    if unparseable.any():
        LOG.warning('Dropping {} rows with unparseable {} labels: {}'.format(
            int(unparseable.sum()), event_col,
            ', '.join(str(k) for k in frame.loc[unparseable, t.key_column])))
    frame[time_col] = times
    frame[event_col] = events
    frame = frame.loc[valid.values]
    frame[event_col] = frame[event_col].astype(int)
    return RawTable(frame, t.key_column)


def _numeric_column(t, column, rows=None):
    frame = t.frame
    if rows is not None:
        frame = frame.loc[rows]
    cells = frame[column]
    values = pd.to_numeric(cells, errors='coerce').astype(float)
    bad = cells.notna() & values.isna()
    if bad.any():
        first = frame.loc[bad.values].iloc[0]
        raise IngestError('column {} has non-numeric value {!r} at row {}'.format(
            column, first[column], first[t.key_column]), column=column)
    return values


def fit_impute(t, columns, fit_rows=None):
    """Return an ImputeModel of per-column medians over fit_rows.

    fit_rows is an iterable of keys; every row is used when it is None.
    """
    rows = None
    if fit_rows is not None:
        wanted = set(str(k) for k in fit_rows)
        rows = np.array([k in wanted for k in t.keys], dtype=bool)
    medians = OrderedDict()
    for column in columns:
        if not t.has_column(column):
            raise IngestError('imputation column {} not found'.format(column), column=column)
        values = _numeric_column(t, column, rows).dropna()
        if not len(values):
            raise IngestError('column {} has no values to fit a median on'.format(column), column=column)
        medians[column] = float(np.median(values.values))
    n_fit = int(rows.sum()) if rows is not None else t.n
    return ImputeModel(medians, fit_rows=n_fit)


def apply_impute(t, m, columns=None):
    """Return t with missing cells of the model's columns set to their median."""
    columns = m.columns if columns is None else list(columns)
    if not m.covers(columns):
        raise IngestError('impute model lacks columns: {}'.format(
            ', '.join(c for c in columns if c not in m.medians)))
    frame = t.frame
    for column in columns:
        values = _numeric_column(t, column)
        filled = int(values.isna().sum())
        if filled:
            LOG.debug('Imputing {} cells of {} with {}'.format(filled, column, m.medians[column]))
        frame[column] = values.fillna(m.medians[column])
    return RawTable(frame, t.key_column)


def _cell_label(value):
    if isinstance(value, float) and value.is_integer():
        return str(int(value))
    return str(value)


def encode_categoricals(t, spec):
    """Return t with label-encoded and one-hot encoded columns.

    A label-encoded column becomes <column>_encoded in place; rows with a
    missing cell there are dropped. A one-hot column becomes k-1 indicator
    columns <column>_<category>, the reference category getting none; a
    missing cell yields an all-zero row.
    """
    frame = t.frame
    for column, mapping in spec.label_encode.items():
        if column not in frame.columns:
            raise IngestError('label-encoded column {} not found'.format(column), column=column)
        missing = frame[column].isna()
        if missing.any():
            LOG.warning('Dropping {} rows with missing {}'.format(int(missing.sum()), column))
            frame = frame.loc[~missing.values]
        codes = []
        for key, value in zip(frame[t.key_column], frame[column]):
            label = _cell_label(value)
            if label not in mapping:
                raise IngestError('unmapped {} value {!r} at row {}'.format(column, label, key),
                                  column=column)
            codes.append(mapping[label])
        position = list(frame.columns).index(column)
        frame = frame.drop(columns=[column])
        frame.insert(position, spec.encoded_name(column), codes)

    for column, entry in spec.one_hot.items():
        if column not in frame.columns:
            raise IngestError('one-hot column {} not found'.format(column), column=column)
        reference = entry['reference']
        labels = [None if v is None else _cell_label(v) for v in frame[column]]
        categories = entry['categories']
        if categories is None:
            categories = sorted(set(x for x in labels if x is not None).union([reference]))
        for key, label in zip(frame[t.key_column], labels):
            if label is not None and label not in categories:
                raise IngestError('unmapped {} value {!r} at row {}'.format(column, label, key),
                                  column=column)
        missing = sum(1 for x in labels if x is None)
        if missing:
            LOG.warning('{} rows with missing {} encoded as reference {}'.format(missing, column, reference))
        position = list(frame.columns).index(column)
        frame = frame.drop(columns=[column])
        for offset, category in enumerate(c for c in categories if c != reference):
            frame.insert(position + offset, spec.indicator_name(column, category),
                         [1 if x == category else 0 for x in labels])
    return RawTable(frame, t.key_column)


def iqr_fences(values, multiplier=1.5):
    """Return (q1, q3, lower, upper) using linearly interpolated quartiles."""
    values = np.asarray(values, dtype=float)
    if not len(values):
        raise IngestError('cannot compute quartiles of an empty column')
    q1, q3 = np.quantile(values, [0.25, 0.75], method=QUANTILE_METHOD)
    iqr = q3 - q1
    return float(q1), float(q3), float(q1 - multiplier * iqr), float(q3 + multiplier * iqr)


def remove_outliers_iqr(t, column, multiplier=1.5):
    """Return rows of t whose column value lies within the IQR fences."""
    if not t.has_column(column):
        raise IngestError('outlier column {} not found'.format(column), column=column)
    values = _numeric_column(t, column)
    if values.isna().any():
        raise IngestError('outlier column {} has missing cells'.format(column), column=column)
    q1, q3, lower, upper = iqr_fences(values.values, multiplier)
    keep = ((values >= lower) & (values <= upper)).values
    LOG.debug('IQR fences on {}: [{}, {}], removing {} rows'.format(
        column, lower, upper, int((~keep).sum())))
    return RawTable(t.frame.loc[keep], t.key_column)


# Datasets ##################################################################


def table_to_dataset(t, time_col, event_col, feature_columns):
    """Return a Dataset from a fully preprocessed table."""
    frame = t.frame
    feature_columns = list(feature_columns)
    for column in [time_col, event_col] + feature_columns:
        if column not in frame.columns:
            raise IngestError('column {} not found'.format(column), column=column)
    samples = []
    X = np.empty((len(frame), len(feature_columns)))
    for j, column in enumerate(feature_columns):
        values = _numeric_column(t, column)
        if values.isna().any():
            raise IngestError('feature {} has missing cells'.format(column), column=column)
        X[:, j] = values.values
    for i, (key, time, event) in enumerate(zip(frame[t.key_column], frame[time_col], frame[event_col])):
        samples.append(SurvivalSample(float(time), int(event), X[i], str(key)))
    return Dataset(feature_columns, samples)


def _split_members(ids, events, ratio, seed):
    """Return the sorted positions placed in the training partition."""
    ids = list(ids)
    events = np.asarray(events, dtype=bool)
    strata = []
    for flag in (False, True):
        members = sorted(np.nonzero(events == flag)[0], key=lambda i: ids[i])
        if len(members) < 2:
            raise DataError('stratum event={} has {} member(s); at least 2 are needed'.format(
                int(flag), len(members)))
        strata.append(members)

    n = len(ids)
    exact = [ratio * len(m) for m in strata]
    counts = [int(math.floor(x)) for x in exact]
    target = int(math.floor(ratio * n + 0.5))
    extra = max(0, min(len(strata), target - sum(counts)))
    # largest remainder, ties to the earlier stratum
    order = sorted(range(len(strata)), key=lambda s: (-(exact[s] - counts[s]), s))
    for s in order[:extra]:
        counts[s] += 1

    rng = np.random.default_rng(seed)
    train = []
    for members, count in zip(strata, counts):
        permutation = rng.permutation(len(members))
        train.extend(members[k] for k in permutation[:count])
    return sorted(int(i) for i in train)


def stratified_split(d, ratio=0.8, seed=0):
    """Split d into (train, test), stratified on the event indicator.

    Membership depends only on sample identifiers, events, ratio and seed,
    never on the order of samples in d.
    """
    if not 0 < ratio < 1:
        raise ValueError('split ratio must lie in (0, 1), got {}'.format(ratio))
    train = _split_members(d.sample_ids, d.events, ratio, seed)
    chosen = set(train)
    test = [i for i in range(d.n) if i not in chosen]
    return d.subset(train), d.subset(test)


def _edge_label(value):
    return str(int(value)) if float(value).is_integer() else str(value)


def age_group_labels(edges):
    """Return the labels produced by bin_age_groups for edges."""
    labels = []
    for k, (low, high) in enumerate(zip(edges, edges[1:])):
        start = low if k == 0 else (low + 1 if float(low).is_integer() else low)
        labels.append('{}-{}'.format(_edge_label(start), _edge_label(high)))
    return labels


def bin_age_groups(values, edges):
    """Return one label per age.

    The first bin is [e0, e1]; later bins are (e_k, e_k+1] and are named
    from e_k + 1, so edges [0, 60, 100] give "0-60" and "61-100".
    """
    edges = [float(x) for x in edges]
    if len(edges) < 2 or any(b <= a for a, b in zip(edges, edges[1:])):
        raise ValueError('age edges must be increasing, got {}'.format(edges))
    labels = age_group_labels(edges)
    result = []
    for value in values:
        value = float(value)
        if math.isnan(value) or value < 0:
            raise IngestError('invalid age {}'.format(value))
        if value < edges[0] or value > edges[-1]:
            raise IngestError('age {} outside bins {}-{}'.format(
                _edge_label(value), _edge_label(edges[0]), _edge_label(edges[-1])))
        index = max(0, int(np.searchsorted(edges, value, side='left')) - 1)
        result.append(labels[index])
    return result


def censoring_summary(d):
    """Return event and censoring counts and fractions."""
    events = int(np.sum(d.events))
    n = d.n
    return OrderedDict([
        ('n', n),
        ('events', events),
        ('censored', n - events),
        ('event_fraction', events / float(n) if n else None),
        ('censored_fraction', (n - events) / float(n) if n else None),
    ])


def feature_correlations(d):
    """Return the Pearson correlation matrix of time and every feature."""
    frame = pd.DataFrame(d.X, columns=d.feature_names)
    frame.insert(0, 'time', d.times)
    return frame.corr(method='pearson')


def dataset_to_frame(d):
    frame = pd.DataFrame(d.X, columns=d.feature_names)
    frame.insert(0, 'event', d.events.astype(int))
    frame.insert(0, 'time', d.times)
    frame.insert(0, 'sample_id', d.sample_ids)
    return frame


def write_dataset(d, path):
    """Write the canonical tab-separated dataset file."""
    dataset_to_frame(d).to_csv(path, sep='\t', index=False, lineterminator='\n')


def read_dataset(path):
    """Read a canonical dataset file; missing cells are rejected."""
    try:
        frame = pd.read_csv(path, sep='\t', dtype={'sample_id': str}, keep_default_na=True)
    except (IOError, OSError) as e:
        raise IngestError('unable to read dataset {}: {}'.format(path, e))
    if list(frame.columns[:3]) != DATASET_COLUMNS:
        raise IngestError('{}: expected leading columns {}'.format(path, ', '.join(DATASET_COLUMNS)))
    if frame.isna().any().any():
        raise IngestError('{}: dataset has missing cells'.format(path))
    features = [str(c) for c in frame.columns[3:]]
    return Dataset.from_arrays(frame['time'].values, frame['event'].values.astype(int),
                               frame[features].values.astype(float), features,
                               [str(x) for x in frame['sample_id']])


# Pipeline ##################################################################


class PreprocessPipeline(object):
    """Runs the preprocessing protocol and records a per-stage audit."""

    LOG = LOG

    def __init__(self, spec):
        self.spec = spec
        self.audit = OrderedDict([
            ('format', 'survivallib.preprocess-audit'),
            ('version', 1),
            ('spec', spec.to_dict()),
            ('quantile_method', QUANTILE_METHOD),
            ('stages', []),
        ])

    def stage(self, name, before, after, **details):
        entry = OrderedDict([
            ('stage', name),
            ('rows_in', before.n),
            ('rows_out', after.n),
            ('columns_in', len(before.column_names)),
            ('columns_out', len(after.column_names)),
        ])
        entry.update(details)
        if after.n > before.n:
            raise IngestError('stage {} increased rows from {} to {}'.format(name, before.n, after.n))
        self.audit['stages'].append(entry)
        self.LOG.info('{}: rows {} -> {}, columns {} -> {}'.format(
            name, before.n, after.n, len(before.column_names), len(after.column_names)))
        return after

    @staticmethod
    def _dropped(before, after):
        kept = set(after.keys)
        return [k for k in before.keys if k not in kept]

    def _final_rows_preview(self, t):
        """Return keys that survive encoding and IQR removal, or None.

        Both stages depend only on label columns and categorical cells, so
        the final row set, and hence the seeded split, is known before
        imputation. None when the outlier column still has missing cells.
        """
        spec = self.spec
        frame = t.frame
        keep = np.ones(len(frame), dtype=bool)
        for column in spec.label_encode:
            if column in frame.columns:
                keep &= frame[column].notna().values
        if spec.outlier_column not in frame.columns:
            return None
        values = pd.to_numeric(frame[spec.outlier_column], errors='coerce').astype(float).values
        if np.isnan(values[keep]).any():
            return None
        if keep.any():
            _, _, lower, upper = iqr_fences(values[keep], spec.iqr_multiplier)
            keep &= (values >= lower) & (values <= upper)
        keys = [str(k) for k in frame[t.key_column]]
        return [keys[i] for i in np.nonzero(keep)[0]], frame[spec.event_column].values[keep]

    def run(self, tables):
        """Return (dataset, train, test) from one or more raw tables."""
        spec = self.spec
        if not tables:
            raise IngestError('no input tables')
        self.audit['inputs'] = [OrderedDict([('key', x.key_column), ('rows', x.n),
                                             ('columns', len(x.column_names))]) for x in tables]
        t = tables[0]
        for other in tables[1:]:
            t = self.stage('merge', t, merge_on_key(t, other))
        t = self.stage('rename', t, rename_columns(t, spec.rename))
        before = t
        t = drop_empty_columns(t)
        self.stage('drop_empty_columns', before, t,
                   dropped=[c for c in before.column_names if c not in t.column_names])
        t = self.stage('select_columns', t, select_columns(t, spec.source_columns()))
        before = t
        t = drop_missing_labels(t, spec.time_column, spec.event_column)
        frame = before.frame
        _, _, _, unparseable = _label_masks(frame, spec.time_column, spec.event_column)
        self.stage('drop_missing_labels', before, t, unparseable_events=int(unparseable.sum()),
                   dropped=self._dropped(before, t))

        preview = self._final_rows_preview(t)
        if spec.impute_full_table:
            fit_rows, fit_on = None, 'full'
        elif preview is None:
            self.LOG.warning('Final rows unknown before imputation; fitting medians on all rows')
            fit_rows, fit_on = None, 'full'
        else:
            keys, events = preview
            train_positions = _split_members(keys, events.astype(bool), spec.split_ratio, spec.seed)
            fit_rows, fit_on = [keys[i] for i in train_positions], 'train'

        missing_before = OrderedDict((c, t.missing_count(c)) for c in spec.numeric_features)
        model = fit_impute(t, spec.numeric_features, fit_rows)
        t = self.stage('impute', t, apply_impute(t, model))
        self.audit['imputation'] = OrderedDict([
            ('fit_on', fit_on),
            ('fit_rows', model.fit_rows),
            ('medians', model.medians),
            ('missing_before', missing_before),
            ('flags', [OrderedDict([('column', c), ('imputed_cells', missing_before[c]),
                                    ('note', 'missing may mean no event; imputed by median')])
                       for c in spec.flag_missing if c in missing_before]),
        ])

        before = t
        t = encode_categoricals(t, spec)
        self.stage('encode', before, t, dropped=self._dropped(before, t))
        self.audit['encoding'] = OrderedDict([
            ('label_encode', OrderedDict((spec.encoded_name(c), m) for c, m in spec.label_encode.items())),
            ('one_hot', OrderedDict(
                (c, OrderedDict([('reference', e['reference']),
                                 ('columns', [x for x in t.column_names
                                              if x.startswith(spec.indicator_name(c, ''))])]))
                for c, e in spec.one_hot.items())),
        ])

        values = _numeric_column(t, spec.outlier_column).values
        q1, q3, lower, upper = iqr_fences(values, spec.iqr_multiplier)
        before = t
        t = remove_outliers_iqr(t, spec.outlier_column, spec.iqr_multiplier)
        self.stage('remove_outliers_iqr', before, t, dropped=self._dropped(before, t))
        self.audit['iqr'] = OrderedDict([
            ('column', spec.outlier_column), ('multiplier', spec.iqr_multiplier),
            ('quantile_method', QUANTILE_METHOD), ('q1', q1), ('q3', q3), ('iqr', q3 - q1),
            ('lower', lower), ('upper', upper), ('removed', before.n - t.n),
        ])

        features = [c for c in t.column_names
                    if c not in (t.key_column, spec.time_column, spec.event_column)]
        dataset = table_to_dataset(t, spec.time_column, spec.event_column, features)
        train, test = stratified_split(dataset, spec.split_ratio, spec.seed)
        if fit_on == 'train' and sorted(train.sample_ids) != sorted(fit_rows):
            raise IngestError('split preview disagrees with the final split')
        self.audit['stages'].append(OrderedDict([
            ('stage', 'split'), ('rows_in', dataset.n), ('rows_out', train.n + test.n),
            ('train', train.n), ('test', test.n),
        ]))
        self.LOG.info('split: {} train, {} test'.format(train.n, test.n))
        self.audit['split'] = OrderedDict([
            ('ratio', spec.split_ratio), ('seed', spec.seed),
            ('train', train.n), ('test', test.n),
            ('train_events', int(np.sum(train.events))), ('test_events', int(np.sum(test.events))),
        ])
        self.audit['censoring'] = censoring_summary(dataset)
        self.audit['features'] = features
        return dataset, train, test
