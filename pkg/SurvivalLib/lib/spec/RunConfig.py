##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
import os
from collections import OrderedDict

from ..base.types import PositiveFloat, TableFormat
from .CoxFitOptions import CoxFitOptions
from .KmOptions import KmOptions
from .PreprocessSpec import PreprocessSpec, string_list
from .RsfOptions import RsfOptions, seed_value
from .Spec import Spec


class InputsSpec(Spec):
    """Input tables for a run

        :param survival: Survival table path
        :type survival: str
        :param survival_format: tsv or json
        :type survival_format: str
        :param survival_key: Sample identifier column of the survival table
        :type survival_key: str
        :param clinical: Clinical matrix path
        :type clinical: str
        :param clinical_format: tsv or json
        :type clinical_format: str
        :param clinical_key: Sample identifier column of the clinical matrix
        :type clinical_key: str
    """

    name = 'inputs'
    PARAMS = OrderedDict([
        ('survival', {'type': str, 'default': None, 'nullable': True}),
        ('survival_format', {'type': TableFormat, 'default': 'tsv'}),
        ('survival_key', {'type': str, 'default': 'sample'}),
        ('clinical', {'type': str, 'default': None, 'nullable': True}),
        ('clinical_format', {'type': TableFormat, 'default': 'json'}),
        ('clinical_key', {'type': str, 'default': 'sampleID'}),
    ])

    def resolve(self, base_dir):
        """Return a copy with relative paths anchored at base_dir."""
        changes = {}
        for name in ('survival', 'clinical'):
            path = getattr(self, name)
            if path and not os.path.isabs(path):
                changes[name] = os.path.normpath(os.path.join(base_dir, path))
        return self.replace(**changes) if changes else self


def strata_specs(value):
    """name -> {'column': str, 'labels': {value: label}} or {'column': str, 'edges': [...]}"""
    if not isinstance(value, dict):
        raise ValueError('expected a mapping of stratification name to settings, got {!r}'.format(value))
    strata = OrderedDict()
    for name, entry in value.items():
        if not isinstance(entry, dict) or 'column' not in entry:
            raise ValueError('stratification {} needs a column'.format(name))
        unknown = set(entry) - set(['column', 'labels', 'edges'])
        if unknown:
            raise ValueError('stratification {}: unrecognized keys {}'.format(name, sorted(unknown)))
        if ('labels' in entry) == ('edges' in entry):
            raise ValueError('stratification {} needs exactly one of labels or edges'.format(name))
        item = OrderedDict([('column', str(entry['column']))])
        if 'labels' in entry:
            item['labels'] = OrderedDict((str(k), str(v)) for k, v in entry['labels'].items())
        else:
            edges = [float(x) for x in entry['edges']]
            if len(edges) < 2 or any(b <= a for a, b in zip(edges, edges[1:])):
                raise ValueError('stratification {} edges must be increasing, got {}'.format(name, edges))
            item['edges'] = edges
        strata[str(name)] = item
    return strata


DEFAULT_STRATA = OrderedDict([
    ('gender', OrderedDict([('column', 'gender_encoded'),
                            ('labels', OrderedDict([('0', 'FEMALE'), ('1', 'MALE')]))])),
    ('age', OrderedDict([('column', 'age_at_diagnosis'), ('edges', [0, 60, 100])])),
    ('age_fine', OrderedDict([('column', 'age_at_diagnosis'), ('edges', [0, 20, 40, 60, 80, 100])])),
])


class RunConfig(Spec):
    """End-to-end experiment configuration

        :param inputs: Input tables
        :type inputs: InputsSpec
        :param preprocess: Preprocessing protocol
        :type preprocess: PreprocessSpec
        :param features: Model features, every dataset feature when unset
        :type features: list(str)
        :param exclude: Features removed from the model set (ablation)
        :type exclude: list(str)
        :param km: Kaplan-Meier options
        :type km: KmOptions
        :param strata: Kaplan-Meier stratifications
        :type strata: dict
        :param svg: Also render SVG step plots
        :type svg: bool
        :param cox: Cox fitting options
        :type cox: CoxFitOptions
        :param rsf: Forest options
        :type rsf: RsfOptions
        :param horizon: ROC horizon in days
        :type horizon: float
        :param output: Output directory
        :type output: str
        :param seed: Seed shared by the split and the forest
        :type seed: int
    """

    name = 'run'
    PARAMS = OrderedDict([
        ('inputs', {'type': None, 'default': None}),
        ('preprocess', {'type': None, 'default': None}),
        ('features', {'type': string_list, 'default': None, 'nullable': True}),
        ('exclude', {'type': string_list, 'default': []}),
        ('km', {'type': None, 'default': None}),
        ('strata', {'type': strata_specs, 'default': DEFAULT_STRATA}),
        ('svg', {'type': bool, 'default': False}),
        ('cox', {'type': None, 'default': None}),
        ('rsf', {'type': None, 'default': None}),
        ('horizon', {'type': PositiveFloat, 'default': 1000.0}),
        ('output', {'type': str, 'default': 'out'}),
        ('seed', {'type': seed_value, 'default': 42}),
    ])

    SECTIONS = OrderedDict([
        ('inputs', InputsSpec),
        ('preprocess', PreprocessSpec),
        ('km', KmOptions),
        ('cox', CoxFitOptions),
        ('rsf', RsfOptions),
    ])

    def validate(self):
        for name, spec_class in self.SECTIONS.items():
            value = getattr(self, name)
            if not isinstance(value, spec_class):
                value = spec_class.from_dict(value, source=self.source_location)
            setattr(self, name, value)

        # the run seed drives both the split and the forest
        for name in ('preprocess', 'rsf'):
            section = getattr(self, name)
            if section.seed != self.seed:
                if section.seed != section.PARAMS['seed']['default']:
                    self.speclog.warning('{} seed {} overridden by run seed {}'.format(
                        name, section.seed, self.seed))
                setattr(self, name, section.replace(seed=self.seed))

    def model_features(self, available):
        """Return the ordered model feature list given dataset features."""
        features = list(self.features) if self.features is not None else list(available)
        missing = [f for f in features + list(self.exclude) if f not in available]
        if missing:
            raise ValueError('features not present in the dataset: {}'.format(', '.join(missing)))
        return [f for f in features if f not in self.exclude]
