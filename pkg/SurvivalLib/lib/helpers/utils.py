##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
import json
import math
import os
from collections import OrderedDict

import numpy as np

from ..exceptions import DataError, MissingArtifactError
from ..resources.templates import DEFAULT_CONFIG
from ..spec.RunConfig import RunConfig
from .SurvivalLibLog import DEFAULTLOG
from .loaders import load_yaml_single


def load_config(path=None):
    '''return RunConfig from a YAML/JSON file, or the built-in defaults'''
    if path is None:
        data = load_yaml_single(DEFAULT_CONFIG)
        return RunConfig.from_dict(data, source='<defaults>')
    if not os.path.isfile(path):
        raise DataError('configuration file {} not found'.format(path))
    data = load_yaml_single(path)
    if data is None:
        data = OrderedDict()
    if not isinstance(data, dict):
        raise DataError('{}: configuration must be a mapping'.format(path))
    try:
        config = RunConfig.from_dict(data, source=path)
    except ValueError as e:
        raise DataError('{}: {}'.format(path, e))
    return config.replace(inputs=config.inputs.resolve(os.path.dirname(os.path.abspath(path))))


def plain(value):
    '''return value with numpy scalars/arrays converted for JSON'''
    if isinstance(value, dict):
        return OrderedDict((str(k), plain(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [plain(v) for v in value.tolist()]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def write_json(path, data):
    '''write data as indented JSON with a trailing newline'''
    with open(path, 'w') as handle:
        json.dump(plain(data), handle, indent=2)
        handle.write('\n')
    DEFAULTLOG.debug('Wrote {}'.format(path))
    return path


def read_json(path):
    if not os.path.isfile(path):
        raise MissingArtifactError('{} not found; run the command that produces it first'.format(path))
    with open(path) as handle:
        return json.load(handle, object_pairs_hook=OrderedDict)


def write_frame(path, frame, sep=','):
    '''write a pandas frame as delimited text with a header row'''
    frame.to_csv(path, sep=sep, index=False, lineterminator='\n', na_rep='')
    DEFAULTLOG.debug('Wrote {}'.format(path))
    return path


def require_file(path, producer):
    if not os.path.isfile(path):
        raise MissingArtifactError('{} not found; run "{}" first'.format(path, producer))
    return path
