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

import yaml

from ..exceptions import DataError
from .SurvivalLibLog import DEFAULTLOG


class OrderedLoader(yaml.SafeLoader):
    """Basic ordered mapping YAML loader.

    Keeps the order of mappings as they're read from the file, so that
    feature lists and encoding maps come back in the order written.
    """

    def __init__(self, *args, **kwargs):
        yaml.SafeLoader.__init__(self, *args, **kwargs)

        self.add_constructor(
            u'tag:yaml.org,2002:map',
            type(self).dict_constructor)

        self.add_constructor(
            u'tag:yaml.org,2002:omap',
            type(self).dict_constructor)

    def dict_constructor(self, node):
        """constructor for OrderedDict"""
        self.flatten_mapping(node)
        pairs = self.construct_pairs(node)
        keys = [k for k, _ in pairs]
        duplicates = sorted(set(str(k) for k in keys if keys.count(k) > 1))
        if duplicates:
            raise yaml.constructor.ConstructorError(
                None, None, 'duplicate keys: {}'.format(', '.join(duplicates)), node.start_mark)
        return OrderedDict(pairs)


class ConfigLoader(OrderedLoader):
    """Loader for run configuration documents (YAML or JSON)."""

    LOG = DEFAULTLOG


def load_yaml_single(yaml_doc, loader=ConfigLoader):
    '''return YAML loaded from string or file with given loader.'''
    if os.path.isfile(yaml_doc):
        loader.LOG.debug('Loading configuration from {}'.format(yaml_doc))
        try:
            with open(yaml_doc, 'r') as handle:
                return yaml.load(handle, Loader=loader)
        except yaml.YAMLError as e:
            raise DataError('unable to parse {}: {}'.format(yaml_doc, e))
    try:
        return yaml.load(yaml_doc, Loader=loader)
    except yaml.YAMLError as e:
        raise DataError('unable to parse configuration: {}'.format(e))
