# -*- coding: utf-8 -*-
"""
Experiment configuration: INI text with the sections [scenario],
[strategy], [adversary] and [run]. Every key is whitelisted; values are
kept as stripped text and converted on access, so that
``ExperimentConfig.from_text(config.to_text()) == config``.

Matrices are written with ',' between entries and ';' between rows; lists
of matrices (or of parameter vectors) use '|' between items. Target sets
are written ``kind`` or ``kind:data``, for example ``orthant``,
``singleton:0,0``, ``half_line_below:0.5``, ``polytope:0,0;1,0;0,1``.
"""

import configparser
import logging
from collections import OrderedDict
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.foundation.utils import *
from approachabilitykit.calculator.geometry import *


logger = logging.getLogger(__name__)


#------------------------------------------------------------------------------#
#                            C O N V E R T E R S                               #
#------------------------------------------------------------------------------#


def parse_bool(text):
    value = text.strip().lower()
    if value in ('1', 'yes', 'true', 'on'):
        return True
    if value in ('0', 'no', 'false', 'off'):
        return False
    raise ValueError('not a boolean: %r' % text)


def parse_vector(text):
    values = [float(item) for item in text.replace(' ', '').split(',') if item != '']
    if not values:
        raise ValueError('empty vector')
    return np.array(values)


def parse_matrix(text):
    rows = [parse_vector(row) for row in text.split(';') if row.strip()]
    if not rows or any(row.size != rows[0].size for row in rows):
        raise ValueError('rows of a matrix must have equal lengths: %r' % text)
    return np.array(rows)


def parse_matrix_list(text):
    return [parse_matrix(item) for item in text.split('|') if item.strip()]


def parse_vector_list(text):
    return [parse_vector(item) for item in text.split('|') if item.strip()]


def parse_target(text, norm_p=NORM_INFINITY, dimension=None):
    """
    Function will build the TargetSet described by ``text``.
    """
    kind, separator, data = text.strip().partition(':')
    kind = kind.strip().lower()
    if kind == 'orthant':
        if data.strip():
            dimension = int(data)
        if dimension is None:
            raise ValueError('orthant needs a dimension, e.g. orthant:2')
        return NegativeOrthant(dimension, norm_p)
    if kind == 'whole_space':
        if data.strip():
            dimension = int(data)
        if dimension is None:
            raise ValueError('whole_space needs a dimension, e.g. whole_space:1')
        return WholeSpace(dimension, norm_p)
    if kind == 'singleton':
        return Singleton(parse_vector(data), norm_p)
    if kind == 'half_line_below':
        return HalfLineBelow(float(data), norm_p)
    if kind == 'half_line_above':
        return HalfLineAbove(float(data), norm_p)
    if kind == 'polytope':
        return Polytope(parse_matrix(data), norm_p)
    raise ValueError('unknown target set kind %r' % kind)


def check_target(text):
    kind = text.strip().partition(':')[0].strip().lower()
    if kind not in ('orthant', 'whole_space', 'singleton', 'half_line_below', 'half_line_above', 'polytope'):
        raise ValueError('unknown target set kind %r' % kind)
    if kind not in ('orthant', 'whole_space'):
        parse_target(text)
    return text.strip()


def choice(*options):
    def convert(text):
        value = text.strip().lower()
        if value not in options:
            raise ValueError('expected one of %s, got %r' % (', '.join(options), text))
        return value
    return convert


def parse_checkpoints(text):
    value = text.strip().lower()
    if value in ('geometric', 'every'):
        return value
    return [int(item) for item in value.split(',') if item.strip()]


#------------------------------------------------------------------------------#
#                               S C H E M A                                    #
#------------------------------------------------------------------------------#


CONFIG_SCHEMA = OrderedDict([
    ('scenario', OrderedDict([
        ('example', (choice(EXAMPLE_ONE_ID, EXAMPLE_TWO_ID, EXAMPLE_TWO_QUADRANT_ID, CONSTRAINED_ID, CUSTOM_ID), None)),
        ('norm', (check_norm, 'inf')),
        ('vertices', (parse_matrix_list, None)),
        ('target', (check_target, None)),
        ('payoff_matrix', (parse_matrix_list, None)),
        ('cost_matrix', (parse_matrix_list, None)),
        ('payoff_set', (check_target, None)),
        ('cost_set', (check_target, None)),
    ])),
    ('strategy', OrderedDict([
        ('kind', (choice('block', 'constant', 'blackwell'), 'block')),
        ('response', (choice('x_star', 'generic', 'constant', 'tabulated'), 'x_star')),
        ('constant_action', (parse_vector, None)),
        ('response_table', (str, None)),
        ('audit', (parse_bool, 'false')),
    ])),
    ('adversary', OrderedDict([
        ('kind', (choice('constant', 'periodic', 'switching', 'random', 'scripted'), 'constant')),
        ('parameter', (parse_vector, None)),
        ('matrix', (parse_matrix, None)),
        ('schedule', (parse_vector_list, None)),
        ('align', (parse_bool, 'true')),
        ('epsilon', (float, str(SWITCHING_INITIAL_EPSILON))),
        ('probabilities', (parse_vector, None)),
        ('script', (parse_matrix_list, None)),
    ])),
    ('run', OrderedDict([
        ('horizon', (int, None)),
        ('seed', (int, '0')),
        ('checkpoints', (parse_checkpoints, 'geometric')),
        ('checkpoint_ratio', (float, str(CHECKPOINT_RATIO))),
        ('sample_actions', (parse_bool, 'false')),
        ('audit', (parse_bool, 'false')),
        ('no_grouping', (parse_bool, 'false')),
        ('run_id', (str, None)),
    ])),
])


REQUIRED_KEYS = (('scenario', 'example'), ('run', 'horizon'))


class ExperimentConfig:
    """
    Validated experiment configuration.
    """

    #--------------------------------------------------------------------------#
    #                     P U B L I C  F U N C T I O N S                       #
    #--------------------------------------------------------------------------#

    def __init__(self, values, source='<config>'):
        self._source = source
        self._values = OrderedDict()
        for section, entries in values.items():
            if section not in CONFIG_SCHEMA:
                raise ConfigError('%s: unknown section [%s]' % (source, section), section=section)
            self._values[section] = OrderedDict()
            for key, text in entries.items():
                if key not in CONFIG_SCHEMA[section]:
                    raise ConfigError('%s: unknown key %r in section [%s]' % (source, key, section), section=section, key=key)
                self._values[section][key] = str(text).strip()
        for section, key in REQUIRED_KEYS:
            if key not in self._values.get(section, {}):
                raise ConfigError('%s: missing required key %r in section [%s]' % (source, key, section), section=section, key=key)
        self.validate()

    @classmethod
    def from_text(cls, text, source='<string>'):
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str
        try:
            parser.read_string(text, source=source)
        except configparser.Error as error:
            raise ConfigError('%s: %s' % (source, error))
        values = OrderedDict((section, OrderedDict(parser.items(section))) for section in parser.sections())
        return cls(values, source)

    @classmethod
    def from_file(cls, filepath):
        try:
            with open(filepath) as input_file_handle:
                text = input_file_handle.read()
        except OSError as error:
            raise ConfigError('cannot read config %s: %s' % (filepath, error))
        return cls.from_text(text, source=filepath)

    @property
    def source(self):
        return self._source

    def has(self, section, key):
        return key in self._values.get(section, {})

    def get(self, section, key):
        """
        Converted value of ``key``, the schema default when it is unset.
        """
        converter, default = CONFIG_SCHEMA[section][key]
        text = self._values.get(section, {}).get(key, default)
        if text is None:
            return None
        return converter(text)

    def require(self, section, key):
        value = self.get(section, key)
        if value is None:
            raise ConfigError('%s: missing key %r in section [%s]' % (self._source, key, section), section=section, key=key)
        return value

    def with_value(self, section, key, text):
        values = OrderedDict((s, OrderedDict(entries)) for s, entries in self._values.items())
        values.setdefault(section, OrderedDict())[key] = text
        return ExperimentConfig(values, self._source)

    def to_text(self):
        lines = []
        for section, schema in CONFIG_SCHEMA.items():
            if section not in self._values:
                continue
            lines.append('[%s]' % section)
            for key in schema:
                if key in self._values[section]:
                    lines.append('%s = %s' % (key, self._values[section][key]))
            lines.append('')
        return '\n'.join(lines)

    def __eq__(self, other):
        return isinstance(other, ExperimentConfig) and self.to_text() == other.to_text()

    __hash__ = None

    #--------------------------------------------------------------------------#
    #                     P R I V A T E  F U N C T I O N S                     #
    #--------------------------------------------------------------------------#

    def validate(self):
        for section, entries in self._values.items():
            for key in entries:
                try:
                    self.get(section, key)
                except (ValueError, ApproachabilityKitError) as error:
                    raise ConfigError('%s: bad value for %r in section [%s]: %s' % (self._source, key, section, error),
                                      section=section, key=key)
        if self.get('run', 'horizon') < 1:
            raise ConfigError('%s: horizon must be positive' % self._source, section='run', key='horizon')
