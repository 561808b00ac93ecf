# -*- coding: utf-8 -*-
"""
Turns an ExperimentConfig into a scenario, a strategy and an adversary,
plays the run and writes its documents.
"""

import os
import time
import logging
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.foundation.utils import *
from approachabilitykit.calculator.geometry import *
from approachabilitykit.calculator.responses import *
from approachabilitykit.calculator.strategy_blocks import BlockStrategy, constant_play_strategy
from approachabilitykit.calculator.blackwell import BlackwellStrategy
from approachabilitykit.calculator.scenarios import *
from approachabilitykit.harness.config import ExperimentConfig, parse_target
from approachabilitykit.harness.rates import fit_rate
from approachabilitykit.harness.recorddocgen import RecordDocGen


logger = logging.getLogger(__name__)


class ExperimentRunner:
    """
    Class will take an experiment configuration, build the game it describes
    and play it, writing the CSV run record and its plain-text summary.
    """

    #--------------------------------------------------------------------------#
    #                     P U B L I C  F U N C T I O N S                       #
    #--------------------------------------------------------------------------#

    def __init__(self, config=None, output_dir=None):
        self._config = None
        self._output_dir = resolve_output_dir(output_dir)
        self._scenario = None
        self._strategy = None
        self._record = None
        if config is not None:
            self.set_config(config)

    def set_config(self, config):
        assert isinstance(config, ExperimentConfig), 'config is not a ExperimentConfig class: %r' % config
        self._config = config
        self._scenario = None
        self._strategy = None
        self._record = None

    @property
    def output_dir(self):
        return self._output_dir

    @property
    def scenario(self):
        if self._scenario is None:
            self._scenario = build_scenario(self._config)
        return self._scenario

    @property
    def strategy(self):
        return self._strategy

    @property
    def record(self):
        return self._record

    def perform_run(self):
        """
        Play the configured run and return its RunRecord; the wall-clock
        time is attached to the record but never written to the CSV.
        """
        if self._config is None:
            raise ConfigError('no configuration set')
        scenario = self.scenario
        strategy = self._strategy = build_strategy(self._config, scenario)
        adversary = build_adversary(self._config, scenario)
        horizon = self._config.get('run', 'horizon')
        started = time.perf_counter()
        self._record = run(scenario, strategy, adversary, horizon,
                           seed=self._config.get('run', 'seed'),
                           checkpoints=build_checkpoints(self._config),
                           audit=self._config.get('run', 'audit'),
                           sample_actions=self._config.get('run', 'sample_actions'),
                           no_grouping=self._config.get('run', 'no_grouping'))
        self._record.wall_clock = time.perf_counter() - started
        logger.info('finished %s in %.3f s', self.run_name(), self._record.wall_clock)
        return self._record

    def run_name(self):
        run_id = self._config.get('run', 'run_id')
        if run_id:
            return run_id
        strategy_id = self._record.strategy_id if self._record is not None else self._config.get('strategy', 'kind')
        adversary_id = self._record.adversary_id if self._record is not None else self._config.get('adversary', 'kind')
        return '%s_%s_%s_seed%d' % (self._config.get('scenario', 'example'), strategy_id, adversary_id,
                                    self._config.get('run', 'seed'))

    def generate(self, t_min=RATE_FIT_T_MIN):
        """
        Write ``<run name>.csv`` and ``<run name>.txt`` into the output
        directory; returns both paths.
        """
        if self._record is None:
            self.perform_run()
        os.makedirs(self._output_dir, exist_ok=True)
        filepath = os.path.join(self._output_dir, self.run_name() + '.csv')
        fits = []
        for column in self._record.columns:
            if column.startswith('dist_') or column == 'cost_distance':
                fits.append((self.run_name(), column, safe_fit(self._record, column, t_min)))
        doc_gen = RecordDocGen(SUMMARY_DOCUMENT_ID)
        doc_gen.set_doc_content({
            'id': SUMMARY_DOCUMENT_ID,
            'record': self._record,
            'wall_clock': self._record.wall_clock,
            'record_file': filepath,
            'fits': fits,
            't_min': t_min
        })
        return doc_gen.generate(filepath)


#------------------------------------------------------------------------------#
#                              B U I L D E R S                                 #
#------------------------------------------------------------------------------#


def resolve_output_dir(output_dir=None):
    """
    The flag value, else the environment variable, else the current
    directory.
    """
    if output_dir:
        return output_dir
    return os.environ.get(OUTPUT_DIR_ENV_VAR) or os.getcwd()


def build_scenario(config):
    example = config.require('scenario', 'example')
    norm_p = config.get('scenario', 'norm')
    if example in (EXAMPLE_ONE_ID, EXAMPLE_TWO_ID, EXAMPLE_TWO_QUADRANT_ID):
        return scenario_by_id(example, norm_p)
    if example == CUSTOM_ID:
        vertices = config.require('scenario', 'vertices')
        target = parse_target(config.require('scenario', 'target'), norm_p, payoff_array(vertices[0]).shape[0])
        return custom_scenario(vertices, target)

    payoff = np.array(config.require('scenario', 'payoff_matrix'))
    cost = np.array(config.require('scenario', 'cost_matrix'))
    payoff_set = parse_target(config.require('scenario', 'payoff_set'), norm_p, payoff.shape[1])
    cost_set = parse_target(config.require('scenario', 'cost_set'), norm_p, cost.shape[1])
    return build_constrained_scenario(payoff, cost, cost_set, payoff_set)


def build_response(config, scenario):
    kind = config.get('strategy', 'response')
    if kind == 'x_star':
        return scenario.response
    if kind == 'generic':
        if scenario.is_constrained:
            raise ConfigError('%s: the generic response ignores the cost constraint, use x_star' % config.source,
                              section='strategy', key='response')
        return GenericXStarResponse(scenario.target)
    if kind == 'constant':
        return ConstantResponse(config.require('strategy', 'constant_action'))
    filepath = config.require('strategy', 'response_table')
    if not os.path.isabs(filepath) and os.path.isfile(config.source):
        filepath = os.path.join(os.path.dirname(config.source), filepath)
    return TabulatedResponse.from_csv(filepath)


def build_strategy(config, scenario):
    kind = config.get('strategy', 'kind')
    audit = config.get('strategy', 'audit')
    if kind == 'constant':
        action = MixedAction(config.require('strategy', 'constant_action'))
        if action.number_of_actions != scenario.number_of_actions:
            raise ConfigError('%s: constant_action has %d weights, the game has %d actions'
                              % (config.source, action.number_of_actions, scenario.number_of_actions),
                              section='strategy', key='constant_action')
        return constant_play_strategy(action, scenario.d)
    response = build_response(config, scenario)
    if kind == 'blackwell':
        return BlackwellStrategy(scenario.convex_body, response, audit=audit)
    return BlockStrategy(response, scenario.number_of_actions, scenario.d, audit=audit)


def build_adversary(config, scenario):
    kind = config.get('adversary', 'kind')
    if kind == 'constant':
        if config.has('adversary', 'matrix'):
            return ConstantAdversary(config.get('adversary', 'matrix'))
        return ConstantAdversary(scenario.matrix(config.require('adversary', 'parameter')))
    if kind == 'periodic':
        schedule = [scenario.matrix(parameters) for parameters in config.require('adversary', 'schedule')]
        return PeriodicAdversary(schedule, config.get('adversary', 'align'))
    if kind == 'switching':
        return switching_adversary(scenario, config.get('adversary', 'epsilon'))
    if kind == 'random':
        return RandomIIDAdversary(scenario.convex_body.vertices, config.get('adversary', 'probabilities'))
    return ScriptedAdversary(config.require('adversary', 'script'))


def build_checkpoints(config):
    horizon = config.get('run', 'horizon')
    checkpoints = config.get('run', 'checkpoints')
    if checkpoints == 'geometric':
        return geometric_checkpoints(horizon, config.get('run', 'checkpoint_ratio'))
    if checkpoints == 'every':
        return every_round_checkpoints(horizon)
    return checkpoints


def safe_fit(record, column, t_min):
    try:
        return fit_rate(record, column, t_min)
    except RateFitError as error:
        logger.debug('no rate fit for %s: %s', column, error)
        return None


#------------------------------------------------------------------------------#
#                             E N T R Y  P O I N T S                           #
#------------------------------------------------------------------------------#


def run_config(config, output_dir=None):
    runner = ExperimentRunner(config, output_dir)
    runner.perform_run()
    return runner.generate()


def run_config_file(filepath, output_dir=None):
    """
    Module-level so that a process pool can pickle it.
    """
    return run_config(ExperimentConfig.from_file(filepath), output_dir)


def run_config_text(text, output_dir=None, source='<string>'):
    return run_config(ExperimentConfig.from_text(text, source), output_dir)
