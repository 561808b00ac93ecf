# -*- coding: utf-8 -*-
"""
Long runs at horizons of 10^4 and more. They take a couple
of minutes; the other test modules keep to short horizons.
"""
from __future__ import print_function
import unittest
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.foundation.utils import *
from approachabilitykit.calculator.geometry import *
from approachabilitykit.calculator.regret import PolynomialWeightsForecaster
from approachabilitykit.calculator.strategy_blocks import BlockStrategy, check_recurrence_bound
from approachabilitykit.calculator.blackwell import BlackwellStrategy
from approachabilitykit.calculator.scenarios import *
from approachabilitykit.harness.rates import fit_rate, fit_discrepancy_rate
from approachabilitykit.harness.verifier import TargetVerifier
from tests.test_regret import gain_sequences, play


def block_strategy(scenario):
    return BlockStrategy(scenario.response, scenario.number_of_actions, scenario.d)


def adversaries(scenario):
    """
    One of each adversary family; only the random one depends on the seed.
    """
    body = scenario.body
    if scenario.scenario_id == EXAMPLE_ONE_ID:
        schedule = [body.matrix([0.0]), body.matrix([1.0])]
        constant = body.matrix([0.5])
    else:
        schedule = [body.matrix([-1.0, 1.0]), body.matrix([1.0, 1.0])]
        constant = body.matrix([0.5, -0.5])
    return [ConstantAdversary(constant), PeriodicAdversary(schedule), switching_adversary(scenario),
            RandomIIDAdversary(scenario.convex_body.vertices)]


class TestCertificate(unittest.TestCase):

    def test_gap_within_bound(self):
        horizon = 10000
        for scenario in (example_one_scenario(), example_two_scenario()):
            for adversary in adversaries(scenario):
                seeds = range(1, 6) if adversary.adversary_id == 'random' else [1]
                for seed in seeds:
                    record = run(scenario, block_strategy(scenario), adversary, horizon, seed=seed)
                    violations = [t for t, gap, bound in zip(record.column('t'), record.column('gap'), record.column('bound'))
                                  if gap > bound]
                    self.assertEqual(violations, [], '%r' % record)


class TestRates(unittest.TestCase):

    def test_example_one_alternating(self):
        scenario = example_one_scenario()
        body = scenario.body
        adversary = PeriodicAdversary([body.matrix([0.0]), body.matrix([1.0])])
        record = run(scenario, block_strategy(scenario), adversary, 100000, seed=1)
        self.assertLessEqual(record.last('dist_phi_x_star'), 0.15)
        fit = fit_rate(record, 'dist_phi_x_star', RATE_FIT_T_MIN)
        self.assertTrue(fit.converged or fit.slope <= -0.2, repr(fit))

    def test_phi_star_is_not_achieved(self):
        # Against the switching construction the distance to the best target
        # in hindsight stays large while the x* target is still approached.
        scenario = example_one_scenario()
        horizon = 10000
        record = run(scenario, block_strategy(scenario), switching_adversary(scenario), horizon, seed=1,
                     checkpoints=every_round_checkpoints(horizon))
        self.assertGreaterEqual(max(record.column('dist_phi_star')), 0.8)
        self.assertLessEqual(record.last('dist_phi_x_star'), 0.2)

    def test_blackwell_discrepancy_rate(self):
        scenario = example_two_quadrant_scenario()
        strategy = BlackwellStrategy(scenario.convex_body, scenario.response)
        horizon = 100000
        record = run(scenario, strategy, RandomIIDAdversary(scenario.convex_body.vertices), horizon, seed=1,
                     checkpoints=geometric_checkpoints(horizon))
        self.assertEqual(record.last('t'), horizon)
        fit = fit_rate(record, 'delta_norm', RATE_FIT_T_MIN)
        self.assertTrue(fit.converged or fit.slope <= 0.55, repr(fit))
        fit = fit_discrepancy_rate(record, RATE_FIT_T_MIN)
        self.assertTrue(fit.converged or fit.slope <= -0.45, repr(fit))
        self.assertLessEqual(record.last('delta_norm'), scenario.body_norm * horizon ** 0.5)

    def test_example_one_block_switching_stays_off_best_target(self):
        # Whole blocks alternate between the two vertices, so the average
        # matrix sits near nu = 1/2 while the average payoff stays near (3.5, 3.5).
        scenario = example_one_scenario()
        body = scenario.body
        record = run(scenario, block_strategy(scenario), PeriodicAdversary([body.matrix([0.0]), body.matrix([1.0])]),
                     10000, seed=1)
        rbar = [record.last('rbar_0'), record.last('rbar_1')]
        self.assertAlmostEqual(distance_to_expansion(rbar, NegativeOrthant(2, NORM_INFINITY), 2.5), 1.0, delta=0.2)

    def test_per_round_comparator_is_not_approached(self):
        # Against a matrix that changes every round the best responses to the
        # single matrices cannot be matched; the block strategy compares with
        # block averages instead.
        scenario = example_one_scenario()
        body = scenario.body
        adversary = PeriodicAdversary([body.matrix([0.0]), body.matrix([1.0])], align=False)
        record = run(scenario, block_strategy(scenario), adversary, 20000, seed=1, no_grouping=True)
        self.assertGreaterEqual(record.last('no_grouping'), 0.5)
        self.assertLessEqual(record.last('gap'), record.last('bound'))

    def test_constrained_instance(self):
        scenario = build_constrained_scenario([1.0, 0.0], [1.0, 0.0], HalfLineBelow(0.5), HalfLineAbove(1.0))
        record = run(scenario, block_strategy(scenario), ConstantAdversary([[1.0, 0.0], [1.0, 0.0]]), 10000,
                     checkpoints=[1000, 10000])
        self.assertLessEqual(record.column('cost_distance')[0], 0.05)
        self.assertLessEqual(record.last('cost_distance'), 0.05)
        self.assertLessEqual(record.last('dist_constrained_phi_psi'), 0.1)


class TestCorpus(unittest.TestCase):

    def test_regret_corpus(self):
        horizon = 2000
        sequences = 0
        for A in range(2, 9):
            for B in (0.1, 1.0, 50.0):
                for seed in (A, 100 + A):
                    for generator in gain_sequences(A, B, horizon, seed):
                        forecaster = PolynomialWeightsForecaster(A)
                        regret = play(forecaster, generator, horizon)
                        self.assertLessEqual(regret, forecaster.assumption_regret_bound(B, horizon),
                                             '%s with A=%d, B=%r, seed %d' % (generator.__name__, A, B, seed))
                        sequences += 1
        self.assertGreaterEqual(sequences, 200)

    def test_recurrence_corpus(self):
        rng = np.random.Generator(np.random.PCG64(2024))
        gamma_one = 10.0 - rng.uniform(0.0, 10.0, size=1000)
        gamma_two = 10.0 - rng.uniform(0.0, 10.0, size=1000)
        self.assertLessEqual(check_recurrence_bound(gamma_one, gamma_two, 10000), 1.0 + 1e-12)

    def test_target_verification(self):
        self.assertTrue(TargetVerifier(ONE_DIMENSIONAL_GRID_SIZE, TWO_DIMENSIONAL_GRID_SIZE).verify())


if __name__ == '__main__':
    unittest.main()
