# -*- coding: utf-8 -*-
from __future__ import print_function
import unittest
import math
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.calculator.geometry import MixedAction
from approachabilitykit.calculator.regret import *
from approachabilitykit.foundation.utils import geometric_checkpoints
from approachabilitykit.harness.rates import fit_power_law


def gain_sequences(number_of_actions, payoff_range, horizon, seed):
    """
    A handful of gain generators in [-B, B]: iid uniform, alternating
    leaders, a fixed best action, a switch of the best action half way and
    an adaptive one rewarding the currently lightest action.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    A = number_of_actions
    B = payoff_range

    def iid(forecaster, t):
        return rng.uniform(-B, B, size=A)

    def alternating(forecaster, t):
        gains = np.full(A, -B)
        gains[t % 2] = B
        return gains

    def fixed(forecaster, t):
        gains = rng.uniform(-B, 0.5 * B, size=A)
        gains[A - 1] = B
        return gains

    def switch(forecaster, t):
        gains = np.full(A, -B)
        gains[0 if t < horizon // 2 else A - 1] = B
        return gains

    def adaptive(forecaster, t):
        gains = np.full(A, -B)
        gains[int(np.argmin(forecaster.next_action().weights))] = B
        return gains

    return [iid, alternating, fixed, switch, adaptive]


def play(forecaster, generator, horizon):
    for t in range(horizon):
        forecaster.observe(generator(forecaster, t))
    return forecaster.regret()


class TestPolynomialWeightsForecaster(unittest.TestCase):

    def test_initial_state(self):
        forecaster = PolynomialWeightsForecaster(4)
        np.testing.assert_allclose(forecaster.next_action().weights, np.full(4, 0.25))
        self.assertEqual(forecaster.regret(), 0.0)
        self.assertEqual(forecaster.round, 0)

    def test_exponent(self):
        self.assertEqual(PolynomialWeightsForecaster(2).exponent, 2.0)
        self.assertAlmostEqual(PolynomialWeightsForecaster(8).exponent, 2.0 * math.log(8.0))
        self.assertEqual(PolynomialWeightsForecaster(1).exponent, 2.0)

    def test_weights_follow_positive_regret(self):
        forecaster = PolynomialWeightsForecaster(2)
        forecaster.observe([1.0, 0.0])
        # Regret (0.5, -0.5): all the mass on the first action.
        np.testing.assert_allclose(forecaster.next_action().weights, [1.0, 0.0])
        np.testing.assert_allclose(forecaster.cumulative_regret, [0.5, -0.5])

    def test_dominating_action(self):
        forecaster = PolynomialWeightsForecaster(3)
        for _ in range(200):
            forecaster.observe([0.0, 1.0, 0.0])
        self.assertGreater(forecaster.next_action().weights[1], 0.99)
        self.assertLess(forecaster.regret(), 2.0)

    def test_bad_input(self):
        forecaster = PolynomialWeightsForecaster(2)
        with self.assertRaises(DimensionError):
            forecaster.observe([1.0, 2.0, 3.0])
        with self.assertRaises(InvalidParameterError):
            forecaster.observe([float('nan'), 0.0])
        with self.assertRaises(InvalidParameterError):
            PolynomialWeightsForecaster(0)

    def test_regret_bounds(self):
        forecaster = PolynomialWeightsForecaster(2)
        expect = 4.0 * 10.0 * math.sqrt(math.log(2.0))
        self.assertAlmostEqual(forecaster.assumption_regret_bound(1.0, 100), expect)
        self.assertAlmostEqual(forecaster.theoretical_regret_bound(1.0, 100),
                               2.0 * math.sqrt(2.0 * math.e) * 10.0 * math.sqrt(math.log(2.0)))

    def test_regret_within_assumption_bound(self):
        # Short corpus; the long one runs with the acceptance tests.
        horizon = 500
        for A in (2, 3, 5):
            for B in (0.1, 1.0, 50.0):
                for generator in gain_sequences(A, B, horizon, seed=A):
                    forecaster = PolynomialWeightsForecaster(A)
                    regret = play(forecaster, generator, horizon)
                    self.assertLessEqual(regret, forecaster.assumption_regret_bound(B, horizon),
                                         '%s with A=%d, B=%r' % (generator.__name__, A, B))


    def test_gains_scale_freely(self):
        # Multiplying every gain by the same factor must not move the weights.
        rng = np.random.Generator(np.random.PCG64(17))
        plain = PolynomialWeightsForecaster(4)
        scaled = PolynomialWeightsForecaster(4)
        for t in range(500):
            np.testing.assert_allclose(scaled.next_action().weights, plain.next_action().weights,
                                       rtol=1e-9, atol=1e-12, err_msg='round %d' % t)
            gains = rng.uniform(-1.0, 1.0, size=4)
            plain.observe(gains)
            scaled.observe(7.5 * gains)
        self.assertAlmostEqual(scaled.regret(), 7.5 * plain.regret(), places=9)
        np.testing.assert_allclose(scaled.cumulative_regret, 7.5 * plain.cumulative_regret, rtol=1e-9, atol=1e-9)

    def test_regret_grows_like_square_root(self):
        horizon = 4000
        checkpoints = geometric_checkpoints(horizon)
        seeds = range(30)
        totals = np.zeros(len(checkpoints))
        for seed in seeds:
            rng = np.random.Generator(np.random.PCG64(1000 + seed))
            forecaster = PolynomialWeightsForecaster(4)
            regrets = []
            for t in range(1, horizon + 1):
                forecaster.observe(rng.uniform(-1.0, 1.0, size=4))
                if t == checkpoints[len(regrets)]:
                    regrets.append(forecaster.regret())
            totals += np.array(regrets)
        fit = fit_power_law(checkpoints, totals / len(seeds), t_min=100)
        self.assertTrue(fit.converged or fit.slope < 0.6, repr(fit))
        self.assertGreater(totals[-1], 0.0)


class TestConstantForecaster(unittest.TestCase):

    def test_constant_forecaster(self):
        # CASE 1
        action = MixedAction([1.0, 0.0])
        forecaster = ConstantForecaster(action)
        for _ in range(10):
            forecaster.observe([0.0, 1.0])
        self.assertEqual(forecaster.next_action(), action)
        self.assertAlmostEqual(forecaster.regret(), 10.0)

        # CASE 2
        build = constant_forecaster_factory(action)
        self.assertEqual(build(2).next_action(), action)
        with self.assertRaises(DimensionError):
            build(3)


if __name__ == '__main__':
    unittest.main()
