# -*- coding: utf-8 -*-
from __future__ import print_function
import unittest
import math
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.calculator.geometry import *
from approachabilitykit.calculator.responses import ExampleTwoXStarResponse
from approachabilitykit.calculator.blackwell import *


class TestMatrixGame(unittest.TestCase):

    def test_small_games(self):
        # CASE 1
        game = solve_matrix_game([[1.0, -1.0], [-1.0, 1.0]])
        self.assertAlmostEqual(game['value'], 0.0)
        np.testing.assert_allclose(game['row'].weights, [0.5, 0.5])
        np.testing.assert_allclose(game['column'], [0.5, 0.5])

        # CASE 2
        game = solve_matrix_game([[1.0, 2.0], [3.0, 4.0]])
        self.assertAlmostEqual(game['value'], 2.0)
        np.testing.assert_allclose(game['row'].weights, [1.0, 0.0])
        np.testing.assert_allclose(game['column'], [0.0, 1.0])

        # CASE 3
        game = solve_matrix_game([[2.0, 5.0, 1.0]])
        self.assertEqual(game['value'], 5.0)
        np.testing.assert_allclose(game['column'], [0.0, 1.0, 0.0])

        # CASE 4
        game = solve_matrix_game([[2.0], [5.0], [1.0]])
        self.assertEqual(game['value'], 1.0)
        np.testing.assert_allclose(game['row'].weights, [0.0, 0.0, 1.0])

        # CASE 5
        game = solve_matrix_game(np.zeros((3, 4)))
        self.assertEqual(game['value'], 0.0)

    def test_rock_paper_scissors(self):
        game = solve_matrix_game([[0.0, 1.0, -1.0], [-1.0, 0.0, 1.0], [1.0, -1.0, 0.0]])
        self.assertAlmostEqual(game['value'], 0.0, places=7)
        np.testing.assert_allclose(game['row'].weights, np.full(3, 1.0 / 3.0), atol=1e-7)

    def test_random_games_close_the_gap(self):
        rng = np.random.Generator(np.random.PCG64(23))
        for shape in [(2, 5), (5, 2), (3, 4), (4, 4), (2, 2)]:
            for _ in range(10):
                M = rng.uniform(-3.0, 3.0, size=shape)
                game = solve_matrix_game(M)
                self.assertLessEqual(game['maxmin'], game['minmax'] + 1e-9)
                self.assertLessEqual(game['minmax'] - game['maxmin'], 1e-6, msg=repr(M))

    def test_bad_input(self):
        with self.assertRaises(DimensionError):
            solve_matrix_game([1.0, 2.0])
        with self.assertRaises(DimensionError):
            solve_matrix_game(np.zeros((0, 2)))


class TestBlackwellStrategy(unittest.TestCase):

    def test_quadrant_approaches_origin(self):
        body = example_two_quadrant_body()
        strategy = BlackwellStrategy(body, ExampleTwoXStarResponse())
        self.assertIsInstance(strategy.body, ConvexBody)
        self.assertEqual(strategy.body.count, 4)
        self.assertEqual(strategy.number_of_actions, 2)
        self.assertEqual(strategy.dimension, 1)

        body_norm = body_norm_bound(body)
        rng = np.random.Generator(np.random.PCG64(31))
        vertices = strategy.body.vertices
        for t in range(1, 2001):
            strategy.observe(vertices[int(rng.integers(vertices.shape[0]))])
            self.assertLessEqual(strategy.delta_norm, body_norm * math.sqrt(t) + 1e-9)
        self.assertEqual(strategy.rounds_played, 2000)
        self.assertLessEqual(abs(float(strategy.average_payoff[0])), body_norm / math.sqrt(2000.0) + 1e-9)

    def test_act_is_stable_until_observe(self):
        strategy = BlackwellStrategy(example_two_quadrant_body(), ExampleTwoXStarResponse())
        np.testing.assert_array_equal(strategy.average_payoff, [0.0])
        self.assertEqual(strategy.max_inequality_slack, 0.0)
        first = strategy.act()
        self.assertIs(strategy.act(), first)
        strategy.observe([[1.0, -1.0]])
        self.assertEqual(strategy.rounds_played, 1)

    def test_choose_and_step(self):
        strategy = BlackwellStrategy(example_two_quadrant_body(), ExampleTwoXStarResponse())
        for m in ([[1.0, -1.0]], [[0.0, -1.0]], [[1.0, 0.0]]):
            x, m_tilde = strategy.choose()
            self.assertIsInstance(x, MixedAction)
            self.assertTrue(strategy.body.contains(m_tilde))
            before = strategy.delta
            played = strategy.step(m, x, m_tilde)
            comparator = combine(ExampleTwoXStarResponse().respond(m_tilde), m_tilde)
            np.testing.assert_allclose(strategy.delta, before + played - comparator, atol=1e-12)
        self.assertEqual(strategy.rounds_played, 3)

    def test_bad_input(self):
        # CASE 1
        strategy = BlackwellStrategy(example_two_quadrant_body(), ExampleTwoXStarResponse(), audit=True)
        with self.assertRaises(DimensionError):
            strategy.observe([[1.0, 2.0, 3.0]])

        # CASE 2
        with self.assertRaises(AdversaryError):
            strategy.observe([[-1.0, 1.0]])

        # CASE 3
        strategy = BlackwellStrategy(example_two_quadrant_body(), ExampleTwoXStarResponse(), tolerance=-1.0)
        with self.assertRaises(InequalityViolationError) as context:
            strategy.observe([[1.0, -1.0]])
        self.assertEqual(context.exception.round_index, 1)


if __name__ == '__main__':
    unittest.main()
