# -*- coding: utf-8 -*-
from __future__ import print_function
import unittest
import math
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.foundation.utils import *


class TestUtils(unittest.TestCase):

    def test_check_norm(self):
        # CASE 1
        self.assertEqual(check_norm('inf'), NORM_INFINITY)
        self.assertEqual(check_norm(' Infinity '), NORM_INFINITY)

        # CASE 2
        self.assertEqual(check_norm(2), NORM_TWO)
        self.assertEqual(check_norm('1'), NORM_ONE)

        # CASE 3
        with self.assertRaises(InvalidParameterError):
            check_norm(3)
        with self.assertRaises(InvalidParameterError):
            check_norm('euclid')

    def test_dual_norm(self):
        self.assertEqual(dual_norm(1), NORM_INFINITY)
        self.assertEqual(dual_norm('inf'), NORM_ONE)
        self.assertEqual(dual_norm(2), NORM_TWO)

    def test_lp_norm(self):
        self.assertAlmostEqual(lp_norm([3.0, -4.0], NORM_TWO), 5.0)
        self.assertAlmostEqual(lp_norm([3.0, -4.0], NORM_ONE), 7.0)
        self.assertAlmostEqual(lp_norm([3.0, -4.0], NORM_INFINITY), 4.0)

    def test_triangular_root(self):
        # CASE 1
        for t, expect in [(0, 0), (1, 1), (2, 1), (3, 2), (5, 2), (6, 3), (9, 3), (10, 4)]:
            self.assertEqual(triangular_root(t), expect)

        # CASE 2
        for n in range_inclusive(1, 2000):
            self.assertEqual(triangular_root(triangular(n)), n)
            self.assertEqual(triangular_root(triangular(n) - 1), n - 1)

    def test_block_of_round(self):
        # CASE 1
        expect = [1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5]
        self.assertEqual([block_of_round(t) for t in range_inclusive(1, 11)], expect)

        # CASE 2
        for n in range_inclusive(1, 500):
            self.assertEqual(block_of_round(triangular(n - 1) + 1), n)
            self.assertEqual(block_of_round(triangular(n)), n)

        # CASE 3
        with self.assertRaises(InvalidParameterError):
            block_of_round(0)

    def test_geometric_checkpoints(self):
        # CASE 1
        self.assertEqual(geometric_checkpoints(10), list(range_inclusive(1, 10)))

        # CASE 2
        checkpoints = geometric_checkpoints(100000)
        self.assertEqual(checkpoints[0], 1)
        self.assertEqual(checkpoints[-1], 100000)
        self.assertTrue(all(a < b for a, b in zip(checkpoints, checkpoints[1:])))
        self.assertIn(int(math.ceil(1.2 ** 40)), checkpoints)

        # CASE 3
        self.assertEqual(geometric_checkpoints(1), [1])
        with self.assertRaises(InvalidParameterError):
            geometric_checkpoints(0)
        with self.assertRaises(InvalidParameterError):
            geometric_checkpoints(10, ratio=1.0)

    def test_every_round_checkpoints(self):
        self.assertEqual(every_round_checkpoints(4), [1, 2, 3, 4])

    def test_format_float(self):
        # CASE 1
        self.assertEqual(format_float(0.5), '0.5')

        # CASE 2
        value = 1.0 / 3.0
        self.assertEqual(float(format_float(value)), value)

    def test_sphere_directions(self):
        # CASE 1
        directions = sphere_directions(2, 8)
        self.assertEqual(directions.shape, (8, 2))
        np.testing.assert_allclose(np.linalg.norm(directions, axis=1), np.ones(8))

        # CASE 2
        first = sphere_directions(3)
        second = sphere_directions(3)
        np.testing.assert_array_equal(first, second)
        np.testing.assert_allclose(np.linalg.norm(first, axis=1), np.ones(first.shape[0]))

    def test_minimize_line_envelope(self):
        # CASE 1
        x, value = minimize_line_envelope([0.0, 1.0], [1.0, -1.0])
        self.assertAlmostEqual(x, 0.5)
        self.assertAlmostEqual(value, 0.5)

        # CASE 2
        x, value = minimize_line_envelope([2.0], [0.0])
        self.assertEqual(x, 1.0)
        self.assertEqual(value, 2.0)

        # CASE 3
        x, value = minimize_line_envelope([0.0, 0.0], [1.0, 2.0])
        self.assertEqual(x, 0.0)
        self.assertEqual(value, 0.0)

        # CASE 4
        with self.assertRaises(InvalidParameterError):
            minimize_line_envelope([], [])

    def test_replace_all(self):
        data = "Scenario {{ name }} played for {{ horizon }} rounds."
        rep = {
            "{{ name }}": "example1",
            "{{ horizon }}": "1000"
        }
        out_data = replace_all(data, rep)
        self.assertEqual(out_data, "Scenario example1 played for 1000 rounds.")


if __name__ == '__main__':
    unittest.main()
