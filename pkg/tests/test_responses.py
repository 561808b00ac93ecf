# -*- coding: utf-8 -*-
from __future__ import print_function
import unittest
import os
import math
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.calculator.geometry import *
from approachabilitykit.calculator.responses import *
from approachabilitykit.calculator.targets import PhiStarClosedForm


THIS_TEST_DIR = os.path.dirname(os.path.abspath(__file__))
TEST_TABLE_FILEPATH = THIS_TEST_DIR+"/"+"response_table.csv"


class TestGenericXStarResponse(unittest.TestCase):

    def test_example_one_values(self):
        body = example_one_body()
        response = GenericXStarResponse(NegativeOrthant(2, NORM_INFINITY))
        closed = PhiStarClosedForm(EXAMPLE_ONE_ID)

        # CASE 1
        action, value = response.solve(body.matrix([0.5]))
        np.testing.assert_allclose(action.weights, [0.0, 1.0])
        self.assertAlmostEqual(value, 2.5)

        # CASE 2
        action, value = response.solve(body.matrix([1.0]))
        np.testing.assert_allclose(action.weights, [1.0, 0.0])
        self.assertAlmostEqual(value, 4.0)

        # CASE 3
        for nu in np.linspace(0.0, 1.0, 41):
            m = body.matrix([nu])
            self.assertAlmostEqual(response.value(m), closed.value(m), places=9)

    def test_example_two_values(self):
        response = GenericXStarResponse(Singleton([0.0], NORM_INFINITY))
        # CASE 1
        action, value = response.solve([[0.5, -0.5]])
        np.testing.assert_allclose(action.weights, [0.5, 0.5])
        self.assertAlmostEqual(value, 0.0)

        # CASE 2
        self.assertAlmostEqual(response.value([[0.5, 1.0]]), 0.5)

    def test_identical_columns_favour_first_action(self):
        # CASE 1
        response = GenericXStarResponse(NegativeOrthant(2, NORM_INFINITY))
        np.testing.assert_allclose(response.respond([[-1.0, -1.0], [-1.0, -1.0]]).weights, [1.0, 0.0])

        # CASE 2
        m = np.full((2, 3), -1.0)
        np.testing.assert_allclose(response.respond(m).weights, [1.0, 0.0, 0.0])

    def test_linear_program_path(self):
        response = GenericXStarResponse(NegativeOrthant(2, NORM_INFINITY))
        m = np.array([[1.0, -1.0, 2.0], [-1.0, 1.0, 2.0]])
        action, value = response.solve(m)
        np.testing.assert_allclose(action.weights, [0.5, 0.5, 0.0], atol=1e-7)
        self.assertAlmostEqual(value, 0.0, places=7)

    def test_euclidean_paths(self):
        # CASE 1
        response = GenericXStarResponse(Singleton([0.0, 0.0], NORM_TWO))
        action, value = response.solve([[1.0, -1.0], [1.0, 0.0]])
        np.testing.assert_allclose(action.weights, [0.4, 0.6], atol=1e-6)
        self.assertAlmostEqual(value, math.sqrt(0.2), places=6)

        # CASE 2
        m = np.array([[1.0, 0.0, -1.0], [0.0, 1.0, -1.0]])
        action, value = response.solve(m)
        self.assertLess(value, 1e-4)

        # CASE 3
        response = GenericXStarResponse(Singleton([0.0, 0.0], NORM_TWO), max_iterations=1)
        with self.assertRaises(ConvergenceError) as context:
            response.solve(np.array([[3.0, 0.0, -1.0], [0.0, 2.0, -1.0]]))
        self.assertIsNotNone(context.exception.best_iterate)

    def test_bad_input(self):
        response = GenericXStarResponse(NegativeOrthant(2))
        with self.assertRaises(DimensionError):
            response.respond([[1.0, 2.0]])


class TestClosedFormResponses(unittest.TestCase):

    def test_example_one_x_star(self):
        body = example_one_body()
        response = ExampleOneXStarResponse()
        # CASE 1
        self.assertAlmostEqual(response.parameter(body.matrix([0.3])), 0.3)

        # CASE 2
        for nu, expect in [(0.0, [1.0, 0.0]), (0.2, [1.0, 0.0]), (0.5, [0.0, 1.0]), (0.8, [1.0, 0.0]), (1.0, [1.0, 0.0])]:
            np.testing.assert_allclose(response.respond(body.matrix([nu])).weights, expect)

    def test_example_two_x_star(self):
        response = ExampleTwoXStarResponse()
        # CASE 1
        x = response.respond([[1.0, -0.5]])
        self.assertAlmostEqual(combine(x, [[1.0, -0.5]])[0], 0.0)

        # CASE 2
        np.testing.assert_allclose(response.respond([[0.25, 0.75]]).weights, [1.0, 0.0])
        np.testing.assert_allclose(response.respond([[-0.25, -0.75]]).weights, [1.0, 0.0])
        np.testing.assert_allclose(response.respond([[0.75, 0.25]]).weights, [0.0, 1.0])

        # CASE 3
        np.testing.assert_allclose(response.respond([[0.0, 0.0]]).weights, [1.0, 0.0])
        with self.assertRaises(DimensionError):
            response.respond([[1.0, 2.0, 3.0]])

    def test_constant_and_callback(self):
        # CASE 1
        response = ConstantResponse([0.25, 0.75])
        np.testing.assert_allclose(respond(response, M_DAGGER).weights, [0.25, 0.75])
        with self.assertRaises(DimensionError):
            response.respond([[1.0, 2.0, 3.0]])

        # CASE 2
        response = CallbackResponse(lambda m: [1.0] + [0.0] * (m.shape[1] - 1))
        np.testing.assert_allclose(response([[1.0, 2.0, 3.0]]).weights, [1.0, 0.0, 0.0])

    def test_tabulated_response(self):
        body = example_one_body()
        thetas, matrices = body.grid(21)
        write_response_table(TEST_TABLE_FILEPATH, ExampleOneXStarResponse(), matrices)
        self.assertTrue(os.path.isfile(TEST_TABLE_FILEPATH))

        response = TabulatedResponse.from_csv(TEST_TABLE_FILEPATH)
        closed = ExampleOneXStarResponse()
        for nu in (0.0, 0.1, 0.5, 0.7, 0.9):
            m = body.matrix([nu])
            self.assertEqual(response.respond(m), closed.respond(m))
        with self.assertRaises(DimensionError):
            response.respond([[1.0, 2.0]])

        # Delete the file once tested.
        os.remove(TEST_TABLE_FILEPATH)


class TestConstrainedXStarResponse(unittest.TestCase):

    def build(self, norm_p=NORM_INFINITY):
        return ConstrainedXStarResponse(row_selector([0], 2), row_selector([1], 2),
                                        HalfLineAbove(1.0, norm_p), HalfLineBelow(0.5, norm_p))

    def test_row_selector(self):
        np.testing.assert_array_equal(row_selector([1], 3), [[0.0, 1.0, 0.0]])

    def test_two_action_interval(self):
        response = self.build()
        m = [[1.0, 0.0], [1.0, 0.0]]
        x = respond_constrained(response, m)
        np.testing.assert_allclose(x.weights, [0.5, 0.5])
        self.assertEqual(response.violation(x, m), 0.0)

    def test_linear_program(self):
        response = self.build()
        m = [[1.0, 0.0, 0.5], [1.0, 0.0, 0.2]]
        x = response.respond(m)
        np.testing.assert_allclose(x.weights, [0.375, 0.0, 0.625], atol=1e-6)
        self.assertLessEqual(response.violation(x, m), 1e-9)

    def test_penalty(self):
        response = self.build(NORM_TWO)
        m = [[1.0, 0.0, 0.5], [1.0, 0.0, 0.2]]
        x = response.respond(m)
        self.assertLessEqual(response.violation(x, m), 1e-6)
        self.assertLessEqual(response.payoff_set.distance(response.payoff_map @ combine(x, m)), 0.3125 + 0.05)

    def test_infeasible(self):
        # CASE 1
        with self.assertRaises(InfeasibleConstraintError):
            self.build().respond([[1.0, 0.0], [1.0, 1.0]])

        # CASE 2
        with self.assertRaises(InfeasibleConstraintError):
            self.build().respond([[1.0], [1.0]])

        # CASE 3
        with self.assertRaises(InfeasibleConstraintError):
            self.build().respond([[1.0, 0.0, 0.5], [1.0, 0.9, 0.6]])

    def test_project_onto_constraint(self):
        x = project_onto_constraint(np.array([1.0, 0.0]), np.array([[1.0, 0.0]]), HalfLineBelow(0.5))
        np.testing.assert_allclose(x, [0.5, 0.5], atol=1e-9)


if __name__ == '__main__':
    unittest.main()
