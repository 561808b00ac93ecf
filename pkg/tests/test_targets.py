# -*- coding: utf-8 -*-
from __future__ import print_function
import unittest
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.calculator.geometry import *
from approachabilitykit.calculator.responses import *
from approachabilitykit.calculator.targets import *


class TestClosedForms(unittest.TestCase):

    def test_phi_star_matches_best_response(self):
        # CASE 1
        body = example_one_body()
        thetas, matrices = body.grid(101)
        np.testing.assert_allclose(PhiStarClosedForm(EXAMPLE_ONE_ID).values(matrices),
                                   PhiStar(NegativeOrthant(2)).values(matrices), atol=1e-9)

        # CASE 2
        body = example_two_body()
        thetas, matrices = body.grid(11)
        np.testing.assert_allclose(PhiStarClosedForm(EXAMPLE_TWO_ID).values(matrices),
                                   PhiStar(Singleton([0.0])).values(matrices), atol=1e-9)

    def test_spot_values(self):
        one = example_one_body()
        two = example_two_body()
        self.assertAlmostEqual(phi_star(one.matrix([0.5]), NegativeOrthant(2)), 2.5)
        self.assertEqual(cav_phi_star(one.matrix([0.5]), EXAMPLE_ONE_ID), 4.0)
        self.assertAlmostEqual(PhiPsiClosedForm(EXAMPLE_ONE_ID).value(one.matrix([0.5])), 3.5)
        self.assertAlmostEqual(alpha_x(one.matrix([0.5]), [1.0, 0.0], NegativeOrthant(2)), 3.5)
        self.assertAlmostEqual(alpha_x(one.matrix([0.5]), [0.0, 1.0], NegativeOrthant(2)), 2.5)
        self.assertEqual(cav_phi_star(two.matrix([0.0, 0.0]), EXAMPLE_TWO_ID), 1.0)
        self.assertEqual(cav_phi_star(two.matrix([1.0, -1.0]), EXAMPLE_TWO_ID), 0.0)
        self.assertAlmostEqual(PhiPsiClosedForm(EXAMPLE_TWO_ID).value(two.matrix([0.0, 0.0])), 1.0 / 3.0)

    def test_ordering(self):
        # CASE 1
        thetas, matrices = example_one_body().grid(101)
        phi = PhiStarClosedForm(EXAMPLE_ONE_ID).values(matrices)
        psi = PhiPsiClosedForm(EXAMPLE_ONE_ID).values(matrices)
        cav = CavPhiStarClosedForm(EXAMPLE_ONE_ID).values(matrices)
        self.assertTrue(np.all(phi <= psi + 1e-12))
        self.assertTrue(np.all(psi <= cav + 1e-12))

        # CASE 2
        thetas, matrices = example_two_body().grid(21)
        phi = PhiStarClosedForm(EXAMPLE_TWO_ID).values(matrices)
        psi = PhiPsiClosedForm(EXAMPLE_TWO_ID).values(matrices)
        self.assertTrue(np.all(phi <= psi + 1e-12))

    def test_unknown_example(self):
        with self.assertRaises(UnknownExampleError):
            PhiStarClosedForm('example3')
        with self.assertRaises(UnknownExampleError):
            CavPhiStarClosedForm(EXAMPLE_TWO_QUADRANT_ID)
        with self.assertRaises(UnknownExampleError):
            PhiPsiClosedForm(EXAMPLE_TWO_QUADRANT_ID)


class TestUpperConcaveEnvelope(unittest.TestCase):

    def test_one_parameter(self):
        # CASE 1
        envelope = UpperConcaveEnvelope([0.0, 1.0, 2.0], [0.0, -1.0, 0.0])
        self.assertEqual(envelope.dimension, 1)
        self.assertAlmostEqual(envelope(1.0), 0.0)

        # CASE 2
        envelope = UpperConcaveEnvelope([0.0, 1.0, 2.0], [0.0, 1.0, 0.0])
        self.assertAlmostEqual(envelope(0.5), 0.5)
        np.testing.assert_allclose(cav_oracle([0.0, 1.0, 2.0], [0.0, 1.0, 0.0]), [0.0, 1.0, 0.0])

    def test_two_parameters(self):
        # CASE 1
        points = np.array([[x, y] for x in (0.0, 0.5, 1.0) for y in (0.0, 0.5, 1.0)])
        values = 1.0 + 2.0 * points[:, 0] - points[:, 1]
        envelope = UpperConcaveEnvelope(points, values)
        self.assertAlmostEqual(envelope([0.25, 0.75]), 1.0 + 0.5 - 0.75)

        # CASE 2
        values = np.zeros(points.shape[0])
        values[4] = 1.0
        envelope = UpperConcaveEnvelope(points, values)
        self.assertAlmostEqual(envelope([0.5, 0.5]), 1.0)
        self.assertAlmostEqual(envelope([0.25, 0.5]), 0.5)

    def test_bad_input(self):
        with self.assertRaises(DimensionError):
            UpperConcaveEnvelope([0.0, 1.0], [0.0])
        with self.assertRaises(OracleError):
            UpperConcaveEnvelope([[0.0]], [1.0])
        with self.assertRaises(OracleError):
            UpperConcaveEnvelope(np.zeros((4, 3)), np.zeros(4))


class TestOracles(unittest.TestCase):

    def test_cav_phi_star_oracle(self):
        # CASE 1
        body = example_one_body()
        oracle = CavPhiStarOracle(PhiStar(NegativeOrthant(2)), body, resolution=101)
        for nu in (0.0, 0.3, 0.5, 1.0):
            self.assertAlmostEqual(oracle.value(body.matrix([nu])), 4.0, places=9)

        # CASE 2
        body = example_two_body()
        oracle = CavPhiStarOracle(PhiStarClosedForm(EXAMPLE_TWO_ID), body, resolution=11)
        closed = CavPhiStarClosedForm(EXAMPLE_TWO_ID)
        for theta in ([0.0, 0.0], [0.6, -0.4], [-1.0, 1.0], [0.2, 0.2], [1.0, 0.4]):
            m = body.matrix(theta)
            self.assertAlmostEqual(oracle.value(m), closed.value(m), places=9)

    def test_phi_psi_oracle_example_one(self):
        body = example_one_body()
        oracle = PhiPsiOracle(ExampleOneXStarResponse(), NegativeOrthant(2), body, resolution=201)
        closed = PhiPsiClosedForm(EXAMPLE_ONE_ID)
        self.assertEqual(oracle.budget, 5)
        for nu in np.linspace(0.0, 1.0, 21):
            m = body.matrix([nu])
            self.assertAlmostEqual(oracle.value(m), closed.value(m), places=9)

    def test_phi_psi_oracle_example_two(self):
        body = example_two_body()
        oracle = PhiPsiOracle(ExampleTwoXStarResponse(), Singleton([0.0]), body, resolution=21)
        closed = PhiPsiClosedForm(EXAMPLE_TWO_ID)
        for theta in ([0.0, 0.0], [0.4, 0.4], [-0.6, 0.2], [1.0, -1.0]):
            m = body.matrix(theta)
            self.assertAlmostEqual(oracle.value(m), closed.value(m), delta=5e-2)

        thetas, matrices = body.grid(7)
        np.testing.assert_allclose(oracle.values(matrices), [oracle.value(m) for m in matrices], atol=1e-12)
        self.assertEqual(oracle.values([]).size, 0)

    def test_budgets(self):
        # CASE 1
        body = example_one_body()
        oracle = PhiPsiOracle(ExampleOneXStarResponse(), NegativeOrthant(2), body, budget=1)
        self.assertAlmostEqual(oracle.value(body.matrix([0.5])), 2.5)

        # CASE 2
        body = example_two_body()
        single = phi_psi_oracle(body.matrix([0.0, 0.0]), ExampleTwoXStarResponse(), Singleton([0.0]), body, budget=1)
        pair = phi_psi_oracle(body.matrix([0.0, 0.0]), ExampleTwoXStarResponse(), Singleton([0.0]), body,
                              budget=2, resolution=11)
        self.assertEqual(single, 0.0)
        self.assertGreaterEqual(pair, single)
        self.assertLessEqual(pair, 1.0 / 3.0 + 1e-9)

        # CASE 3
        with self.assertRaises(InvalidParameterError):
            PhiPsiOracle(ExampleOneXStarResponse(), NegativeOrthant(2), example_one_body(), budget=0)
        with self.assertRaises(InvalidParameterError):
            PhiPsiOracle(ExampleOneXStarResponse(), NegativeOrthant(2), example_one_body(), budget=6)

    def test_constrained_phi_psi(self):
        response = ConstrainedXStarResponse(row_selector([0], 2), row_selector([1], 2), HalfLineAbove(1.0), HalfLineBelow(0.5))
        body = point_body([[1.0, 0.0], [1.0, 0.0]])
        target = ConstrainedPhiPsi(response, body)
        self.assertAlmostEqual(target.value([[1.0, 0.0], [1.0, 0.0]]), 0.5)

    def test_graph_distance(self):
        body = example_one_body()
        target = NegativeOrthant(2)
        phi = PhiPsiClosedForm(EXAMPLE_ONE_ID)

        # CASE 1
        m = body.matrix([0.3])
        r = combine(ExampleOneXStarResponse().respond(m), m)
        self.assertAlmostEqual(graph_distance(m, r, phi, body, target, resolution=11), 0.0, places=12)

        # CASE 2
        distance = graph_distance(M_DAGGER, [10.0, 10.0], PhiStarClosedForm(EXAMPLE_ONE_ID), body, target, resolution=11)
        self.assertGreater(distance, 0.0)
        self.assertLessEqual(distance, 6.0)


if __name__ == '__main__':
    unittest.main()
