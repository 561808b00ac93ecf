# -*- coding: utf-8 -*-
"""
Checks the closed-form target functions of both worked examples against
their grid, hull and decomposition oracles, and writes the grids as CSV for plotting.
"""

import csv
import logging
import os
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.foundation.utils import *
from approachabilitykit.calculator.geometry import *
from approachabilitykit.calculator.responses import *
from approachabilitykit.calculator.targets import *


logger = logging.getLogger(__name__)


# Spot values of the worked examples: (name, example, parameters, target, expected).
SPOT_VALUES = (
    ('phi_star_example1_half', EXAMPLE_ONE_ID, (0.5,), 'phi_star', 2.5),
    ('phi_star_example1_one', EXAMPLE_ONE_ID, (1.0,), 'phi_star', 4.0),
    ('cav_example1_half', EXAMPLE_ONE_ID, (0.5,), 'cav_phi_star', 4.0),
    ('phi_x_star_example1_half', EXAMPLE_ONE_ID, (0.5,), 'phi_x_star', 3.5),
    ('alpha_1_example1_half', EXAMPLE_ONE_ID, (0.5,), 'alpha_1', 3.5),
    ('alpha_0_example1_half', EXAMPLE_ONE_ID, (0.5,), 'alpha_0', 2.5),
    ('phi_star_example2_mixed_signs', EXAMPLE_TWO_ID, (0.5, -0.5), 'phi_star', 0.0),
    ('cav_example2_origin', EXAMPLE_TWO_ID, (0.0, 0.0), 'cav_phi_star', 1.0),
    ('cav_example2_corner', EXAMPLE_TWO_ID, (1.0, -1.0), 'cav_phi_star', 0.0),
    ('phi_x_star_example2_origin', EXAMPLE_TWO_ID, (0.0, 0.0), 'phi_x_star', 1.0 / 3.0),
    ('alpha_half_example2_origin', EXAMPLE_TWO_ID, (0.0, 0.0), 'alpha_half', 0.0),
)
SPOT_TOLERANCE = 1e-12
ORACLE_SPOT_TOLERANCE = 5e-2


class VerificationCheck:

    def __init__(self, name, max_error, tolerance):
        self.name = name
        self.max_error = float(max_error)
        self.tolerance = float(tolerance)

    @property
    def passed(self):
        return self.max_error <= self.tolerance

    @property
    def status(self):
        return 'PASS' if self.passed else 'FAIL'

    def __repr__(self):
        return 'VerificationCheck(%s, %s, error=%.3g)' % (self.name, self.status, self.max_error)


class TargetVerifier:
    """
    ``expected_overrides`` replaces spot values by name; it exists to run
    the failure path on purpose.
    """

    #--------------------------------------------------------------------------#
    #                     P U B L I C  F U N C T I O N S                       #
    #--------------------------------------------------------------------------#

    def __init__(self, resolution_one=ONE_DIMENSIONAL_GRID_SIZE, resolution_two=TWO_DIMENSIONAL_GRID_SIZE,
                 expected_overrides=None):
        self._resolution_one = resolution_one
        self._resolution_two = resolution_two
        self._overrides = {} if expected_overrides is None else dict(expected_overrides)
        self._checks = []
        self._grids = {}

    @property
    def checks(self):
        return list(self._checks)

    @property
    def passed(self):
        return all(check.passed for check in self._checks)

    def verify(self):
        self._checks = []
        self.verify_example_one()
        self.verify_example_two()
        self.verify_spot_values()
        for check in self._checks:
            log = logger.info if check.passed else logger.warning
            log('%s %s (error %.3g, tolerance %.3g)', check.status, check.name, check.max_error, check.tolerance)
        return self.passed

    def write(self, output_dir):
        """
        Write verify_targets.csv and the two example grids; returns the paths.
        """
        os.makedirs(output_dir, exist_ok=True)
        paths = []
        filepath = os.path.join(output_dir, 'verify_targets.csv')
        with open(filepath, 'w', newline='') as output_file_handle:
            writer = csv.writer(output_file_handle, lineterminator='\n')
            writer.writerow(['check', 'max_error', 'tolerance', 'status'])
            for check in self._checks:
                writer.writerow([check.name, format_float(check.max_error), format_float(check.tolerance), check.status])
        paths.append(filepath)
        for example_id, (header, columns) in self._grids.items():
            filepath = os.path.join(output_dir, '%s_targets.csv' % example_id)
            with open(filepath, 'w', newline='') as output_file_handle:
                writer = csv.writer(output_file_handle, lineterminator='\n')
                writer.writerow(header)
                for row in zip(*columns):
                    writer.writerow([format_float(value) for value in row])
            paths.append(filepath)
        return paths

    #--------------------------------------------------------------------------#
    #                     P R I V A T E  F U N C T I O N S                     #
    #--------------------------------------------------------------------------#

    def add_check(self, name, expected, actual, tolerance):
        error = float(np.max(np.abs(np.asarray(expected, dtype=float) - np.asarray(actual, dtype=float))))
        self._checks.append(VerificationCheck(name, error, tolerance))

    def verify_example_one(self):
        body = example_one_body()
        target = NegativeOrthant(2, NORM_INFINITY)
        thetas, matrices = body.grid(self._resolution_one)

        phi_closed = PhiStarClosedForm(EXAMPLE_ONE_ID).values(matrices)
        phi_oracle = PhiStar(target).grid_values(body, self._resolution_one)
        self.add_check('example1_phi_star', phi_closed, phi_oracle, 1e-6)

        cav_closed = CavPhiStarClosedForm(EXAMPLE_ONE_ID).values(matrices)
        cav_grid = cav_oracle(thetas, phi_oracle)
        self.add_check('example1_cav_phi_star', cav_closed, cav_grid, 1e-3)
        self.add_check('example1_cav_identically_four', np.full(cav_grid.size, 4.0), cav_grid, 1e-9)

        psi_closed = PhiPsiClosedForm(EXAMPLE_ONE_ID).values(matrices)
        psi_oracle = PhiPsiOracle(ExampleOneXStarResponse(), target, body, resolution=self._resolution_one).values(matrices)
        self.add_check('example1_phi_x_star', psi_closed, psi_oracle, 5e-2)

        alpha_0 = AlphaX([0.0, 1.0], target).values(matrices)
        alpha_1 = AlphaX([1.0, 0.0], target).values(matrices)
        self.add_check('example1_phi_x_star_is_alpha_1', alpha_1, psi_closed, 1e-12)

        self._grids[EXAMPLE_ONE_ID] = (
            ['nu', 'phi_star', 'phi_star_oracle', 'cav_phi_star', 'cav_phi_star_oracle',
             'phi_x_star', 'phi_x_star_oracle', 'alpha_0', 'alpha_1'],
            [thetas[:, 0], phi_closed, phi_oracle, cav_closed, cav_grid, psi_closed, psi_oracle, alpha_0, alpha_1]
        )

    def verify_example_two(self):
        body = example_two_body()
        target = Singleton([0.0], NORM_INFINITY)
        thetas, matrices = body.grid(self._resolution_two)

        phi_closed = PhiStarClosedForm(EXAMPLE_TWO_ID).values(matrices)
        phi_oracle = PhiStar(target).grid_values(body, self._resolution_two)
        self.add_check('example2_phi_star', phi_closed, phi_oracle, 1e-6)

        cav_closed = CavPhiStarClosedForm(EXAMPLE_TWO_ID).values(matrices)
        cav_grid = cav_oracle(thetas, phi_oracle)
        self.add_check('example2_cav_phi_star', cav_closed, cav_grid, 5e-2)

        psi_closed = PhiPsiClosedForm(EXAMPLE_TWO_ID).values(matrices)
        psi_oracle = PhiPsiOracle(ExampleTwoXStarResponse(), target, body, resolution=self._resolution_two).values(matrices)
        self.add_check('example2_phi_x_star', psi_closed, psi_oracle, 5e-2)

        alpha_half = AlphaX([0.5, 0.5], target).values(matrices)
        self.add_check('example2_alpha_half_below_phi_x_star', np.zeros(1), [max(0.0, float(np.max(alpha_half - psi_closed)))], 1e-12)

        self._grids[EXAMPLE_TWO_ID] = (
            ['v', 'w', 'phi_star', 'phi_star_oracle', 'cav_phi_star', 'cav_phi_star_oracle',
             'phi_x_star', 'phi_x_star_oracle', 'alpha_half'],
            [thetas[:, 0], thetas[:, 1], phi_closed, phi_oracle, cav_closed, cav_grid, psi_closed, psi_oracle, alpha_half]
        )

    def verify_spot_values(self):
        bodies = {EXAMPLE_ONE_ID: example_one_body(), EXAMPLE_TWO_ID: example_two_body()}
        functions = {
            EXAMPLE_ONE_ID: {
                'phi_star': PhiStarClosedForm(EXAMPLE_ONE_ID),
                'cav_phi_star': CavPhiStarClosedForm(EXAMPLE_ONE_ID),
                'phi_x_star': PhiPsiClosedForm(EXAMPLE_ONE_ID),
                'alpha_0': AlphaX([0.0, 1.0], NegativeOrthant(2)),
                'alpha_1': AlphaX([1.0, 0.0], NegativeOrthant(2))
            },
            EXAMPLE_TWO_ID: {
                'phi_star': PhiStarClosedForm(EXAMPLE_TWO_ID),
                'cav_phi_star': CavPhiStarClosedForm(EXAMPLE_TWO_ID),
                'phi_x_star': PhiPsiClosedForm(EXAMPLE_TWO_ID),
                'alpha_half': AlphaX([0.5, 0.5], Singleton([0.0]))
            }
        }
        for name, example_id, parameters, function, expected in SPOT_VALUES:
            expected = self._overrides.get(name, expected)
            m = bodies[example_id].matrix(parameters)
            self.add_check(name, [expected], [functions[example_id][function].value(m)], SPOT_TOLERANCE)

        # The origin value of phi^x* once more, from the decomposition oracle.
        expected = self._overrides.get('phi_x_star_example2_origin', 1.0 / 3.0)
        oracle = PhiPsiOracle(ExampleTwoXStarResponse(), Singleton([0.0]), bodies[EXAMPLE_TWO_ID], resolution=self._resolution_two)
        self.add_check('phi_x_star_example2_origin_oracle', [expected], [oracle.value(bodies[EXAMPLE_TWO_ID].matrix((0.0, 0.0)))],
                       ORACLE_SPOT_TOLERANCE)
