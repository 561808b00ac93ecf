# -*- coding: utf-8 -*-
"""
Constants for the 'approachabilitykit' python library.
"""
import math


# Supported norms for the expansions C_alpha of a target set.
#

NORM_ONE = 1.0
NORM_TWO = 2.0
NORM_INFINITY = float('inf')
SUPPORTED_NORMS = (NORM_ONE, NORM_TWO, NORM_INFINITY)


# Numerical tolerances.
#

MIXED_ACTION_TOLERANCE = 1e-12
CONTAINMENT_TOLERANCE = 1e-9
POLYTOPE_PROJECTION_TOLERANCE = 1e-9
POLYTOPE_PROJECTION_MAX_ITERATIONS = 10000
RESPONSE_OBJECTIVE_TOLERANCE = 1e-8
RESPONSE_MAX_ITERATIONS = 50000
CONSTRAINT_TOLERANCE = 1e-6
PENALTY_INITIAL_WEIGHT = 1.0
PENALTY_GROWTH = 10.0
PENALTY_ROUNDS = 6
MATRIX_GAME_TOLERANCE = 1e-7
INEQUALITY_TOLERANCE = 1e-6
AUDIT_TOLERANCE = 1e-9
LINE_ENVELOPE_TIE_TOLERANCE = 1e-12


# Grid resolutions used by the oracles.
#

ONE_DIMENSIONAL_GRID_SIZE = 1001
TWO_DIMENSIONAL_GRID_SIZE = 101
DECOMPOSITION_WEIGHT_GRID_SIZE = 21
SPHERE_DIRECTION_COUNT = 256
ENVELOPE_EVALUATION_CHUNK = 256


# Regret minimization.
#

ASSUMPTION_REGRET_CONSTANT = 4.0
POLYNOMIAL_WEIGHTS_REGRET_CONSTANT = 2.0 * math.sqrt(2.0 * math.e)


# Adversaries.
#

SWITCHING_INITIAL_EPSILON = 0.1


# Harness.
#

CHECKPOINT_RATIO = 1.2
CSV_FLOAT_FORMAT = '%.17g'
RATE_FIT_MIN_POINTS = 5
OUTPUT_DIR_ENV_VAR = 'APPROACHABILITYKIT_OUTPUT_DIR'
SUMMARY_DOCUMENT_ID = 'summary'
REPORT_DOCUMENT_ID = 'report'
RATE_FIT_T_MIN = 100
METADATA_PREFIX = '# '


# Scenario identifiers.
#

EXAMPLE_ONE_ID = 'example1'
EXAMPLE_TWO_ID = 'example2'
EXAMPLE_TWO_QUADRANT_ID = 'example2_quadrant'
CONSTRAINED_ID = 'constrained'
CUSTOM_ID = 'custom'


# Example 1 payoff matrices; rows are payoff coordinates, columns actions.
# Column a of M_DAGGER is m_dagger_a.
#

M_DAGGER = ((3.0, 0.0),
            (4.0, 5.0))
M_SHARP = ((4.0, 5.0),
           (3.0, 0.0))
