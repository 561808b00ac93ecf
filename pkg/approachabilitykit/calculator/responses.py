# -*- coding: utf-8 -*-
"""
Response functions Psi: K -> simplex. The block strategy queries one of
them once per block on the block's average payoff matrix; the target
functions of ``targets`` are built on top of them.
"""

import csv
import logging
import math
import re
import numpy as np
from scipy.optimize import linprog, minimize_scalar  # Third party library for exact LP solves and scalar search.
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.foundation.utils import *
from approachabilitykit.calculator.geometry import *


logger = logging.getLogger(__name__)


class ResponseFunction:
    """
    Base class of every response function. Subclasses implement ``respond``,
    which must return a valid mixed action and be deterministic.
    """

    response_id = 'response'

    def respond(self, m):
        raise NotImplementedError

    def __call__(self, m):
        return self.respond(m)

    def __repr__(self):
        return '%s()' % self.__class__.__name__


class GenericXStarResponse(ResponseFunction):
    """
    Best response x*(m) in argmin_x d_p(x (.) m, C).

    Two-action problems whose distance is a maximum of finitely many affine
    pieces are solved exactly on the line envelope; other p in {1, inf}
    problems go through a linear program; p = 2 problems use a bounded
    scalar search (two actions) or accelerated projected gradient.
    """

    response_id = 'generic_x_star'

    def __init__(self, target, tolerance=RESPONSE_OBJECTIVE_TOLERANCE, max_iterations=RESPONSE_MAX_ITERATIONS):
        assert isinstance(target, TargetSet), 'target is not a TargetSet class: %r' % target
        self._target = target
        self._tolerance = tolerance
        self._max_iterations = max_iterations

    #--------------------------------------------------------------------------#
    #                     P U B L I C  F U N C T I O N S                       #
    #--------------------------------------------------------------------------#

    @property
    def target(self):
        return self._target

    def respond(self, m):
        return self.solve(m)[0]

    def value(self, m):
        return self.solve(m)[1]

    def solve(self, m):
        """
        Returns the tuple (x, d_p(x (.) m, C)).
        """
        entries = payoff_array(m)
        if entries.ndim != 2 or entries.shape[0] != self._target.dimension:
            raise DimensionError('payoff matrix of shape %r against a target of dimension %d' % (entries.shape, self._target.dimension))
        number_of_actions = entries.shape[1]
        directions, offsets, exact = self._target.dual_pieces()

        if number_of_actions == 1:
            action = MixedAction.pure(1, 0)
        elif number_of_actions == 2 and exact:
            action = self.solve_line_envelope(entries, directions, offsets)
        elif self._target.norm_p != NORM_TWO:
            action = solve_response_program(entries, self._target)
        elif number_of_actions == 2:
            action = self.solve_scalar(entries)
        else:
            action = self.solve_projected_gradient(entries)
        return action, self._target.distance(entries @ action.weights)

    #--------------------------------------------------------------------------#
    #                     P R I V A T E  F U N C T I O N S                     #
    #--------------------------------------------------------------------------#

    def solve_line_envelope(self, entries, directions, offsets):
        first = entries[:, 0]
        second = entries[:, 1]
        intercepts = np.concatenate(([0.0], directions @ second - offsets))
        slopes = np.concatenate(([0.0], directions @ (first - second)))
        x, value = minimize_line_envelope(intercepts, slopes)
        return MixedAction([x, 1.0 - x])

    def solve_scalar(self, entries):
        first = entries[:, 0]
        second = entries[:, 1]
        objective = lambda x: self._target.distance(second + x * (first - second))
        result = minimize_scalar(objective, bounds=(0.0, 1.0), method='bounded', options={'xatol': 1e-10})
        candidates = [1.0, float(result.x), 0.0]
        values = [objective(x) for x in candidates]
        best = min(values)
        for x, value in zip(candidates, values):
            if value <= best + LINE_ENVELOPE_TIE_TOLERANCE * (1.0 + best):
                return MixedAction([x, 1.0 - x])

    def solve_projected_gradient(self, entries):
        number_of_actions = entries.shape[1]
        lipschitz = float(np.linalg.norm(entries, ord=2)) ** 2
        if lipschitz == 0.0:
            return MixedAction.pure(number_of_actions, 0)

        x = np.full(number_of_actions, 1.0 / number_of_actions)
        momentum = x.copy()
        t = 1.0
        best_x = x
        best_value = float('inf')
        for iteration in range(self._max_iterations):
            r = entries @ momentum
            gradient = entries.T @ (r - self._target.project(r))
            updated = simplex_projection(momentum - gradient / lipschitz)

            # Frank-Wolfe gap of the squared distance at the new iterate.
            r = entries @ updated
            residual = r - self._target.project(r)
            gradient = entries.T @ residual
            gap = float(gradient @ updated - gradient.min())
            value = float(np.linalg.norm(residual))
            if value < best_value:
                best_x, best_value = updated, value
            if gap <= self._tolerance * (1.0 + lipschitz):
                logger.debug('projected gradient converged after %d iterations', iteration + 1)
                return MixedAction(updated)

            t_next = (1.0 + math.sqrt(1.0 + 4.0 * t * t)) / 2.0
            momentum = updated + ((t - 1.0) / t_next) * (updated - x)
            x = updated
            t = t_next
        raise ConvergenceError('best response did not converge in %d iterations' % self._max_iterations,
                               best_iterate=MixedAction(best_x), best_value=best_value)

    def __repr__(self):
        return 'GenericXStarResponse(%r)' % self._target


class ConstrainedXStarResponse(ResponseFunction):
    """
    Constrained best response for sample-path constraints:

        x*(m) in argmin { d_p(P (x (.) m), payoff_set) : G (x (.) m) in cost_set }.

    ``payoff_map`` and ``cost_map`` are the linear maps P and G given as
    matrices acting on the stacked vector payoff.
    """

    response_id = 'constrained_x_star'

    def __init__(self, payoff_map, cost_map, payoff_set, cost_set,
                 tolerance=CONSTRAINT_TOLERANCE, max_iterations=RESPONSE_MAX_ITERATIONS):
        assert isinstance(payoff_set, TargetSet), 'payoff_set is not a TargetSet class: %r' % payoff_set
        assert isinstance(cost_set, TargetSet), 'cost_set is not a TargetSet class: %r' % cost_set
        self._payoff_map = np.atleast_2d(np.array(payoff_map, dtype=float))
        self._cost_map = np.atleast_2d(np.array(cost_map, dtype=float))
        if self._payoff_map.shape[0] != payoff_set.dimension:
            raise DimensionError('payoff map has %d rows, payoff set dimension %d' % (self._payoff_map.shape[0], payoff_set.dimension))
        if self._cost_map.shape[0] != cost_set.dimension:
            raise DimensionError('cost map has %d rows, cost set dimension %d' % (self._cost_map.shape[0], cost_set.dimension))
        if self._payoff_map.shape[1] != self._cost_map.shape[1]:
            raise DimensionError('payoff and cost maps act on different dimensions')
        self._payoff_set = payoff_set
        self._cost_set = cost_set
        self._tolerance = tolerance
        self._max_iterations = max_iterations

    #--------------------------------------------------------------------------#
    #                     P U B L I C  F U N C T I O N S                       #
    #--------------------------------------------------------------------------#

    @property
    def payoff_map(self):
        return self._payoff_map.copy()

    @property
    def cost_map(self):
        return self._cost_map.copy()

    @property
    def payoff_set(self):
        return self._payoff_set

    @property
    def cost_set(self):
        return self._cost_set

    def respond(self, m):
        entries = payoff_array(m)
        if entries.ndim != 2 or entries.shape[0] != self._payoff_map.shape[1]:
            raise DimensionError('payoff matrix of shape %r, maps act on dimension %d' % (entries.shape, self._payoff_map.shape[1]))
        payoff = self._payoff_map @ entries
        cost = self._cost_map @ entries
        number_of_actions = entries.shape[1]
        directions, offsets, exact = self._payoff_set.dual_pieces()
        cost_directions, cost_offsets, cost_exact = self._cost_set.dual_pieces()

        if number_of_actions == 1:
            if self._cost_set.distance(cost[:, 0]) > self._tolerance:
                raise InfeasibleConstraintError('the only action violates the cost constraint')
            return MixedAction.pure(1, 0)
        if number_of_actions == 2 and exact and cost_exact:
            return self.solve_interval(payoff, cost, directions, offsets, cost_directions, cost_offsets)
        if self._payoff_set.norm_p != NORM_TWO:
            return solve_response_program(payoff, self._payoff_set, cost, self._cost_set)
        return self.solve_penalty(payoff, cost)

    def violation(self, x, m):
        """
        Distance of the cost vector of ``x`` against ``m`` to the cost set.
        """
        return self._cost_set.distance(self._cost_map @ combine(x, m))

    #--------------------------------------------------------------------------#
    #                     P R I V A T E  F U N C T I O N S                     #
    #--------------------------------------------------------------------------#

    def solve_interval(self, payoff, cost, directions, offsets, cost_directions, cost_offsets):
        # STEP 1: Feasible weights of the first action form an interval.
        lower, upper = 0.0, 1.0
        intercepts = cost_directions @ cost[:, 1] - cost_offsets
        slopes = cost_directions @ (cost[:, 0] - cost[:, 1])
        for a, b in zip(intercepts, slopes):
            if b > 0.0:
                upper = min(upper, -a / b)
            elif b < 0.0:
                lower = max(lower, -a / b)
            elif a > self._tolerance:
                raise InfeasibleConstraintError('cost constraint cannot be met by any mixed action')
        if lower > upper:
            if lower - upper > self._tolerance:
                raise InfeasibleConstraintError('cost constraint cannot be met by any mixed action')
            lower = upper

        # STEP 2: Minimize the payoff distance on the interval.
        first = payoff[:, 0]
        second = payoff[:, 1]
        x, value = minimize_line_envelope(np.concatenate(([0.0], directions @ second - offsets)),
                                          np.concatenate(([0.0], directions @ (first - second))),
                                          lower, upper)
        return MixedAction([x, 1.0 - x])

    def solve_penalty(self, payoff, cost):
        """
        Exact penalty with increasing weight on the cost violation, then a
        feasibility polish by linear programming.
        """
        number_of_actions = payoff.shape[1]
        feasible = project_onto_constraint(np.full(number_of_actions, 1.0 / number_of_actions), cost, self._cost_set)
        x = feasible
        weight = PENALTY_INITIAL_WEIGHT
        scale = 1.0 + float(np.max(np.abs(payoff))) + float(np.max(np.abs(cost)))
        steps_per_round = max(1, self._max_iterations // PENALTY_ROUNDS)
        for penalty_round in range(PENALTY_ROUNDS):
            best_x, best_value = x, self.penalized(x, payoff, cost, weight)
            for k in range(steps_per_round):
                r = payoff @ x
                residual = r - self._payoff_set.project(r)
                size = float(np.linalg.norm(residual))
                subgradient = payoff.T @ residual / size if size > 0.0 else np.zeros(number_of_actions)
                c = cost @ x
                cost_residual = c - self._cost_set.project(c)
                cost_size = float(np.linalg.norm(cost_residual))
                if cost_size > 0.0:
                    subgradient = subgradient + weight * (cost.T @ cost_residual) / cost_size
                step = 1.0 / (scale * weight * math.sqrt(k + 1.0))
                x = simplex_projection(x - step * subgradient)
                value = self.penalized(x, payoff, cost, weight)
                if value < best_value:
                    best_x, best_value = x, value
            x = best_x
            logger.debug('penalty round %d with weight %g reached %.6g', penalty_round, weight, best_value)
            weight *= PENALTY_GROWTH
        return MixedAction(project_onto_constraint(x, cost, self._cost_set))

    def penalized(self, x, payoff, cost, weight):
        c = cost @ x
        return self._payoff_set.distance(payoff @ x) + weight * float(np.linalg.norm(c - self._cost_set.project(c)))

    def __repr__(self):
        return 'ConstrainedXStarResponse(%r, %r)' % (self._payoff_set, self._cost_set)


def solve_response_program(payoff, target, cost=None, cost_set=None):
    """
    Function will solve min_x d_p(payoff x, target) over the simplex, with
    the optional constraint ``cost x in cost_set``, as a linear program for
    p in {1, inf}. A second pass puts the mass on the lowest action indices
    among the optimal solutions.
    """
    d, number_of_actions = payoff.shape
    witness = target.witness()
    n = witness.size
    cost_rows = 0 if cost is None else cost.shape[0]
    cost_witness = None if cost is None else cost_set.witness()
    cost_size = 0 if cost is None else cost_witness.size

    # Variables: x (A), z (n), s (d), t (1), y (cost witness).
    size = number_of_actions + n + d + 1 + cost_size
    ix = slice(0, number_of_actions)
    iz = slice(number_of_actions, number_of_actions + n)
    isl = slice(number_of_actions + n, number_of_actions + n + d)
    it = number_of_actions + n + d
    iy = slice(it + 1, size)

    upper_rows = []
    row = np.zeros((d, size))
    row[:, ix] = payoff
    row[:, iz] = -witness.matrix
    row[:, isl] = -np.eye(d)
    upper_rows.append(row)
    row = np.zeros((d, size))
    row[:, ix] = -payoff
    row[:, iz] = witness.matrix
    row[:, isl] = -np.eye(d)
    upper_rows.append(row)
    if target.norm_p == NORM_INFINITY:
        row = np.zeros((d, size))
        row[:, isl] = np.eye(d)
        row[:, it] = -1.0
    else:
        row = np.zeros((1, size))
        row[0, isl] = 1.0
        row[0, it] = -1.0
    upper_rows.append(row)
    upper = np.vstack(upper_rows)
    upper_rhs = np.zeros(upper.shape[0])

    equal_rows = []
    equal_rhs = []
    row = np.zeros((1, size))
    row[0, ix] = 1.0
    equal_rows.append(row)
    equal_rhs.append(np.ones(1))
    if witness.eq_matrix is not None:
        row = np.zeros((witness.eq_matrix.shape[0], size))
        row[:, iz] = witness.eq_matrix
        equal_rows.append(row)
        equal_rhs.append(witness.eq_vector)
    if cost is not None:
        row = np.zeros((cost_rows, size))
        row[:, ix] = cost
        row[:, iy] = -cost_witness.matrix
        equal_rows.append(row)
        equal_rhs.append(np.zeros(cost_rows))
        if cost_witness.eq_matrix is not None:
            row = np.zeros((cost_witness.eq_matrix.shape[0], size))
            row[:, iy] = cost_witness.eq_matrix
            equal_rows.append(row)
            equal_rhs.append(cost_witness.eq_vector)
    equal = np.vstack(equal_rows)
    equal_rhs = np.concatenate(equal_rhs)

    bounds = [(0.0, 1.0)] * number_of_actions + witness.bounds + [(0.0, None)] * (d + 1)
    if cost is not None:
        bounds += cost_witness.bounds

    objective = np.zeros(size)
    objective[it] = 1.0
    result = linprog(objective, A_ub=upper, b_ub=upper_rhs, A_eq=equal, b_eq=equal_rhs, bounds=bounds, method='highs')
    if result.status == 2:
        raise InfeasibleConstraintError('cost constraint cannot be met by any mixed action')
    if result.status != 0:
        raise ConvergenceError('response program failed: %s' % result.message)
    solution = result.x

    # Tie-break: keep the optimal value, favour low action indices.
    optimum = float(result.fun)
    slack = RESPONSE_OBJECTIVE_TOLERANCE * (1.0 + abs(optimum))
    tie_row = np.zeros((1, size))
    tie_row[0, it] = 1.0
    tie_objective = np.zeros(size)
    tie_objective[ix] = -np.power(2.0, -np.arange(number_of_actions))
    tie = linprog(tie_objective, A_ub=np.vstack((upper, tie_row)), b_ub=np.concatenate((upper_rhs, [optimum + slack])),
                  A_eq=equal, b_eq=equal_rhs, bounds=bounds, method='highs')
    if tie.status == 0:
        solution = tie.x
    else:
        logger.debug('tie-break pass failed, keeping the first solution: %s', tie.message)
    return MixedAction(np.clip(solution[ix], 0.0, None))


def project_onto_constraint(x, cost, cost_set):
    """
    Nearest (in l1) mixed action to ``x`` whose cost vector lies in
    ``cost_set``.
    """
    number_of_actions = x.size
    cost_rows = cost.shape[0]
    witness = cost_set.witness()
    n = witness.size

    # Variables: x (A), e (A), y (n).
    size = 2 * number_of_actions + n
    ix = slice(0, number_of_actions)
    ie = slice(number_of_actions, 2 * number_of_actions)
    iy = slice(2 * number_of_actions, size)
    upper = np.zeros((2 * number_of_actions, size))
    upper[:number_of_actions, ix] = np.eye(number_of_actions)
    upper[:number_of_actions, ie] = -np.eye(number_of_actions)
    upper[number_of_actions:, ix] = -np.eye(number_of_actions)
    upper[number_of_actions:, ie] = -np.eye(number_of_actions)
    upper_rhs = np.concatenate((x, -x))

    equal_rows = [np.zeros((1, size)), np.zeros((cost_rows, size))]
    equal_rows[0][0, ix] = 1.0
    equal_rows[1][:, ix] = cost
    equal_rows[1][:, iy] = -witness.matrix
    equal_rhs = [np.ones(1), np.zeros(cost_rows)]
    if witness.eq_matrix is not None:
        row = np.zeros((witness.eq_matrix.shape[0], size))
        row[:, iy] = witness.eq_matrix
        equal_rows.append(row)
        equal_rhs.append(witness.eq_vector)

    objective = np.zeros(size)
    objective[ie] = 1.0
    bounds = [(0.0, 1.0)] * number_of_actions + [(0.0, None)] * number_of_actions + witness.bounds
    result = linprog(objective, A_ub=upper, b_ub=upper_rhs, A_eq=np.vstack(equal_rows),
                     b_eq=np.concatenate(equal_rhs), bounds=bounds, method='highs')
    if result.status == 2:
        raise InfeasibleConstraintError('cost constraint cannot be met by any mixed action')
    if result.status != 0:
        raise ConvergenceError('feasibility polish failed: %s' % result.message)
    return simplex_projection(np.clip(result.x[ix], 0.0, None))


class ConstantResponse(ResponseFunction):
    """
    Psi(m) = x0 whatever m is.
    """

    response_id = 'constant'

    def __init__(self, action):
        self._action = MixedAction(action)

    @property
    def action(self):
        return self._action

    def respond(self, m):
        entries = payoff_array(m)
        if entries.shape[1] != self._action.number_of_actions:
            raise DimensionError('constant response has %d weights, payoff matrix %d columns' % (self._action.number_of_actions, entries.shape[1]))
        return self._action

    def __repr__(self):
        return 'ConstantResponse(%r)' % self._action.weights.tolist()


class ExampleOneXStarResponse(ResponseFunction):
    """
    Closed form x*(nu) of the two-coordinate example: the first action when
    nu is in [0, 1/4] or [3/4, 1], the second one otherwise. ``nu`` is read
    off the least squares decomposition m = nu m_dagger + (1 - nu) m_sharp.
    """

    response_id = 'example1_x_star'

    def __init__(self):
        self._sharp = np.array(M_SHARP)
        self._direction = np.array(M_DAGGER) - self._sharp
        self._direction_norm = float(np.sum(self._direction * self._direction))

    def parameter(self, m):
        nu = float(np.sum((payoff_array(m) - self._sharp) * self._direction)) / self._direction_norm
        return min(1.0, max(0.0, nu))

    def respond(self, m):
        nu = self.parameter(m)
        if nu <= 0.25 or nu >= 0.75:
            return MixedAction([1.0, 0.0])
        return MixedAction([0.0, 1.0])


class ExampleTwoXStarResponse(ResponseFunction):
    """
    Closed form x*(v, w) of the scalar example with C = {0}.
    """

    response_id = 'example2_x_star'

    def respond(self, m):
        entries = payoff_array(m)
        if entries.shape != (1, 2):
            raise DimensionError('expected a 1 x 2 payoff matrix, got shape %r' % (entries.shape,))
        v, w = float(entries[0, 0]), float(entries[0, 1])
        if v * w <= 0.0:
            if v == 0.0 and w == 0.0:
                return MixedAction([1.0, 0.0])
            return MixedAction([abs(w), abs(v)])
        if 0.0 < v <= w or 0.0 > v >= w:
            return MixedAction([1.0, 0.0])
        return MixedAction([0.0, 1.0])


class CallbackResponse(ResponseFunction):

    response_id = 'callback'

    def __init__(self, function):
        assert callable(function), 'function is not callable: %r' % function
        self._function = function

    def respond(self, m):
        return MixedAction(self._function(payoff_array(m)))


class TabulatedResponse(ResponseFunction):
    """
    Response given as a table of payoff matrices and mixed actions; a query
    returns the action of the nearest tabulated matrix (first one on ties).
    """

    response_id = 'tabulated'

    def __init__(self, matrices, actions):
        matrices = np.array(matrices, dtype=float)
        actions = np.array(actions, dtype=float)
        if matrices.ndim != 3 or actions.ndim != 2 or matrices.shape[0] != actions.shape[0]:
            raise DimensionError('table needs n matrices of shape (d, A) and n actions')
        if matrices.shape[0] == 0:
            raise InvalidParameterError('response table is empty')
        if matrices.shape[2] != actions.shape[1]:
            raise DimensionError('table matrices have %d columns, actions %d weights' % (matrices.shape[2], actions.shape[1]))
        self._shape = matrices.shape[1:]
        self._points = matrices.reshape(matrices.shape[0], -1)
        self._actions = [MixedAction(a) for a in actions]

    @classmethod
    def from_csv(cls, filepath):
        with open(filepath, newline='') as input_file_handle:
            reader = csv.reader(row for row in input_file_handle if not row.startswith('#'))
            header = next(reader)
            rows = [[float(value) for value in row] for row in reader if row]
        matrix_columns = [(i, re.match(r'^m_(\d+)_(\d+)$', name)) for i, name in enumerate(header)]
        matrix_columns = [(i, int(match.group(1)), int(match.group(2))) for i, match in matrix_columns if match]
        action_columns = [(i, re.match(r'^x_(\d+)$', name)) for i, name in enumerate(header)]
        action_columns = [(i, int(match.group(1))) for i, match in action_columns if match]
        if not matrix_columns or not action_columns:
            raise RecordFormatError('response table %s needs m_<row>_<col> and x_<action> columns' % filepath)
        d = max(row for i, row, col in matrix_columns) + 1
        number_of_actions = max(col for i, row, col in matrix_columns) + 1
        matrices = np.zeros((len(rows), d, number_of_actions))
        actions = np.zeros((len(rows), len(action_columns)))
        for k, row in enumerate(rows):
            for i, r, c in matrix_columns:
                matrices[k, r, c] = row[i]
            for i, a in action_columns:
                actions[k, a] = row[i]
        return cls(matrices, actions)

    def respond(self, m):
        entries = payoff_array(m)
        if entries.shape != self._shape:
            raise DimensionError('table holds matrices of shape %r, got %r' % (self._shape, entries.shape))
        distances = np.sum((self._points - entries.ravel()) ** 2, axis=1)
        return self._actions[int(np.argmin(distances))]


def write_response_table(filepath, response, matrices):
    """
    Function will tabulate ``response`` on ``matrices`` into a CSV file that
    ``TabulatedResponse.from_csv`` reads back.
    """
    matrices = np.array([payoff_array(m) for m in matrices])
    d, number_of_actions = matrices.shape[1:]
    header = ['m_%d_%d' % (r, c) for r in range(d) for c in range(number_of_actions)]
    header += ['x_%d' % a for a in range(number_of_actions)]
    with open(filepath, 'w', newline='') as output_file_handle:
        writer = csv.writer(output_file_handle, lineterminator='\n')
        writer.writerow(header)
        for matrix in matrices:
            action = response.respond(matrix)
            writer.writerow([format_float(v) for v in matrix.ravel()] + [format_float(v) for v in action.weights])


def respond(psi, m):
    assert isinstance(psi, ResponseFunction), 'psi is not a ResponseFunction class: %r' % psi
    return psi.respond(m)


def respond_constrained(psi, m):
    assert isinstance(psi, ConstrainedXStarResponse), 'psi is not a ConstrainedXStarResponse class: %r' % psi
    return psi.respond(m)


def row_selector(rows, dimension):
    """
    Matrix of the linear map keeping ``rows`` of a vector in R^dimension.
    """
    selector = np.zeros((len(rows), dimension))
    for i, row in enumerate(rows):
        selector[i, row] = 1.0
    return selector
