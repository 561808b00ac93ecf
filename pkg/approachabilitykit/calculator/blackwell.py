# -*- coding: utf-8 -*-
"""
Projection-free strategy for known games. Every round solves the zero-sum
game between the mixed actions and the vertices of K whose payoff is the
inner product with the current discrepancy vector.
"""

import logging
import numpy as np
from scipy.optimize import linprog  # Third party library for general matrix games.
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.foundation.utils import *
from approachabilitykit.calculator.geometry import *
from approachabilitykit.calculator.responses import ResponseFunction


logger = logging.getLogger(__name__)


def _uniform_over(mask):
    weights = mask.astype(float)
    return weights / weights.sum()


def _near_best(values, best):
    return values >= best - MATRIX_GAME_TOLERANCE * (1.0 + abs(best))


def solve_matrix_game(M):
    """
    Function will solve the zero-sum game with matrix ``M`` where the row
    player minimizes and the column player maximizes.

    Returns a dictionary with the keys 'value', 'row' (MixedAction),
    'column' (weights array), 'minmax' and 'maxmin'.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] < 1 or M.shape[1] < 1:
        raise DimensionError('game matrix must be a non-empty 2-D array, got shape %r' % (M.shape,))
    rows, columns = M.shape

    if not np.any(M):
        return _game_result(M, np.full(rows, 1.0 / rows), np.full(columns, 1.0 / columns))
    if rows == 1:
        best = float(M[0].max())
        return _game_result(M, np.ones(1), _uniform_over(_near_best(M[0], best)))
    if columns == 1:
        best = float(M[:, 0].min())
        return _game_result(M, _uniform_over(M[:, 0] <= best + MATRIX_GAME_TOLERANCE * (1.0 + abs(best))), np.ones(1))
    if rows == 2:
        row, column = _solve_two_rows(M)
        return _game_result(M, row, column)
    if columns == 2:
        column, row = _solve_two_rows(-M.T)
        return _game_result(M, row, column)
    row, column = _solve_linear(M)
    return _game_result(M, row, column)


def _game_result(M, row, column):
    row = simplex_projection(np.clip(row, 0.0, None))
    column = simplex_projection(np.clip(column, 0.0, None))
    minmax = float(np.max(row @ M))
    maxmin = float(np.min(M @ column))
    return {
        'value': (minmax + maxmin) / 2.0,
        'row': MixedAction(row),
        'column': column,
        'minmax': minmax,
        'maxmin': maxmin
    }


def _solve_two_rows(M):
    """
    2 x n game: x is the weight of the first row and the column player's
    lines are M[1, j] + x (M[0, j] - M[1, j]).
    """
    intercepts = M[1]
    slopes = M[0] - M[1]
    x, value = minimize_line_envelope(intercepts, slopes)
    heights = intercepts + slopes * x
    active = np.flatnonzero(heights >= value - MATRIX_GAME_TOLERANCE * (1.0 + abs(value)))
    active_slopes = slopes[active]
    column = np.zeros(M.shape[1])

    if x >= 1.0:
        column[active[np.argmin(active_slopes)]] = 1.0
    elif x <= 0.0:
        column[active[np.argmax(active_slopes)]] = 1.0
    else:
        flat = np.flatnonzero(np.abs(active_slopes) <= MATRIX_GAME_TOLERANCE)
        rising = active[np.argmax(active_slopes)]
        falling = active[np.argmin(active_slopes)]
        if flat.size > 0:
            column[active[flat[0]]] = 1.0
        elif slopes[rising] <= 0.0 or slopes[falling] >= 0.0:
            column[active[np.argmin(np.abs(active_slopes))]] = 1.0
        else:
            # Mix the steepest rising and falling lines to a flat one.
            s1, s2 = slopes[rising], slopes[falling]
            column[rising] = -s2 / (s1 - s2)
            column[falling] = s1 / (s1 - s2)
    return np.array([x, 1.0 - x]), column


def _solve_linear(M):
    rows, columns = M.shape
    logger.debug('solving a %d x %d game by linear programming', rows, columns)

    # Row player: min v subject to M^T x <= v, x in the simplex.
    cost = np.zeros(rows + 1)
    cost[-1] = 1.0
    result = linprog(cost, A_ub=np.hstack((M.T, -np.ones((columns, 1)))), b_ub=np.zeros(columns),
                     A_eq=np.hstack((np.ones((1, rows)), np.zeros((1, 1)))), b_eq=np.ones(1),
                     bounds=[(0.0, None)] * rows + [(None, None)], method='highs')
    if result.status != 0:
        raise ConvergenceError('row player program failed: %s' % result.message)
    row = result.x[:rows]

    # Column player: max w subject to M y >= w, y in the simplex.
    cost = np.zeros(columns + 1)
    cost[-1] = -1.0
    result = linprog(cost, A_ub=np.hstack((-M, np.ones((rows, 1)))), b_ub=np.zeros(rows),
                     A_eq=np.hstack((np.ones((1, columns)), np.zeros((1, 1)))), b_eq=np.ones(1),
                     bounds=[(0.0, None)] * columns + [(None, None)], method='highs')
    if result.status != 0:
        raise ConvergenceError('column player program failed: %s' % result.message)
    column = result.x[:columns]
    return row, column


class BlackwellStrategy:
    """
    Known-game strategy. It needs the body K and a response Psi_C with
    Psi_C(m) (.) m in C for every m of K.
    """

    strategy_id = 'blackwell'

    #--------------------------------------------------------------------------#
    #                     P U B L I C  F U N C T I O N S                       #
    #--------------------------------------------------------------------------#

    def __init__(self, body, response, tolerance=INEQUALITY_TOLERANCE, audit=False):
        if isinstance(body, ParameterizedBody):
            body = body.vertices()
        assert isinstance(body, ConvexBody), 'body is not a ConvexBody class: %r' % body
        assert isinstance(response, ResponseFunction), 'response is not a ResponseFunction class: %r' % response
        self._body = body
        self._response = response
        self._tolerance = tolerance
        self._audit = audit
        self._delta = np.zeros(body.d)
        self._payoff_sum = np.zeros(body.d)
        self._rounds = 0
        self._max_slack = -np.inf
        self._pending = None

    @property
    def body(self):
        return self._body

    @property
    def number_of_actions(self):
        return self._body.number_of_actions

    @property
    def dimension(self):
        return self._body.d

    @property
    def delta(self):
        return self._delta.copy()

    @property
    def delta_norm(self):
        return float(np.linalg.norm(self._delta))

    @property
    def rounds_played(self):
        return self._rounds

    @property
    def max_inequality_slack(self):
        return float(self._max_slack) if self._rounds > 0 else 0.0

    @property
    def average_payoff(self):
        if self._rounds == 0:
            return np.zeros(self._body.d)
        return self._payoff_sum / self._rounds

    def choose(self):
        """
        Returns the tuple (x, m_tilde) of the row player's optimal mixture and
        the vertex mixture of the column player's optimal strategy.
        """
        vertices = self._body.vertices
        game = np.tensordot(vertices, self._delta, axes=([1], [0])).T
        solution = solve_matrix_game(game)
        m_tilde = PayoffMatrix(np.tensordot(solution['column'], vertices, axes=1))
        return solution['row'], m_tilde

    def step(self, m, x, m_tilde):
        entries = payoff_array(m)
        if entries.shape != self._body.vertices.shape[1:]:
            raise DimensionError('payoff matrix of shape %r, body matrices %r' % (entries.shape, self._body.vertices.shape[1:]))
        if self._audit and not self._body.contains(entries):
            raise AdversaryError('payoff matrix %r lies outside K at round %d' % (entries.tolist(), self._rounds + 1))

        played = combine(x, entries)
        comparator = combine(self._response.respond(m_tilde), m_tilde)
        lhs = float(self._delta @ played)
        rhs = float(self._delta @ comparator)
        slack = lhs - rhs
        self._max_slack = max(self._max_slack, slack)
        if slack > self._tolerance * (1.0 + abs(lhs) + abs(rhs)):
            raise InequalityViolationError('inner-product inequality broken by %g at round %d' % (slack, self._rounds + 1),
                                           slack=slack, round_index=self._rounds + 1)

        self._delta = self._delta + played - comparator
        self._payoff_sum = self._payoff_sum + played
        self._rounds += 1
        return played

    def act(self):
        if self._pending is None:
            self._pending = self.choose()
        return self._pending[0]

    def observe(self, m):
        x, m_tilde = self._pending if self._pending is not None else self.choose()
        self._pending = None
        return self.step(m, x, m_tilde)
