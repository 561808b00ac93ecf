# -*- coding: utf-8 -*-
"""
Block strategy for unknown games: block n lasts n rounds and runs its own
regret minimizer on the payoffs scalarized by the discrepancy vector frozen
at the start of the block. The response function is queried once per block
on the block's average payoff matrix.
"""

import logging
import math
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.foundation.utils import *
from approachabilitykit.calculator.geometry import MixedAction, payoff_array
from approachabilitykit.calculator.regret import PolynomialWeightsForecaster, constant_forecaster_factory
from approachabilitykit.calculator.responses import ResponseFunction, ConstantResponse


logger = logging.getLogger(__name__)


class BlockStrategy:
    """
    Anytime strategy; it never reads the body K of payoff matrices. The
    certificate quantities need the norm bound K_max, which is passed in by
    the analysis side only.
    """

    strategy_id = 'block'

    #--------------------------------------------------------------------------#
    #                     P U B L I C  F U N C T I O N S                       #
    #--------------------------------------------------------------------------#

    def __init__(self, response, number_of_actions, dimension,
                 forecaster_factory=PolynomialWeightsForecaster, audit=False):
        assert isinstance(response, ResponseFunction), 'response is not a ResponseFunction class: %r' % response
        assert isinstance(number_of_actions, int), 'number_of_actions is not a Integer class: %r' % number_of_actions
        assert isinstance(dimension, int), 'dimension is not a Integer class: %r' % dimension
        if number_of_actions < 1 or dimension < 1:
            raise DimensionError('need d >= 1 and A >= 1, got d=%r, A=%r' % (dimension, number_of_actions))
        self._response = response
        self._number_of_actions = number_of_actions
        self._dimension = dimension
        self._forecaster_factory = forecaster_factory
        self._audit = audit

        self._block = 1
        self._position = 0
        self._delta = np.zeros(dimension)
        self._forecaster = forecaster_factory(number_of_actions)
        self._pending_action = None
        self._block_matrix_sum = np.zeros((dimension, number_of_actions))
        self._block_payoff_sum = np.zeros(dimension)

        self._rounds = 0
        self._payoff_total = np.zeros(dimension)
        self._matrix_total = np.zeros((dimension, number_of_actions))

        # Sums at block boundaries, indexed by the number of closed blocks;
        # entry 0 is the empty history.
        self._payoff_prefix = [np.zeros(dimension)]
        self._matrix_prefix = [np.zeros((dimension, number_of_actions))]
        self._comparator_prefix = [np.zeros(dimension)]

    @property
    def response(self):
        return self._response

    @property
    def number_of_actions(self):
        return self._number_of_actions

    @property
    def dimension(self):
        return self._dimension

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
    def block_index(self):
        return self._block

    @property
    def position(self):
        return self._position

    @property
    def forecaster(self):
        return self._forecaster

    @property
    def average_payoff(self):
        if self.rounds_played == 0:
            return np.zeros(self._dimension)
        return self._payoff_total / self._rounds

    @property
    def average_matrix(self):
        if self.rounds_played == 0:
            return np.zeros((self._dimension, self._number_of_actions))
        return self._matrix_total / self._rounds

    def act(self):
        """
        Mixed action of the current round; repeated calls before ``observe``
        return the same action.
        """
        if self._pending_action is None:
            self._pending_action = self._forecaster.next_action()
        return self._pending_action

    def observe(self, m):
        entries = payoff_array(m)
        if entries.shape != (self._dimension, self._number_of_actions):
            raise DimensionError('expected a %d x %d payoff matrix, got shape %r' % (self._dimension, self._number_of_actions, entries.shape))
        action = self.act()
        payoff = entries @ action.weights

        self._forecaster.observe(-(self._delta @ entries))
        self._rounds += 1
        self._payoff_total = self._payoff_total + payoff
        self._matrix_total = self._matrix_total + entries
        self._block_matrix_sum += entries
        self._block_payoff_sum += payoff
        self._position += 1
        self._pending_action = None
        if self._position == self._block:
            self.close_block()
        return payoff

    def certificate(self, at_T, body_norm):
        """
        Function will return the dictionary {'c_t', 'gap', 'bound', 'N',
        'rbar'} of the comparator point c_T, the distance of the average
        payoff to it and the pathwise bound 8 K sqrt(ln A) T^(-1/4) +
        sqrt(2) K T^(-1/2).

        Only the sums at block boundaries are kept, so T must be the current
        round or the last round of an already closed block.
        """
        T = int(at_T)
        if T < 1:
            raise CertificateError('certificate needs at least one round, got T=%r' % at_T)
        if T > self.rounds_played:
            raise CertificateError('certificate at T=%d but only %d rounds were played' % (T, self.rounds_played))

        N = triangular_root(T)
        if T == self._rounds:
            payoff_sum, matrix_sum = self._payoff_total, self._matrix_total
        elif T == triangular(N) and N < len(self._payoff_prefix):
            payoff_sum, matrix_sum = self._payoff_prefix[N], self._matrix_prefix[N]
        else:
            raise CertificateError('certificate at T=%d needs the current round %d or a closed block end'
                                   % (T, self._rounds))

        # STEP 1: Comparator of the closed blocks 1..N-1.
        start = triangular(N - 1)
        comparator = self._comparator_prefix[N - 1]

        # STEP 2: Comparator of the partial block covering rounds start+1..T.
        length = T - start
        partial = (matrix_sum - self._matrix_prefix[N - 1]) / length
        partial_action = self._response.respond(partial)
        c_t = (comparator + length * (partial @ partial_action.weights)) / T

        # STEP 3: Gap and bound.
        rbar = payoff_sum / T
        gap = float(np.linalg.norm(rbar - c_t))
        bound = (8.0 * body_norm * math.sqrt(math.log(self._number_of_actions)) * T ** -0.25
                 + math.sqrt(2.0) * body_norm * T ** -0.5)
        return {
            'c_t': c_t,
            'gap': gap,
            'bound': bound,
            'N': N,
            'rbar': rbar
        }

    #--------------------------------------------------------------------------#
    #                     P R I V A T E  F U N C T I O N S                     #
    #--------------------------------------------------------------------------#

    def close_block(self):
        n = self._block
        mean = self._block_matrix_sum / n
        action = self._response.respond(mean)
        comparator = mean @ action.weights
        self._delta = self._delta + self._block_payoff_sum - n * comparator
        self._comparator_prefix.append(self._comparator_prefix[-1] + n * comparator)
        self._payoff_prefix.append(self._payoff_total.copy())
        self._matrix_prefix.append(self._matrix_total.copy())
        if self._audit:
            self.audit_delta()
        logger.debug('block %d closed, response %r, |delta| = %.6g', n, action.weights.tolist(), self.delta_norm)

        self._block += 1
        self._position = 0
        self._block_matrix_sum = np.zeros((self._dimension, self._number_of_actions))
        self._block_payoff_sum = np.zeros(self._dimension)
        self._forecaster = self._forecaster_factory(self._number_of_actions)

    def audit_delta(self):
        """
        Recompute delta from the whole history: the played payoff sum minus
        the weighted comparators of every closed block.
        """
        expected = self._payoff_total - self._comparator_prefix[-1]
        scale = 1.0 + float(np.max(np.abs(self._payoff_total))) + float(np.max(np.abs(self._comparator_prefix[-1])))
        error = float(np.max(np.abs(expected - self._delta)))
        if error > AUDIT_TOLERANCE * scale:
            raise AuditError('running delta differs from the recomputed one by %g after block %d' % (error, self._block))


def constant_play_strategy(action, dimension):
    """
    Strategy that plays ``action`` every round and compares against the
    same constant response; its target is alpha_x for that action.
    """
    action = MixedAction(action)
    strategy = BlockStrategy(ConstantResponse(action), action.number_of_actions, dimension,
                             forecaster_factory=constant_forecaster_factory(action))
    strategy.strategy_id = 'constant'
    return strategy


def discrepancy_bound(n, body_norm, number_of_actions):
    """
    Bound 2 K sqrt(2 n^3 ln A) on the norm of delta_{n+1}.
    """
    return 2.0 * body_norm * math.sqrt(2.0 * float(n) ** 3 * math.log(number_of_actions))


def recurrence_sequence(gamma_one, gamma_two, n_max):
    """
    Function will iterate u_{n+1} = u_n + 2 g1 sqrt((n+1) u_n) + g2 (n+1)^2
    from u_1 = g2 and return the array (u_1, ..., u_{n_max}).
    """
    values = np.zeros(n_max)
    values[0] = gamma_two
    for n in range(1, n_max):
        previous = values[n - 1]
        values[n] = previous + 2.0 * gamma_one * math.sqrt((n + 1) * previous) + gamma_two * (n + 1) ** 2
    return values


def recurrence_bound(gamma_one, gamma_two, n):
    return np.maximum(2.0 * np.square(gamma_one), gamma_two) * np.asarray(n, dtype=float) ** 3


def check_recurrence_bound(gamma_one, gamma_two, n_max):
    """
    Iterates the recurrence for every (g1, g2) pair at once and returns the
    largest ratio u_n / (max(2 g1^2, g2) n^3) seen for n <= n_max.
    """
    gamma_one = np.asarray(gamma_one, dtype=float).ravel()
    gamma_two = np.asarray(gamma_two, dtype=float).ravel()
    scale = np.maximum(2.0 * np.square(gamma_one), gamma_two)
    values = gamma_two.copy()
    worst = float(np.max(values / scale))
    for n in range(1, n_max):
        values = values + 2.0 * gamma_one * np.sqrt((n + 1) * values) + gamma_two * (n + 1) ** 2
        worst = max(worst, float(np.max(values / (scale * float(n + 1) ** 3))))
    return worst
