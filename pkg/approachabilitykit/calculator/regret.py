# -*- coding: utf-8 -*-
"""
Scalar full-information regret minimizers. The block strategy runs a fresh
instance inside every block and feeds it scalarized gains whose range it
never learns in advance.
"""

import logging
import math
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.calculator.geometry import MixedAction


logger = logging.getLogger(__name__)


class PolynomialWeightsForecaster:
    """
    Polynomially weighted average forecaster on gains. The weight of action
    ``a`` is proportional to max(R_a, 0)^(q - 1), with R the cumulative
    regret vector and q = max(2, 2 ln A). It needs neither the range of the
    gains nor the horizon; its guarantee is

        max_a R_a <= 2 sqrt(2e) B sqrt(T ln A)

    for gains in [-B, B].
    """

    #--------------------------------------------------------------------------#
    #                     P U B L I C  F U N C T I O N S                       #
    #--------------------------------------------------------------------------#

    def __init__(self, number_of_actions):
        assert isinstance(number_of_actions, int), 'number_of_actions is not a Integer class: %r' % number_of_actions
        if number_of_actions < 1:
            raise InvalidParameterError('at least one action is needed, got %r' % number_of_actions)
        self._number_of_actions = number_of_actions
        self._exponent = max(2.0, 2.0 * math.log(number_of_actions))
        self._regret = np.zeros(number_of_actions)
        self._round = 0

    @property
    def number_of_actions(self):
        return self._number_of_actions

    @property
    def exponent(self):
        return self._exponent

    @property
    def round(self):
        return self._round

    @property
    def cumulative_regret(self):
        return self._regret.copy()

    def next_action(self):
        return MixedAction(self.get_weights())

    def observe(self, payoff_vector):
        payoff = np.asarray(payoff_vector, dtype=float).ravel()
        if payoff.size != self._number_of_actions:
            raise DimensionError('expected %d gains, got %d' % (self._number_of_actions, payoff.size))
        if not np.all(np.isfinite(payoff)):
            raise InvalidParameterError('gains must be finite: %r' % payoff)
        weights = self.get_weights()
        self._regret += payoff - weights @ payoff
        self._round += 1

    def regret(self):
        """
        max_a sum_t m'_{t,a} - sum_t <u_t, m'_t>.
        """
        if self._round == 0:
            return 0.0
        return float(np.max(self._regret))

    def theoretical_regret_bound(self, payoff_range, horizon):
        return POLYNOMIAL_WEIGHTS_REGRET_CONSTANT * payoff_range * math.sqrt(horizon * math.log(self._number_of_actions))

    def assumption_regret_bound(self, payoff_range, horizon):
        return ASSUMPTION_REGRET_CONSTANT * payoff_range * math.sqrt(horizon * math.log(self._number_of_actions))

    #--------------------------------------------------------------------------#
    #                     P R I V A T E  F U N C T I O N S                     #
    #--------------------------------------------------------------------------#

    def get_weights(self):
        positive = np.maximum(self._regret, 0.0)
        top = float(positive.max())
        if top <= 0.0:
            return np.full(self._number_of_actions, 1.0 / self._number_of_actions)

        # Normalizing by the largest part first keeps the powers in [0, 1].
        weights = (positive / top) ** (self._exponent - 1.0)
        return weights / weights.sum()


class ConstantForecaster:
    """
    Plays the same mixed action forever; the regret is still tracked.
    """

    def __init__(self, action):
        assert isinstance(action, MixedAction), 'action is not a MixedAction class: %r' % action
        self._action = action
        self._regret = np.zeros(action.number_of_actions)
        self._round = 0

    @property
    def number_of_actions(self):
        return self._action.number_of_actions

    @property
    def round(self):
        return self._round

    def next_action(self):
        return self._action

    def observe(self, payoff_vector):
        payoff = np.asarray(payoff_vector, dtype=float).ravel()
        if payoff.size != self._action.number_of_actions:
            raise DimensionError('expected %d gains, got %d' % (self._action.number_of_actions, payoff.size))
        self._regret += payoff - self._action.weights @ payoff
        self._round += 1

    def regret(self):
        if self._round == 0:
            return 0.0
        return float(np.max(self._regret))


def constant_forecaster_factory(action):
    def build(number_of_actions):
        if number_of_actions != action.number_of_actions:
            raise DimensionError('constant action has %d weights, game has %d actions' % (action.number_of_actions, number_of_actions))
        return ConstantForecaster(action)
    return build
