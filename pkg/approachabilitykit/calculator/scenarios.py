# -*- coding: utf-8 -*-
"""
Game environments (the two worked examples, sample-path constraint
instances, custom bodies), the adversaries that play them, and the
simultaneous-move loop that produces run records.
"""

import logging
from collections import OrderedDict
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.foundation.utils import *
from approachabilitykit.calculator.geometry import *
from approachabilitykit.calculator.responses import *
from approachabilitykit.calculator.targets import *
from approachabilitykit.calculator.strategy_blocks import BlockStrategy
from approachabilitykit.calculator.record import RunRecord


logger = logging.getLogger(__name__)


class Scenario:
    """
    A game environment: the body of payoff matrices, the target set, the
    response function used by default, the target functions whose distances
    are recorded, and for constrained games the payoff/cost split.
    """

    #--------------------------------------------------------------------------#
    #                     P U B L I C  F U N C T I O N S                       #
    #--------------------------------------------------------------------------#

    def __init__(self, scenario_id, body, target, response, target_functions=None, parameter_names=None,
                 payoff_map=None, cost_map=None, cost_set=None):
        assert isinstance(body, (ParameterizedBody, ConvexBody)), 'body is not a ParameterizedBody or ConvexBody class: %r' % body
        assert isinstance(target, TargetSet), 'target is not a TargetSet class: %r' % target
        assert isinstance(response, ResponseFunction), 'response is not a ResponseFunction class: %r' % response
        self.scenario_id = scenario_id
        self.body = body
        self.target = target
        self.response = response
        self.target_functions = OrderedDict() if target_functions is None else OrderedDict(target_functions)
        self.parameter_names = [] if parameter_names is None else list(parameter_names)
        self.payoff_map = None if payoff_map is None else np.atleast_2d(np.array(payoff_map, dtype=float))
        self.cost_map = None if cost_map is None else np.atleast_2d(np.array(cost_map, dtype=float))
        self.cost_set = cost_set
        self._convex_body = body.vertices() if isinstance(body, ParameterizedBody) else body
        self._body_norm = body_norm_bound(self._convex_body)

        expected = self.target.dimension if self.payoff_map is None else self.payoff_map.shape[1]
        if self.d != expected:
            raise DimensionError('body matrices have %d rows, target needs %d' % (self.d, expected))

    @property
    def d(self):
        return self._convex_body.d

    @property
    def number_of_actions(self):
        return self._convex_body.number_of_actions

    @property
    def body_norm(self):
        return self._body_norm

    @property
    def convex_body(self):
        return self._convex_body

    @property
    def is_constrained(self):
        return self.cost_set is not None

    def matrix(self, parameters):
        if not isinstance(self.body, ParameterizedBody):
            raise InvalidParameterError('scenario %r has no parameterization' % self.scenario_id)
        return payoff_array(self.body.matrix(parameters))

    def parameters_of(self, m):
        if not isinstance(self.body, ParameterizedBody):
            return np.zeros(0)
        return self.body.parameters_of(m)

    def contains(self, m):
        return self.body.contains(m)

    def average_columns(self):
        """
        Names of the columns describing the average payoff matrix.
        """
        if self.parameter_names:
            return list(self.parameter_names)
        return ['mbar_%d_%d' % (i, a) for i in range(self.d) for a in range(self.number_of_actions)]

    def average_values(self, mbar):
        if self.parameter_names:
            return [float(v) for v in self.parameters_of(mbar)]
        return [float(v) for v in payoff_array(mbar).ravel()]

    def distance_columns(self):
        columns = ['dist_%s' % name for name in self.target_functions]
        if self.is_constrained:
            columns.append('cost_distance')
        return columns

    def distances(self, rbar, mbar):
        """
        Distances of the average payoff to the expansions C_phi(mbar), one
        per target function, plus the cost distance of constrained games.
        """
        payoff = rbar if self.payoff_map is None else self.payoff_map @ rbar
        values = [self.target.expansion_distance(payoff, phi.value(mbar)) for phi in self.target_functions.values()]
        if self.is_constrained:
            values.append(self.cost_set.distance(self.cost_map @ rbar))
        return values

    def __repr__(self):
        return 'Scenario(%r, d=%d, A=%d)' % (self.scenario_id, self.d, self.number_of_actions)


def example_one_scenario(norm_p=NORM_INFINITY):
    """
    Payoffs in R^2, two actions, the segment between m_sharp and m_dagger and
    the negative orthant as target set.
    """
    norm_p = check_norm(norm_p)
    body = example_one_body()
    target = NegativeOrthant(2, norm_p)
    if norm_p == NORM_INFINITY:
        response = ExampleOneXStarResponse()
        target_functions = [
            ('phi_star', PhiStarClosedForm(EXAMPLE_ONE_ID)),
            ('phi_x_star', PhiPsiClosedForm(EXAMPLE_ONE_ID)),
            ('cav_phi_star', CavPhiStarClosedForm(EXAMPLE_ONE_ID)),
            ('alpha_0', AlphaX([0.0, 1.0], target)),
            ('alpha_1', AlphaX([1.0, 0.0], target))
        ]
    else:
        response = GenericXStarResponse(target)
        phi = PhiStar(target)
        target_functions = [
            ('phi_star', phi),
            ('phi_x_star', PhiPsiOracle(response, target, body)),
            ('cav_phi_star', CavPhiStarOracle(phi, body))
        ]
    return Scenario(EXAMPLE_ONE_ID, body, target, response, target_functions, ['nu'])


def example_two_scenario(norm_p=NORM_INFINITY):
    """
    Scalar payoffs m = [[v, w]] over the square [-1, 1]^2 and C = {0}.
    """
    body = example_two_body()
    target = Singleton([0.0], norm_p)
    target_functions = [
        ('phi_star', PhiStarClosedForm(EXAMPLE_TWO_ID)),
        ('phi_x_star', PhiPsiClosedForm(EXAMPLE_TWO_ID)),
        ('cav_phi_star', CavPhiStarClosedForm(EXAMPLE_TWO_ID)),
        ('alpha_half', AlphaX([0.5, 0.5], target))
    ]
    return Scenario(EXAMPLE_TWO_ID, body, target, ExampleTwoXStarResponse(), target_functions, ['v', 'w'])


def example_two_quadrant_scenario(norm_p=NORM_INFINITY):
    """
    The quadrant v >= 0 >= w of the second example, on which x* keeps the
    payoff at 0; C = {0} is approachable there.
    """
    body = example_two_quadrant_body()
    target = Singleton([0.0], norm_p)
    response = ExampleTwoXStarResponse()
    target_functions = [
        ('phi_star', PhiStarClosedForm(EXAMPLE_TWO_QUADRANT_ID)),
        ('phi_x_star', PhiPsiOracle(response, target, body))
    ]
    return Scenario(EXAMPLE_TWO_QUADRANT_ID, body, target, response, target_functions, ['v', 'w'])


def build_constrained_scenario(payoff_matrix, cost_matrix, cost_set, payoff_set):
    """
    Function will build the sample-path constraint game with payoff part
    ``payoff_matrix`` and cost part ``cost_matrix``. Both are given per
    opponent action y as arrays of shape (Y, rows, A); a 1-D or 2-D array is
    a single opponent action. The body is the hull of the stacked matrices
    m(y) = [u(., y); c(., y)].
    """
    assert isinstance(cost_set, TargetSet), 'cost_set is not a TargetSet class: %r' % cost_set
    assert isinstance(payoff_set, TargetSet), 'payoff_set is not a TargetSet class: %r' % payoff_set
    payoffs = _per_opponent_action(payoff_matrix)
    costs = _per_opponent_action(cost_matrix)
    if payoffs.shape[0] != costs.shape[0] or payoffs.shape[2] != costs.shape[2]:
        raise DimensionError('payoff shape %r and cost shape %r disagree' % (payoffs.shape, costs.shape))
    if payoffs.shape[1] != payoff_set.dimension or costs.shape[1] != cost_set.dimension:
        raise DimensionError('payoff rows %d / cost rows %d against set dimensions %d / %d'
                             % (payoffs.shape[1], costs.shape[1], payoff_set.dimension, cost_set.dimension))
    payoff_rows = payoffs.shape[1]
    d = payoff_rows + costs.shape[1]
    vertices = [np.vstack((u, c)) for u, c in zip(payoffs, costs)]
    payoff_map = row_selector(range(payoff_rows), d)
    cost_map = row_selector(range(payoff_rows, d), d)

    # The cost constraint must be feasible at every vertex of K.
    for y, vertex in enumerate(vertices):
        try:
            project_onto_constraint(np.full(vertex.shape[1], 1.0 / vertex.shape[1]), cost_map @ vertex, cost_set)
        except InfeasibleConstraintError:
            raise InfeasibleConstraintError('cost constraint is infeasible for opponent action %d' % y)

    response = ConstrainedXStarResponse(payoff_map, cost_map, payoff_set, cost_set)
    target_functions = []
    if len(vertices) == 1:
        body = point_body(vertices[0])
    elif len(vertices) == 2:
        body = segment_body(vertices[0], vertices[1])
    else:
        body = ConvexBody(vertices)
    if isinstance(body, ParameterizedBody):
        target_functions.append(('constrained_phi_psi', ConstrainedPhiPsi(response, body)))
    parameter_names = ['y'] if len(vertices) == 2 else []
    return Scenario(CONSTRAINED_ID, body, payoff_set, response, target_functions, parameter_names,
                    payoff_map=payoff_map, cost_map=cost_map, cost_set=cost_set)


def _per_opponent_action(matrix):
    matrix = np.array(matrix, dtype=float)
    if matrix.ndim == 1:
        matrix = matrix[None, None, :]
    elif matrix.ndim == 2:
        matrix = matrix[None, :, :]
    if matrix.ndim != 3:
        raise DimensionError('expected an array of shape (Y, rows, A), got %r' % (matrix.shape,))
    return matrix


def custom_scenario(vertices, target, scenario_id=CUSTOM_ID):
    """
    Scenario over the hull of ``vertices`` with the generic best response.
    One or two vertices give a parameterized body, and with it the phi^x*
    oracle.
    """
    vertices = [payoff_array(PayoffMatrix(v)) for v in vertices]
    response = GenericXStarResponse(target)
    target_functions = [('phi_star', PhiStar(target))]
    parameter_names = []
    if len(vertices) == 1:
        body = point_body(vertices[0])
    elif len(vertices) == 2:
        body = segment_body(vertices[0], vertices[1])
        parameter_names = ['y']
    else:
        body = ConvexBody(vertices)
    if isinstance(body, ParameterizedBody):
        target_functions.append(('phi_x_star', PhiPsiOracle(response, target, body)))
    return Scenario(scenario_id, body, target, response, target_functions, parameter_names)


def scenario_by_id(scenario_id, norm_p=NORM_INFINITY):
    if scenario_id == EXAMPLE_ONE_ID:
        return example_one_scenario(norm_p)
    if scenario_id == EXAMPLE_TWO_ID:
        return example_two_scenario(norm_p)
    if scenario_id == EXAMPLE_TWO_QUADRANT_ID:
        return example_two_quadrant_scenario(norm_p)
    raise UnknownExampleError('unknown example %r' % scenario_id)


def alpha_unif_estimate(scenario, resolution=None):
    """
    Grid estimate of max_m min_x d_p(x (.) m, C) over the body; diagnostic
    only.
    """
    phi = PhiStar(scenario.target)
    if isinstance(scenario.body, ParameterizedBody):
        values = phi.grid_values(scenario.body, resolution)
    else:
        values = phi.values(scenario.convex_body.vertices)
    return float(np.max(values))


#------------------------------------------------------------------------------#
#                            A D V E R S A R I E S                             #
#------------------------------------------------------------------------------#


class PlayHistory:
    """
    What an adversary may look at: the mixed actions and matrices of the
    rounds played so far, summarized by running sums.
    """

    def __init__(self, dimension, number_of_actions):
        self.rounds = 0
        self.payoff_sum = np.zeros(dimension)
        self.matrix_sum = np.zeros((dimension, number_of_actions))
        self.last_action = None
        self.last_matrix = None

    def record(self, action, m):
        entries = payoff_array(m)
        self.payoff_sum = self.payoff_sum + combine(action, entries)
        self.matrix_sum = self.matrix_sum + entries
        self.last_action = action
        self.last_matrix = entries
        self.rounds += 1

    @property
    def average_payoff(self):
        return self.payoff_sum / max(1, self.rounds)

    @property
    def average_matrix(self):
        return self.matrix_sum / max(1, self.rounds)


class Adversary:
    """
    Base class. ``emit`` is called before the strategy's action of the round
    is revealed and must only use ``history``.
    """

    adversary_id = 'adversary'

    def reset(self, rng):
        self._rng = rng

    def emit(self, history):
        raise NotImplementedError


class ConstantAdversary(Adversary):

    adversary_id = 'constant'

    def __init__(self, matrix):
        self._matrix = payoff_array(PayoffMatrix(matrix))

    def emit(self, history):
        return self._matrix


class PeriodicAdversary(Adversary):
    """
    Cycles through ``schedule``. With ``align`` the matrix changes with the
    blocks of the block strategy (block n plays schedule[(n - 1) mod len]),
    otherwise every round.
    """

    adversary_id = 'periodic'

    def __init__(self, schedule, align=True):
        if len(schedule) == 0:
            raise InvalidParameterError('periodic schedule is empty')
        self._schedule = [payoff_array(PayoffMatrix(m)) for m in schedule]
        self._align = align

    def emit(self, history):
        t = history.rounds + 1
        index = block_of_round(t) - 1 if self._align else t - 1
        return self._schedule[index % len(self._schedule)]


class SwitchingAdversary(Adversary):
    """
    Plays ``anchor`` until the average payoff is within ``epsilon`` (sup
    norm) of ``anchor_point``, then ``switch`` for as many rounds as were
    played so far; the cycle restarts with epsilon halved.
    """

    adversary_id = 'switching'

    def __init__(self, anchor, switch, anchor_point, epsilon=SWITCHING_INITIAL_EPSILON):
        if epsilon <= 0.0:
            raise InvalidParameterError('switching epsilon must be positive: %r' % epsilon)
        self._anchor = payoff_array(PayoffMatrix(anchor))
        self._switch = payoff_array(PayoffMatrix(switch))
        self._anchor_point = np.array(anchor_point, dtype=float).ravel()
        self._initial_epsilon = float(epsilon)
        self.reset(None)

    def reset(self, rng):
        super(SwitchingAdversary, self).reset(rng)
        self._epsilon = self._initial_epsilon
        self._remaining = 0
        self._switching = False
        self._cycles = 0

    @property
    def epsilon(self):
        return self._epsilon

    @property
    def cycles(self):
        return self._cycles

    def emit(self, history):
        if self._switching:
            if self._remaining > 0:
                self._remaining -= 1
                return self._switch
            self._switching = False
            self._epsilon /= 2.0
            self._cycles += 1
        if history.rounds > 0:
            gap = float(np.max(np.abs(history.average_payoff - self._anchor_point)))
            if gap <= self._epsilon:
                logger.debug('switching after %d rounds, epsilon %g', history.rounds, self._epsilon)
                self._switching = True
                self._remaining = history.rounds - 1
                return self._switch
        return self._anchor


class RandomIIDAdversary(Adversary):
    """
    Draws a vertex of K independently every round.
    """

    adversary_id = 'random'

    def __init__(self, vertices, probabilities=None):
        self._vertices = [payoff_array(PayoffMatrix(v)) for v in vertices]
        if len(self._vertices) == 0:
            raise InvalidParameterError('random adversary needs at least one vertex')
        if probabilities is None:
            probabilities = np.full(len(self._vertices), 1.0 / len(self._vertices))
        probabilities = np.array(probabilities, dtype=float)
        if probabilities.size != len(self._vertices) or np.any(probabilities < 0.0) or probabilities.sum() <= 0.0:
            raise InvalidParameterError('bad vertex probabilities: %r' % probabilities)
        self._probabilities = probabilities / probabilities.sum()
        self._rng = None

    def emit(self, history):
        if self._rng is None:
            raise AdversaryError('random adversary used before reset(rng)')
        return self._vertices[int(self._rng.choice(len(self._vertices), p=self._probabilities))]


class ScriptedAdversary(Adversary):
    """
    Replays a fixed list of matrices, cycling when ``repeat`` is set.
    """

    adversary_id = 'scripted'

    def __init__(self, script, repeat=True):
        if len(script) == 0:
            raise InvalidParameterError('adversary script is empty')
        self._script = [payoff_array(PayoffMatrix(m)) for m in script]
        self._repeat = repeat

    def emit(self, history):
        t = history.rounds
        if t >= len(self._script) and not self._repeat:
            raise AdversaryError('adversary script exhausted after %d rounds' % len(self._script))
        return self._script[t % len(self._script)]


def switching_adversary(scenario, epsilon=SWITCHING_INITIAL_EPSILON):
    """
    The switching construction of each example: the first example anchors on
    m_dagger (x* payoff (3, 4)) and switches to m_sharp; the second anchors on
    [[-1, 1]] (x* payoff 0) and switches to [[1, 1]].
    """
    if scenario.scenario_id == EXAMPLE_ONE_ID:
        return SwitchingAdversary(M_DAGGER, M_SHARP, [3.0, 4.0], epsilon)
    if scenario.scenario_id in (EXAMPLE_TWO_ID, EXAMPLE_TWO_QUADRANT_ID):
        anchor = [[-1.0, 1.0]]
        return SwitchingAdversary(anchor, [[1.0, 1.0]], combine(scenario.response.respond(anchor), anchor), epsilon)
    raise UnknownExampleError('no switching construction for %r' % scenario.scenario_id)


#------------------------------------------------------------------------------#
#                              S I M U L A T I O N                             #
#------------------------------------------------------------------------------#


def make_generators(seed):
    """
    Independent PCG64 streams for the adversary and for action sampling.
    """
    adversary_seed, sampling_seed = np.random.SeedSequence(seed).spawn(2)
    return np.random.Generator(np.random.PCG64(adversary_seed)), np.random.Generator(np.random.PCG64(sampling_seed))


def check_checkpoints(checkpoints, horizon):
    checkpoints = [int(t) for t in checkpoints]
    if not checkpoints:
        raise InvalidParameterError('at least one checkpoint is needed')
    for earlier, later in zip(checkpoints, checkpoints[1:]):
        if later <= earlier:
            raise InvalidParameterError('checkpoints must increase strictly: %r then %r' % (earlier, later))
    if checkpoints[0] < 1 or checkpoints[-1] > horizon:
        raise InvalidParameterError('checkpoints must lie in [1, %d]' % horizon)
    return checkpoints


def run(scenario, strategy, adversary, horizon, seed=0, checkpoints=None,
        audit=False, sample_actions=False, no_grouping=False):
    """
    Function will play ``horizon`` rounds of ``strategy`` against
    ``adversary`` in ``scenario`` and return the RunRecord of the metrics at
    each checkpoint: average payoff, average matrix, the distances to the
    target expansions, the certificate gap and bound (block strategies),
    the discrepancy norm, and optionally the no-grouping quantity and the
    averages of sampled actions.
    """
    assert isinstance(scenario, Scenario), 'scenario is not a Scenario class: %r' % scenario
    assert isinstance(adversary, Adversary), 'adversary is not a Adversary class: %r' % adversary
    assert isinstance(horizon, int), 'horizon is not a Integer class: %r' % horizon
    if horizon < 1:
        raise InvalidParameterError('horizon must be positive: %r' % horizon)
    checkpoints = check_checkpoints(geometric_checkpoints(horizon) if checkpoints is None else checkpoints, horizon)
    has_certificate = isinstance(strategy, BlockStrategy)
    d = scenario.d
    A = scenario.number_of_actions

    columns = ['t'] + ['rbar_%d' % i for i in range(d)] + scenario.average_columns() + scenario.distance_columns()
    if has_certificate:
        columns += ['gap', 'bound']
    columns.append('delta_norm')
    if no_grouping:
        columns.append('no_grouping')
    if sample_actions:
        columns += ['realized_rbar_%d' % i for i in range(d)]
    extra = {'d': d, 'A': A, 'body_norm': scenario.body_norm, 'norm_p': scenario.target.norm_p}
    record = RunRecord(scenario.scenario_id, getattr(strategy, 'strategy_id', 'strategy'),
                       adversary.adversary_id, int(seed), horizon, columns, extra=extra)

    adversary_rng, sampling_rng = make_generators(seed)
    adversary.reset(adversary_rng)
    history = PlayHistory(d, A)
    comparator_sum = np.zeros(d)
    realized_sum = np.zeros(d)
    pending = list(reversed(checkpoints))
    logger.info('run %s / %s / %s, seed %d, horizon %d', record.scenario_id, record.strategy_id,
                record.adversary_id, record.seed, horizon)

    for t in range_inclusive(1, horizon):
        m = adversary.emit(history)
        if audit and not scenario.contains(m):
            logger.warning('adversary left K at round %d', t)
            raise AdversaryError('adversary emitted %r outside K at round %d' % (payoff_array(m).tolist(), t))
        action = strategy.act()
        strategy.observe(m)
        history.record(action, m)
        if no_grouping:
            comparator_sum = comparator_sum + combine(scenario.response.respond(m), m)
        if sample_actions:
            realized_sum = realized_sum + payoff_array(m)[:, int(sampling_rng.choice(A, p=action.weights))]

        if pending and pending[-1] == t:
            pending.pop()
            rbar = history.average_payoff
            mbar = history.average_matrix
            row = [t] + list(rbar) + scenario.average_values(mbar) + scenario.distances(rbar, mbar)
            if has_certificate:
                certificate = strategy.certificate(t, scenario.body_norm)
                row += [certificate['gap'], certificate['bound']]
            row.append(strategy.delta_norm)
            if no_grouping:
                row.append(lp_norm(history.payoff_sum / t - comparator_sum / t, NORM_ONE))
            if sample_actions:
                row += list(realized_sum / t)
            record.add_row(row)
    return record
