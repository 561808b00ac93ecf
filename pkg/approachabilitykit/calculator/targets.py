# -*- coding: utf-8 -*-
"""
Target functions m -> alpha: the best-in-hindsight phi*, its concave
envelope, the targets phi^Psi induced by a response function, constant-play
targets alpha_x, closed forms for the two worked examples and the grid
oracles that check them.
"""

import logging
import math
import numpy as np
from scipy.spatial import ConvexHull  # Third party library for the upper facets of sampled graphs.
from scipy.spatial import QhullError
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.foundation.utils import *
from approachabilitykit.calculator.geometry import *
from approachabilitykit.calculator.responses import *


logger = logging.getLogger(__name__)


class TargetFunction:
    """
    Base class of every target function. ``value`` returns phi(m) >= 0.
    """

    target_id = 'phi'

    def value(self, m):
        raise NotImplementedError

    def values(self, matrices):
        return np.array([self.value(m) for m in matrices])

    def grid_values(self, body, resolution=None):
        """
        Values on the parameter grid of ``body``; cached per body and
        resolution.
        """
        if not hasattr(self, '_grid_cache'):
            self._grid_cache = {}
        key = (id(body), resolution)
        if key not in self._grid_cache:
            thetas, matrices = body.grid(resolution)
            self._grid_cache[key] = (body, self.values(matrices))
        return self._grid_cache[key][1]

    def __call__(self, m):
        return self.value(m)

    def __repr__(self):
        return '%s()' % self.__class__.__name__


class PhiStar(TargetFunction):
    """
    phi*(m) = min_x d_p(x (.) m, C), by way of the best response.
    """

    target_id = 'phi_star'

    def __init__(self, target):
        self._response = GenericXStarResponse(target)

    @property
    def response(self):
        return self._response

    def value(self, m):
        return self._response.value(m)


def _example_one_parameter(m):
    return ExampleOneXStarResponse().parameter(m)


def _example_two_parameters(m):
    entries = payoff_array(m)
    if entries.shape != (1, 2):
        raise DimensionError('expected a 1 x 2 payoff matrix, got shape %r' % (entries.shape,))
    return float(entries[0, 0]), float(entries[0, 1])


def _check_example(example_id):
    if example_id not in (EXAMPLE_ONE_ID, EXAMPLE_TWO_ID, EXAMPLE_TWO_QUADRANT_ID):
        raise UnknownExampleError('no closed form for example %r' % example_id)
    return example_id


class PhiStarClosedForm(TargetFunction):

    target_id = 'phi_star'

    def __init__(self, example_id):
        self._example_id = _check_example(example_id)

    def value(self, m):
        if self._example_id == EXAMPLE_ONE_ID:
            nu = _example_one_parameter(m)
            if nu <= 0.25:
                return 4.0 - nu
            if nu <= 0.5:
                return 5.0 - 5.0 * nu
            if nu <= 0.75:
                return 5.0 * nu
            return 3.0 + nu
        v, w = _example_two_parameters(m)
        if v * w > 0.0:
            return min(abs(v), abs(w))
        return 0.0

    def __repr__(self):
        return 'PhiStarClosedForm(%r)' % self._example_id


class CavPhiStarClosedForm(TargetFunction):
    """
    Concave envelope of phi* over the example's body: identically 4 on the
    segment of the first example, 1 - |v - w| / 2 on the square of the second.
    """

    target_id = 'cav_phi_star'

    def __init__(self, example_id):
        self._example_id = _check_example(example_id)
        if example_id == EXAMPLE_TWO_QUADRANT_ID:
            raise UnknownExampleError('the envelope depends on the body; no closed form for %r' % example_id)

    def value(self, m):
        if self._example_id == EXAMPLE_ONE_ID:
            _example_one_parameter(m)
            return 4.0
        v, w = _example_two_parameters(m)
        return 1.0 - abs(v - w) / 2.0

    def __repr__(self):
        return 'CavPhiStarClosedForm(%r)' % self._example_id


def _example_two_half(v, w):
    return min((1.0 + v + w) / 3.0, (1.0 + v) / 2.0, (1.0 + w) / 2.0)


class PhiPsiClosedForm(TargetFunction):
    """
    phi^{x*} of the examples. First example: alpha_1(nu) = max(4 - nu, 3 + nu).
    Second example: max(h(v, w), h(-v, -w)) with
    h(v, w) = min((1 + v + w) / 3, (1 + v) / 2, (1 + w) / 2).
    """

    target_id = 'phi_x_star'

    def __init__(self, example_id):
        self._example_id = _check_example(example_id)
        if example_id == EXAMPLE_TWO_QUADRANT_ID:
            raise UnknownExampleError('the target depends on the body; no closed form for %r' % example_id)

    def value(self, m):
        if self._example_id == EXAMPLE_ONE_ID:
            nu = _example_one_parameter(m)
            return max(4.0 - nu, 3.0 + nu)
        v, w = _example_two_parameters(m)
        return max(0.0, _example_two_half(v, w), _example_two_half(-v, -w))

    def __repr__(self):
        return 'PhiPsiClosedForm(%r)' % self._example_id


class AlphaX(TargetFunction):
    """
    alpha_x(m) = d_p(x (.) m, C), the target of playing ``x`` forever.
    """

    target_id = 'alpha_x'

    def __init__(self, action, target):
        assert isinstance(target, TargetSet), 'target is not a TargetSet class: %r' % target
        self._action = MixedAction(action)
        self._target = target

    @property
    def action(self):
        return self._action

    def value(self, m):
        return self._target.distance(combine(self._action, m))

    def __repr__(self):
        return 'AlphaX(%r)' % self._action.weights.tolist()


class UpperConcaveEnvelope:
    """
    Least concave majorant of a function sampled on a one or two parameter
    grid. One parameter: upper hull chain, evaluated by interpolation. Two
    parameters: the upper facets of the 3-D hull of the sampled graph,
    evaluated as the minimum over the facet planes.
    """

    def __init__(self, points, values):
        points = np.asarray(points, dtype=float)
        values = np.asarray(values, dtype=float).ravel()
        if points.ndim == 1:
            points = points[:, None]
        if points.shape[0] != values.size:
            raise DimensionError('%d points against %d values' % (points.shape[0], values.size))
        if values.size < 2 and points.shape[1] > 0:
            raise OracleError('the envelope needs at least 2 grid points, got %d' % values.size)
        if points.shape[1] > 2:
            raise OracleError('envelopes are available for at most two parameters, got %d' % points.shape[1])
        self._dimension = points.shape[1]
        self._constant = None
        self._planes = None
        if self._dimension == 0:
            self._constant = float(np.max(values))
        elif self._dimension == 1:
            self.build_chain(points[:, 0], values)
        else:
            self.build_facets(points, values)

    @property
    def dimension(self):
        return self._dimension

    def evaluate(self, points):
        """
        Envelope at every row of ``points`` (shape (n, k)).
        """
        points = np.asarray(points, dtype=float)
        if self._dimension == 0:
            return np.full(max(1, points.shape[0] if points.ndim == 2 else 1), self._constant)
        if points.ndim == 1:
            points = points.reshape(-1, self._dimension)
        if self._dimension == 1:
            return np.interp(points[:, 0], self._chain_x, self._chain_y)
        result = np.empty(points.shape[0])
        for start in range(0, points.shape[0], ENVELOPE_EVALUATION_CHUNK):
            chunk = points[start:start + ENVELOPE_EVALUATION_CHUNK]
            heights = self._planes[:, 0][None, :] + chunk @ self._planes[:, 1:].T
            result[start:start + ENVELOPE_EVALUATION_CHUNK] = heights.min(axis=1)
        return result

    def __call__(self, point):
        return float(self.evaluate(np.atleast_2d(np.asarray(point, dtype=float).reshape(1, -1)))[0])

    #--------------------------------------------------------------------------#
    #                     P R I V A T E  F U N C T I O N S                     #
    #--------------------------------------------------------------------------#

    def build_chain(self, x, y):
        order = np.lexsort((y, x))
        x = x[order]
        y = y[order]

        # Keep the largest value of every abscissa.
        keep = np.append(x[1:] != x[:-1], True)
        x = x[keep]
        y = y[keep]

        chain = []
        for point in zip(x, y):
            while len(chain) >= 2:
                (x1, y1), (x2, y2) = chain[-2], chain[-1]
                cross = (x2 - x1) * (point[1] - y1) - (y2 - y1) * (point[0] - x1)
                if cross >= 0.0:
                    chain.pop()
                else:
                    break
            chain.append(point)
        self._chain_x = np.array([p[0] for p in chain])
        self._chain_y = np.array([p[1] for p in chain])

    def build_facets(self, points, values):
        # Rows of self._planes are (c0, c1, c2) with height c0 + c1 x + c2 y.
        design = np.column_stack((np.ones(values.size), points))
        coefficients = np.linalg.lstsq(design, values, rcond=None)[0]
        residual = float(np.max(np.abs(design @ coefficients - values)))
        scale = 1.0 + float(np.max(np.abs(values)))
        if residual <= 1e-12 * scale:
            self._planes = coefficients[None, :]
            return
        try:
            hull = ConvexHull(np.column_stack((points, values)))
        except QhullError as error:
            raise OracleError('degenerate sampled graph: %s' % error)
        normals = hull.equations[:, :3]
        offsets = hull.equations[:, 3]
        upper = normals[:, 2] > 1e-12
        normals = normals[upper]
        offsets = offsets[upper]
        self._planes = np.column_stack((-offsets, -normals[:, 0], -normals[:, 1])) / normals[:, 2][:, None]


def cav_oracle(points, values):
    """
    Function will return the envelope of the sampled graph evaluated back on
    the sample points.
    """
    envelope = UpperConcaveEnvelope(points, values)
    return envelope.evaluate(points)


class PhiPsiOracle(TargetFunction):
    """
    phi^Psi(m) = sup { d_p(sum_i l_i Psi(m_i) (.) m_i, C) : sum_i l_i m_i = m }.

    With d_p(r, C) = max(0, max_j <U_j, r> - s_j) the supremum is the largest
    concave envelope of the functions m -> <U_j, Psi(m) (.) m> - s_j, each
    computed on the parameter grid of the body. When the pieces only sample
    the dual sphere the result is a lower bound. A budget of one atom gives
    d_p(Psi(m) (.) m, C); a budget of two atoms on a two parameter body uses
    pairs made of a grid point and a point of the opposite ray.
    """

    target_id = 'phi_psi'

    def __init__(self, response, target, body, budget=None, resolution=None,
                 weight_resolution=DECOMPOSITION_WEIGHT_GRID_SIZE, payoff_map=None):
        assert isinstance(response, ResponseFunction), 'response is not a ResponseFunction class: %r' % response
        assert isinstance(target, TargetSet), 'target is not a TargetSet class: %r' % target
        assert isinstance(body, ParameterizedBody), 'body is not a ParameterizedBody class: %r' % body
        largest = body.d * body.number_of_actions + 1
        if budget is None:
            budget = largest
        if budget < 1 or budget > largest:
            raise InvalidParameterError('decomposition budget must lie in [1, %d], got %r' % (largest, budget))
        self._response = response
        self._target = target
        self._body = body
        self._budget = int(budget)
        self._resolution = resolution
        self._weight_resolution = weight_resolution
        self._payoff_map = None if payoff_map is None else np.atleast_2d(np.array(payoff_map, dtype=float))
        self._envelopes = None

    @property
    def budget(self):
        return self._budget

    def response_payoff(self, m):
        payoff = combine(self._response.respond(m), m)
        if self._payoff_map is not None:
            payoff = self._payoff_map @ payoff
        return payoff

    def value(self, m):
        if self._budget == 1 or self._body.dimension == 0:
            return self._target.distance(self.response_payoff(m))
        theta = self._body.parameters_of(m)
        if self._budget == 2 and self._body.dimension == 2:
            return self.pair_value(theta)
        directions, offsets, exact = self._target.dual_pieces()
        if directions.shape[0] == 0:
            return 0.0
        best = max(float(envelope(theta)) for envelope in self.envelopes())
        return max(0.0, best)

    def values(self, matrices):
        """
        Same as ``value`` on every matrix, with the envelopes evaluated on
        all parameters at once.
        """
        if self._budget == 1 or self._body.dimension == 0 or (self._budget == 2 and self._body.dimension == 2):
            return super(PhiPsiOracle, self).values(matrices)
        if self._target.dual_pieces()[0].shape[0] == 0 or len(matrices) == 0:
            return np.zeros(len(matrices))
        thetas = np.array([self._body.parameters_of(m) for m in matrices])
        best = np.max([envelope.evaluate(thetas) for envelope in self.envelopes()], axis=0)
        return np.maximum(0.0, best)

    #--------------------------------------------------------------------------#
    #                     P R I V A T E  F U N C T I O N S                     #
    #--------------------------------------------------------------------------#

    def grid_payoffs(self):
        thetas, matrices = self._body.grid(self._resolution)
        return thetas, np.array([self.response_payoff(matrix) for matrix in matrices])

    def envelopes(self):
        if self._envelopes is None:
            thetas, payoffs = self.grid_payoffs()
            directions, offsets, exact = self._target.dual_pieces()
            pieces = payoffs @ directions.T - offsets[None, :]
            self._envelopes = [UpperConcaveEnvelope(thetas, pieces[:, j]) for j in range(pieces.shape[1])]
            logger.debug('built %d envelopes over %d grid points', len(self._envelopes), thetas.shape[0])
        return self._envelopes

    def pair_value(self, theta):
        thetas, payoffs = self.grid_payoffs_cached()
        lower = self._body.lower
        upper = self._body.upper
        best = self._target.distance(self.response_payoff(self._body.matrix(theta)))
        weights = np.linspace(0.0, 1.0, self._weight_resolution)[1:-1]
        for point, payoff in zip(thetas, payoffs):
            direction = theta - point
            if not np.any(direction):
                continue

            # Farthest point of the box on the ray from ``point`` through theta.
            reach = np.inf
            for i in range(2):
                if direction[i] > 0.0:
                    reach = min(reach, (upper[i] - theta[i]) / direction[i])
                elif direction[i] < 0.0:
                    reach = min(reach, (lower[i] - theta[i]) / direction[i])
            if reach <= 0.0:
                continue
            for weight in weights:
                # theta = weight * point + (1 - weight) * other
                step = weight / (1.0 - weight)
                if step > reach:
                    break
                other = theta + step * direction
                combined = weight * payoff + (1.0 - weight) * self.response_payoff(self._body.matrix(other))
                best = max(best, self._target.distance(combined))
        return best

    def grid_payoffs_cached(self):
        if not hasattr(self, '_grid_payoffs'):
            self._grid_payoffs = self.grid_payoffs()
        return self._grid_payoffs

    def __repr__(self):
        return 'PhiPsiOracle(%r, %r, budget=%d)' % (self._response, self._target, self._budget)


class ConstrainedPhiPsi(PhiPsiOracle):
    """
    Target of the sample-path constraint setting: phi^Psi measured on the
    payoff part P(x (.) m) against the payoff set, with Psi the constrained
    best response.
    """

    target_id = 'constrained_phi_psi'

    def __init__(self, response, body, budget=None, resolution=None):
        assert isinstance(response, ConstrainedXStarResponse), 'response is not a ConstrainedXStarResponse class: %r' % response
        super(ConstrainedPhiPsi, self).__init__(response, response.payoff_set, body, budget, resolution,
                                                payoff_map=response.payoff_map)


def phi_star(m, target):
    return PhiStar(target).value(m)


def cav_phi_star(m, example_id):
    return CavPhiStarClosedForm(example_id).value(m)


def phi_psi_oracle(m, response, target, body, budget=None, resolution=None):
    return PhiPsiOracle(response, target, body, budget, resolution).value(m)


def alpha_x(m, action, target):
    return AlphaX(action, target).value(m)


def graph_distance(mbar, rbar, phi, body, target, resolution=None):
    """
    Distance from (mbar, rbar) to the graph {(m, r) : r in C_phi(m)},
    restricted to m in {mbar} and the parameter grid of ``body``. The r part
    is the l_p distance to the expansion.
    """
    assert isinstance(phi, TargetFunction), 'phi is not a TargetFunction class: %r' % phi
    mbar = payoff_array(mbar)
    rbar = np.asarray(rbar, dtype=float).ravel()
    best = target.expansion_distance(rbar, phi.value(mbar))
    thetas, matrices = body.grid(resolution)
    levels = phi.grid_values(body, resolution)
    offsets = np.sum((matrices - mbar[None, :, :]) ** 2, axis=(1, 2))

    # A grid point can only win when its matrix part is below the best so far.
    for k in np.argsort(offsets, kind='stable'):
        if offsets[k] >= best * best:
            break
        candidate = math.sqrt(offsets[k] + target.expansion_distance(rbar, levels[k]) ** 2)
        best = min(best, candidate)
    return best


class CavPhiStarOracle(TargetFunction):
    """
    Concave envelope of a target function sampled on the parameter grid of
    a body; the grid counterpart of the closed-form envelopes.
    """

    target_id = 'cav_phi_star'

    def __init__(self, phi, body, resolution=None):
        assert isinstance(phi, TargetFunction), 'phi is not a TargetFunction class: %r' % phi
        assert isinstance(body, ParameterizedBody), 'body is not a ParameterizedBody class: %r' % body
        self._phi = phi
        self._body = body
        self._resolution = resolution
        self._envelope = None

    def value(self, m):
        if self._body.dimension == 0:
            return self._phi.value(m)
        if self._envelope is None:
            thetas, matrices = self._body.grid(self._resolution)
            self._envelope = UpperConcaveEnvelope(thetas, self._phi.grid_values(self._body, self._resolution))
        return max(0.0, self._envelope(self._body.parameters_of(m)))

    def __repr__(self):
        return 'CavPhiStarOracle(%r)' % self._phi
