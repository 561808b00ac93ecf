# -*- coding: utf-8 -*-
"""
Vectors, mixed actions, target sets with their lp distances, and the convex
bodies the opponent chooses its payoff matrices from.
"""

import itertools
import math
import numpy as np
from scipy.optimize import linprog  # Third party library for exact LP solves.
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.foundation.utils import *


class PayoffMatrix:
    """
    The opponent's choice for one round: a ``d x A`` real matrix whose
    column ``a`` is the vector payoff of action ``a``.
    """

    def __init__(self, entries):
        if isinstance(entries, PayoffMatrix):
            entries = entries.entries
        entries = np.array(entries, dtype=float)
        if entries.ndim != 2:
            raise DimensionError('payoff matrix must be two dimensional, got shape %r' % (entries.shape,))
        if entries.shape[0] < 1 or entries.shape[1] < 1:
            raise DimensionError('payoff matrix needs d >= 1 and A >= 1, got shape %r' % (entries.shape,))
        if not np.all(np.isfinite(entries)):
            raise InvalidParameterError('payoff matrix has non-finite entries: %r' % entries)
        entries.setflags(write=False)
        self._entries = entries

    @property
    def entries(self):
        return self._entries

    @property
    def d(self):
        return self._entries.shape[0]

    @property
    def number_of_actions(self):
        return self._entries.shape[1]

    def column(self, a):
        return self._entries[:, a]

    def __eq__(self, other):
        return isinstance(other, PayoffMatrix) and np.array_equal(self._entries, other._entries)

    __hash__ = None

    def __repr__(self):
        return 'PayoffMatrix(%r)' % self._entries.tolist()


class MixedAction:
    """
    A point of the simplex over the decision maker's actions. Weights are
    clipped at zero and renormalized on construction.
    """

    def __init__(self, weights):
        if isinstance(weights, MixedAction):
            weights = weights.weights
        weights = np.array(weights, dtype=float).ravel()
        if weights.size == 0:
            raise DimensionError('mixed action needs at least one weight')
        if not np.all(np.isfinite(weights)):
            raise InvalidParameterError('mixed action has non-finite weights: %r' % weights)
        if np.any(weights < -MIXED_ACTION_TOLERANCE):
            raise InvalidParameterError('mixed action has negative weights: %r' % weights)
        weights = np.clip(weights, 0.0, None)
        total = weights.sum()
        if total <= 0.0:
            raise InvalidParameterError('mixed action weights sum to zero')
        if total != 1.0:
            weights = weights / total
        weights.setflags(write=False)
        self._weights = weights

    @classmethod
    def uniform(cls, number_of_actions):
        return cls(np.full(number_of_actions, 1.0 / number_of_actions))

    @classmethod
    def pure(cls, number_of_actions, action):
        weights = np.zeros(number_of_actions)
        weights[action] = 1.0
        return cls(weights)

    @property
    def weights(self):
        return self._weights

    @property
    def number_of_actions(self):
        return self._weights.size

    def __eq__(self, other):
        return isinstance(other, MixedAction) and np.array_equal(self._weights, other._weights)

    __hash__ = None

    def __repr__(self):
        return 'MixedAction(%r)' % self._weights.tolist()


def payoff_array(m):
    """
    Raw ``d x A`` array of a payoff matrix; plain arrays pass through.
    """
    if isinstance(m, PayoffMatrix):
        return m.entries
    return np.asarray(m, dtype=float)


def weights_array(x):
    if isinstance(x, MixedAction):
        return x.weights
    return np.asarray(x, dtype=float).ravel()


def combine(x, m):
    """
    Vector payoff x (.) m = sum_a x_a m_a of mixed action ``x`` against ``m``.
    """
    weights = weights_array(x)
    entries = payoff_array(m)
    if entries.ndim != 2 or weights.size != entries.shape[1]:
        raise DimensionError('mixed action of length %d against payoff matrix of shape %r' % (weights.size, entries.shape))
    return entries @ weights


def simplex_projection(v):
    """
    Euclidean projection of ``v`` onto the simplex, sort based.
    """
    v = np.asarray(v, dtype=float).ravel()
    u = np.sort(v)[::-1]
    css = np.cumsum(u)
    ks = np.arange(1, v.size + 1)
    rho = ks[u - (css - 1.0) / ks > 0][-1]
    theta = (css[rho - 1] - 1.0) / rho
    return np.maximum(v - theta, 0.0)


def project_to_simplex(v):
    v = np.asarray(v, dtype=float).ravel()
    if v.size == 0 or not np.all(np.isfinite(v)):
        raise InvalidParameterError('cannot project %r onto the simplex' % v)
    return MixedAction(simplex_projection(v))


def project_onto_hull(points, r, tolerance=POLYTOPE_PROJECTION_TOLERANCE,
                      max_iterations=POLYTOPE_PROJECTION_MAX_ITERATIONS):
    """
    Function will project ``r`` onto the convex hull of the rows of
    ``points`` with accelerated projected gradient on the convex combination
    weights. Stops once the Frank-Wolfe gap drops below ``tolerance``.

    Returns the pair (projection, weights); raises ConvergenceError, carrying
    the last projection, when the gap is still above ``tolerance`` after
    ``max_iterations``.
    """
    points = np.asarray(points, dtype=float)
    r = np.asarray(r, dtype=float).ravel()
    n = points.shape[0]
    if n == 1:
        return points[0].copy(), np.ones(1)
    lipschitz = float(np.linalg.norm(points, ord=2)) ** 2
    if lipschitz == 0.0:
        return np.zeros_like(r), np.full(n, 1.0 / n)

    weights = np.full(n, 1.0 / n)
    momentum = weights.copy()
    t = 1.0
    gap = float('inf')
    for iteration in range(max_iterations):
        gradient = points @ (points.T @ momentum - r)
        updated = simplex_projection(momentum - gradient / lipschitz)
        gradient = points @ (points.T @ updated - r)
        gap = float(gradient @ updated - gradient.min())
        if gap <= tolerance:
            return points.T @ updated, updated
        t_next = (1.0 + math.sqrt(1.0 + 4.0 * t * t)) / 2.0
        momentum = updated + ((t - 1.0) / t_next) * (updated - weights)
        weights = updated
        t = t_next
    raise ConvergenceError('hull projection stopped after %d iterations with gap %.3g' % (max_iterations, gap),
                           best_iterate=points.T @ weights, best_value=gap)


class Witness:
    """
    Linear description of a target set: c is in the set iff c = matrix @ z
    for some z within ``bounds`` with ``eq_matrix @ z = eq_vector``.
    """

    def __init__(self, matrix, bounds, eq_matrix=None, eq_vector=None):
        self.matrix = np.asarray(matrix, dtype=float)
        self.bounds = list(bounds)
        self.eq_matrix = None if eq_matrix is None else np.asarray(eq_matrix, dtype=float)
        self.eq_vector = None if eq_vector is None else np.asarray(eq_vector, dtype=float)

    @property
    def size(self):
        return self.matrix.shape[1]


def _dual_ball_vertices(dimension, p):
    """
    Vertices of the unit ball of the dual norm, for p in {1, inf}.
    """
    if p == NORM_INFINITY:
        eye = np.eye(dimension)
        return np.vstack((eye, -eye))
    return np.array(list(itertools.product((1.0, -1.0), repeat=dimension)))


class TargetSet:
    """
    Base convex set C with the distance d_p(., C) and its alpha expansions.
    """

    kind = None

    def __init__(self, dimension, norm_p=NORM_INFINITY):
        if dimension < 1:
            raise DimensionError('target set dimension must be positive: %r' % dimension)
        self._dimension = int(dimension)
        self._norm_p = check_norm(norm_p)
        self._pieces = None

    #--------------------------------------------------------------------------#
    #                     P U B L I C  F U N C T I O N S                       #
    #--------------------------------------------------------------------------#

    @property
    def dimension(self):
        return self._dimension

    @property
    def norm_p(self):
        return self._norm_p

    def distance(self, r):
        raise NotImplementedError

    def expansion_distance(self, r, alpha):
        if alpha < 0:
            raise InvalidParameterError('expansion index must be nonnegative: %r' % alpha)
        return max(0.0, self.distance(r) - alpha)

    def contains(self, r, tolerance=CONTAINMENT_TOLERANCE):
        return self.distance(r) <= tolerance

    def project(self, r):
        """
        Euclidean projection onto the base set.
        """
        raise NotImplementedError

    def witness(self):
        raise NotImplementedError

    def scaled(self, factor):
        raise NotImplementedError

    def dual_pieces(self):
        """
        Finite family (U, sigma) with d_p(r, C) = max(0, max_j <U_j, r> - sigma_j)
        and a flag telling whether the identity is exact or the family only
        gives a lower bound.
        """
        if self._pieces is None:
            self._pieces = self.build_dual_pieces()
        return self._pieces

    def piece_distance(self, r):
        directions, offsets, exact = self.dual_pieces()
        if directions.shape[0] == 0:
            return 0.0
        return max(0.0, float(np.max(directions @ np.asarray(r, dtype=float) - offsets)))

    def subgradient(self, r):
        """
        A subgradient of d_p(., C) at ``r``; zero inside the set.
        """
        r = self.vector(r)
        if self.contains(r):
            return np.zeros(self._dimension)
        if self._norm_p == NORM_TWO:
            difference = r - self.project(r)
            return difference / np.linalg.norm(difference)
        directions, offsets, exact = self.dual_pieces()
        return directions[int(np.argmax(directions @ r - offsets))].copy()

    def __repr__(self):
        return '%s(d=%d, p=%s)' % (self.__class__.__name__, self._dimension, self._norm_p)

    #--------------------------------------------------------------------------#
    #                     P R I V A T E  F U N C T I O N S                     #
    #--------------------------------------------------------------------------#

    def build_dual_pieces(self):
        raise NotImplementedError

    def vector(self, r):
        r = np.asarray(r, dtype=float).ravel()
        if r.size != self._dimension:
            raise DimensionError('expected a vector of length %d, got %d' % (self._dimension, r.size))
        return r

    def sampled_pieces(self, support):
        directions = sphere_directions(self._dimension)
        offsets = np.array([support(u) for u in directions])
        return directions, offsets, False


class NegativeOrthant(TargetSet):
    kind = 'negative_orthant'

    def distance(self, r):
        return lp_norm(np.maximum(self.vector(r), 0.0), self._norm_p)

    def project(self, r):
        return np.minimum(self.vector(r), 0.0)

    def witness(self):
        return Witness(np.eye(self._dimension), [(None, 0.0)] * self._dimension)

    def scaled(self, factor):
        return NegativeOrthant(self._dimension, self._norm_p)

    def build_dual_pieces(self):
        d = self._dimension
        if self._norm_p == NORM_INFINITY:
            return np.eye(d), np.zeros(d), True
        if self._norm_p == NORM_ONE:
            directions = np.array([v for v in itertools.product((0.0, 1.0), repeat=d) if any(v)])
            return directions, np.zeros(len(directions)), True
        if d == 1:
            return np.ones((1, 1)), np.zeros(1), True
        directions = np.abs(sphere_directions(d))
        return directions, np.zeros(len(directions)), False


class Singleton(TargetSet):
    kind = 'singleton'

    def __init__(self, point, norm_p=NORM_INFINITY):
        point = np.array(point, dtype=float).ravel()
        super(Singleton, self).__init__(point.size, norm_p)
        if not np.all(np.isfinite(point)):
            raise InvalidParameterError('singleton point must be finite: %r' % point)
        self._point = point

    @property
    def point(self):
        return self._point.copy()

    def distance(self, r):
        return lp_norm(self.vector(r) - self._point, self._norm_p)

    def project(self, r):
        self.vector(r)
        return self._point.copy()

    def witness(self):
        return Witness(np.eye(self._dimension), [(c, c) for c in self._point])

    def scaled(self, factor):
        return Singleton(self._point * factor, self._norm_p)

    def build_dual_pieces(self):
        if self._norm_p == NORM_TWO and self._dimension > 1:
            return self.sampled_pieces(lambda u: float(u @ self._point))
        if self._norm_p == NORM_TWO:
            directions = np.array([[1.0], [-1.0]])
        else:
            directions = _dual_ball_vertices(self._dimension, self._norm_p)
        return directions, directions @ self._point, True

    def __repr__(self):
        return 'Singleton(%r, p=%s)' % (self._point.tolist(), self._norm_p)


class HalfLineBelow(TargetSet):
    """
    The set (-inf, threshold] of the real line.
    """
    kind = 'half_line_below'

    def __init__(self, threshold, norm_p=NORM_INFINITY):
        super(HalfLineBelow, self).__init__(1, norm_p)
        self._threshold = float(threshold)

    @property
    def threshold(self):
        return self._threshold

    def distance(self, r):
        return max(0.0, float(self.vector(r)[0]) - self._threshold)

    def project(self, r):
        return np.minimum(self.vector(r), self._threshold)

    def witness(self):
        return Witness(np.ones((1, 1)), [(None, self._threshold)])

    def scaled(self, factor):
        return HalfLineBelow(self._threshold * factor, self._norm_p)

    def build_dual_pieces(self):
        return np.ones((1, 1)), np.array([self._threshold]), True

    def __repr__(self):
        return 'HalfLineBelow(%r)' % self._threshold


class HalfLineAbove(TargetSet):
    """
    The set [threshold, inf) of the real line.
    """
    kind = 'half_line_above'

    def __init__(self, threshold, norm_p=NORM_INFINITY):
        super(HalfLineAbove, self).__init__(1, norm_p)
        self._threshold = float(threshold)

    @property
    def threshold(self):
        return self._threshold

    def distance(self, r):
        return max(0.0, self._threshold - float(self.vector(r)[0]))

    def project(self, r):
        return np.maximum(self.vector(r), self._threshold)

    def witness(self):
        return Witness(np.ones((1, 1)), [(self._threshold, None)])

    def scaled(self, factor):
        return HalfLineAbove(self._threshold * factor, self._norm_p)

    def build_dual_pieces(self):
        return -np.ones((1, 1)), np.array([-self._threshold]), True

    def __repr__(self):
        return 'HalfLineAbove(%r)' % self._threshold


class WholeSpace(TargetSet):
    kind = 'whole_space'

    def distance(self, r):
        self.vector(r)
        return 0.0

    def project(self, r):
        return self.vector(r).copy()

    def witness(self):
        return Witness(np.eye(self._dimension), [(None, None)] * self._dimension)

    def scaled(self, factor):
        return WholeSpace(self._dimension, self._norm_p)

    def build_dual_pieces(self):
        return np.zeros((0, self._dimension)), np.zeros(0), True


class Polytope(TargetSet):
    """
    Convex hull of a finite vertex list.
    """
    kind = 'polytope'

    def __init__(self, vertices, norm_p=NORM_INFINITY):
        vertices = np.array(vertices, dtype=float)
        if vertices.ndim == 1:
            vertices = vertices[:, None]
        if vertices.ndim != 2 or vertices.shape[0] < 1:
            raise DimensionError('polytope needs a non-empty vertex list')
        if not np.all(np.isfinite(vertices)):
            raise InvalidParameterError('polytope vertices must be finite')
        super(Polytope, self).__init__(vertices.shape[1], norm_p)
        self._vertices = np.unique(vertices, axis=0)

    @property
    def vertices(self):
        return self._vertices.copy()

    def distance(self, r):
        r = self.vector(r)
        if self._dimension == 1:
            low = float(self._vertices.min())
            high = float(self._vertices.max())
            return max(0.0, low - float(r[0]), float(r[0]) - high)
        if self._norm_p == NORM_TWO:
            projection, weights = project_onto_hull(self._vertices, r)
            return float(np.linalg.norm(r - projection))
        if self._dimension == 2:
            return self.piece_distance(r)
        return linear_distance(r, self.witness(), self._norm_p)

    def project(self, r):
        r = self.vector(r)
        if self._dimension == 1:
            return np.clip(r, self._vertices.min(), self._vertices.max())
        projection, weights = project_onto_hull(self._vertices, r)
        return projection

    def witness(self):
        n = self._vertices.shape[0]
        return Witness(self._vertices.T, [(0.0, None)] * n, np.ones((1, n)), np.ones(1))

    def scaled(self, factor):
        return Polytope(self._vertices * factor, self._norm_p)

    def build_dual_pieces(self):
        support = lambda u: float(np.max(self._vertices @ u))
        if self._dimension == 1:
            return (np.array([[1.0], [-1.0]]),
                    np.array([self._vertices.max(), -self._vertices.min()]), True)
        if self._dimension > 2 or self._norm_p == NORM_TWO:
            return self.sampled_pieces(support)

        # Dual ball vertices plus the normals of every vertex pair, scaled to
        # the dual unit sphere. Every cell vertex of the normal fan is there.
        q = dual_norm(self._norm_p)
        directions = [u for u in _dual_ball_vertices(2, self._norm_p)]
        for v, w in itertools.combinations(self._vertices, 2):
            normal = np.array([w[1] - v[1], v[0] - w[0]])
            size = lp_norm(normal, q)
            if size > 0.0:
                directions.append(normal / size)
                directions.append(-normal / size)
        directions = np.array(directions)
        offsets = np.array([support(u) for u in directions])
        return directions, offsets, True

    def __repr__(self):
        return 'Polytope(%r, p=%s)' % (self._vertices.tolist(), self._norm_p)


def linear_distance(r, witness, p):
    """
    d_p(r, C) by linear programming over the witness description of C,
    for p in {1, inf}.
    """
    r = np.asarray(r, dtype=float).ravel()
    d = r.size
    n = witness.size
    # Variables: z (n), s (d), t (1).
    cost = np.zeros(n + d + 1)
    cost[-1] = 1.0
    eye = np.eye(d)
    rows = [np.hstack((witness.matrix, -eye, np.zeros((d, 1)))),
            np.hstack((-witness.matrix, -eye, np.zeros((d, 1))))]
    rhs = [r, -r]
    if p == NORM_INFINITY:
        rows.append(np.hstack((np.zeros((d, n)), eye, -np.ones((d, 1)))))
        rhs.append(np.zeros(d))
    else:
        rows.append(np.hstack((np.zeros((1, n)), np.ones((1, d)), -np.ones((1, 1)))))
        rhs.append(np.zeros(1))
    eq_matrix = None
    eq_vector = None
    if witness.eq_matrix is not None:
        eq_matrix = np.hstack((witness.eq_matrix, np.zeros((witness.eq_matrix.shape[0], d + 1))))
        eq_vector = witness.eq_vector
    bounds = witness.bounds + [(0.0, None)] * (d + 1)
    result = linprog(cost, A_ub=np.vstack(rows), b_ub=np.concatenate(rhs),
                     A_eq=eq_matrix, b_eq=eq_vector, bounds=bounds, method='highs')
    if result.status != 0:
        raise ConvergenceError('distance program failed: %s' % result.message)
    return max(0.0, float(result.fun))


def distance_to_expansion(r, target, alpha):
    """
    d_p(r, C_alpha) = max(0, d_p(r, C) - alpha).
    """
    assert isinstance(target, TargetSet), 'target is not a TargetSet class: %r' % target
    return target.expansion_distance(r, alpha)


class ConvexBody:
    """
    The polytope K of payoff matrices, given by its vertices. Only the
    known-game components and the analysis side may look at it.
    """

    def __init__(self, vertices):
        matrices = [payoff_array(PayoffMatrix(v)) for v in vertices]
        if len(matrices) == 0:
            raise InvalidParameterError('convex body needs at least one vertex')
        shape = matrices[0].shape
        for matrix in matrices:
            if matrix.shape != shape:
                raise DimensionError('vertices of shape %r and %r' % (shape, matrix.shape))
        self._vertices = np.array(matrices)
        self._vertices.setflags(write=False)

    @property
    def vertices(self):
        return self._vertices

    @property
    def count(self):
        return self._vertices.shape[0]

    @property
    def d(self):
        return self._vertices.shape[1]

    @property
    def number_of_actions(self):
        return self._vertices.shape[2]

    def vertex(self, j):
        return PayoffMatrix(self._vertices[j])

    def contains(self, m, tolerance=CONTAINMENT_TOLERANCE):
        m = payoff_array(m)
        if m.shape != self._vertices.shape[1:]:
            return False
        points = self._vertices.reshape(self.count, -1)
        scale = 1.0 + float(np.max(np.abs(points)))
        if self.count == 1:
            return float(np.max(np.abs(points[0] - m.ravel()))) <= tolerance * scale
        hull = Witness(points.T, [(0.0, None)] * self.count, np.ones((1, self.count)), np.ones(1))
        return linear_distance(m.ravel(), hull, NORM_INFINITY) <= tolerance * scale


class ParameterizedBody:
    """
    Affine family m(theta) = origin + sum_i theta_i directions_i with theta in
    the box [lower, upper]. Holds the one and two parameter sets of the
    worked examples (and single points, for which there is no parameter).
    """

    def __init__(self, origin, directions, lower, upper):
        self._origin = payoff_array(PayoffMatrix(origin)).copy()
        directions = np.array(directions, dtype=float)
        if directions.size == 0:
            directions = np.zeros((0,) + self._origin.shape)
        if directions.ndim != 3 or directions.shape[1:] != self._origin.shape:
            raise DimensionError('directions must have shape (k, %d, %d)' % self._origin.shape)
        self._directions = directions
        self._lower = np.array(lower, dtype=float).ravel()
        self._upper = np.array(upper, dtype=float).ravel()
        k = directions.shape[0]
        if self._lower.size != k or self._upper.size != k:
            raise DimensionError('box bounds must have length %d' % k)
        if np.any(self._lower > self._upper):
            raise InvalidParameterError('empty parameter box')
        self._grids = {}

    #--------------------------------------------------------------------------#
    #                     P U B L I C  F U N C T I O N S                       #
    #--------------------------------------------------------------------------#

    @property
    def dimension(self):
        return self._directions.shape[0]

    @property
    def d(self):
        return self._origin.shape[0]

    @property
    def number_of_actions(self):
        return self._origin.shape[1]

    @property
    def lower(self):
        return self._lower.copy()

    @property
    def upper(self):
        return self._upper.copy()

    def matrix(self, theta):
        theta = np.asarray(theta, dtype=float).ravel()
        return PayoffMatrix(self._origin + np.tensordot(theta, self._directions, axes=1))

    def matrices(self, thetas):
        thetas = np.asarray(thetas, dtype=float)
        if self.dimension == 0:
            count = thetas.shape[0] if thetas.ndim == 2 else 1
            return np.repeat(self._origin[None, :, :], count, axis=0)
        thetas = thetas.reshape(-1, self.dimension)
        return self._origin[None, :, :] + np.tensordot(thetas, self._directions, axes=1)

    def parameters_of(self, m):
        """
        Least squares parameters of ``m``, clipped to the box.
        """
        if self.dimension == 0:
            return np.zeros(0)
        offset = (payoff_array(m) - self._origin).ravel()
        basis = self._directions.reshape(self.dimension, -1).T
        theta = np.linalg.lstsq(basis, offset, rcond=None)[0]
        return np.clip(theta, self._lower, self._upper)

    def contains(self, m, tolerance=CONTAINMENT_TOLERANCE):
        m = payoff_array(m)
        if m.shape != self._origin.shape:
            return False
        residual = m - payoff_array(self.matrix(self.parameters_of(m)))
        scale = 1.0 + float(np.max(np.abs(m)))
        return float(np.max(np.abs(residual))) <= tolerance * scale

    def grid(self, resolution=None):
        """
        Function will return the tuple (thetas, matrices) of a regular grid
        over the parameter box, ``resolution`` points per axis.
        """
        k = self.dimension
        if resolution is None:
            resolution = ONE_DIMENSIONAL_GRID_SIZE if k == 1 else TWO_DIMENSIONAL_GRID_SIZE
        if k > 2:
            raise OracleError('grids are available for at most two parameters, got %d' % k)
        if resolution < 2 and k > 0:
            raise OracleError('a grid needs at least 2 points per axis, got %r' % resolution)
        if resolution not in self._grids:
            if k == 0:
                thetas = np.zeros((1, 0))
            elif k == 1:
                thetas = np.linspace(self._lower[0], self._upper[0], resolution)[:, None]
            else:
                axes = [np.linspace(self._lower[i], self._upper[i], resolution) for i in range(2)]
                first, second = np.meshgrid(axes[0], axes[1], indexing='ij')
                thetas = np.column_stack((first.ravel(), second.ravel()))
            self._grids[resolution] = (thetas, self.matrices(thetas))
        return self._grids[resolution]

    def vertices(self):
        corners = itertools.product(*zip(self._lower, self._upper))
        return ConvexBody([payoff_array(self.matrix(corner)) for corner in corners])


def example_one_body():
    """
    Segment between m_sharp (nu = 0) and m_dagger (nu = 1).
    """
    dagger = np.array(M_DAGGER)
    sharp = np.array(M_SHARP)
    return ParameterizedBody(sharp, [dagger - sharp], [0.0], [1.0])


def example_two_body():
    """
    The square of matrices [[v, w]] with (v, w) in [-1, 1]^2.
    """
    return ParameterizedBody(np.zeros((1, 2)), [[[1.0, 0.0]], [[0.0, 1.0]]], [-1.0, -1.0], [1.0, 1.0])


def example_two_quadrant_body():
    """
    The quadrant v in [0, 1], w in [-1, 0] of the square, on which the
    origin is reached by the zero-achieving response.
    """
    return ParameterizedBody(np.zeros((1, 2)), [[[1.0, 0.0]], [[0.0, 1.0]]], [0.0, -1.0], [1.0, 0.0])


def segment_body(start, end):
    start = payoff_array(PayoffMatrix(start))
    end = payoff_array(PayoffMatrix(end))
    return ParameterizedBody(start, [end - start], [0.0], [1.0])


def point_body(m):
    return ParameterizedBody(m, [], [], [])


def body_norm_bound(body):
    """
    K_max = max(max ||m||, max ||m - m'||) over the vertices of the body.
    """
    if isinstance(body, ParameterizedBody):
        body = body.vertices()
    assert isinstance(body, ConvexBody), 'body is not a ConvexBody class: %r' % body
    points = body.vertices.reshape(body.count, -1)
    largest = float(np.max(np.linalg.norm(points, axis=1)))
    differences = points[:, None, :] - points[None, :, :]
    diameter = float(np.max(np.linalg.norm(differences, axis=2)))
    return max(largest, diameter)
