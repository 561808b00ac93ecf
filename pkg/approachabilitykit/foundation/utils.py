# -*- coding: utf-8 -*-
"""
Utility functions for the 'approachabilitykit' python library.
"""

import math
import numpy as np
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import InvalidParameterError


"""
Function will make the ``range`` function to be inclusive with the last item.

Special thanks: https://stackoverflow.com/a/4504677
"""
range_inclusive = lambda start, end: range(start, end+1)


def check_norm(p):
    """
    Function will convert the user supplied ``p`` into one of the supported
    norm exponents {1, 2, inf}.
    """
    if isinstance(p, str):
        text = p.strip().lower()
        if text in ('inf', 'infinity', 'max'):
            return NORM_INFINITY
        try:
            p = float(text)
        except ValueError:
            raise InvalidParameterError('unsupported norm: %r' % p)
    p = float(p)
    if p not in SUPPORTED_NORMS:
        raise InvalidParameterError('unsupported norm, expected one of 1, 2 or inf: %r' % p)
    return p


def dual_norm(p):
    p = check_norm(p)
    if p == NORM_ONE:
        return NORM_INFINITY
    if p == NORM_INFINITY:
        return NORM_ONE
    return NORM_TWO


def lp_norm(vector, p):
    return float(np.linalg.norm(np.asarray(vector, dtype=float).ravel(), ord=p))


def triangular(n):
    n = int(n)
    return n * (n + 1) // 2


def triangular_root(t):
    """
    Largest integer N with N(N+1)/2 <= t.
    """
    t = int(t)
    return (math.isqrt(8 * t + 1) - 1) // 2


def block_of_round(t):
    """
    Index n of the block holding round t, that is n(n-1)/2 < t <= n(n+1)/2.
    """
    if t < 1:
        raise InvalidParameterError('rounds are numbered from 1: %r' % t)
    return triangular_root(t - 1) + 1


def geometric_checkpoints(horizon, ratio=CHECKPOINT_RATIO):
    """
    Function will return the sorted grid {ceil(ratio^k)} restricted to
    [1, horizon]. The horizon itself is always the last checkpoint.
    """
    if horizon < 1:
        raise InvalidParameterError('horizon must be positive: %r' % horizon)
    if ratio <= 1.0:
        raise InvalidParameterError('checkpoint ratio must exceed 1: %r' % ratio)
    points = set()
    k = 0
    while True:
        value = int(math.ceil(ratio ** k))
        if value > horizon:
            break
        points.add(value)
        k += 1
    points.add(int(horizon))
    return sorted(points)


def every_round_checkpoints(horizon):
    return list(range_inclusive(1, int(horizon)))


def format_float(value):
    return CSV_FLOAT_FORMAT % value


def sphere_directions(dimension, count=SPHERE_DIRECTION_COUNT):
    """
    Deterministic sample of unit vectors in R^dimension.
    """
    if dimension == 1:
        return np.array([[1.0], [-1.0]])
    if dimension == 2:
        angles = np.linspace(0.0, 2.0 * math.pi, count, endpoint=False)
        return np.column_stack((np.cos(angles), np.sin(angles)))
    rng = np.random.Generator(np.random.PCG64(0))
    directions = rng.standard_normal((count, dimension))
    return directions / np.linalg.norm(directions, axis=1)[:, None]


def minimize_line_envelope(intercepts, slopes, lower=0.0, upper=1.0):
    """
    Function will minimize f(x) = max_j (intercepts[j] + slopes[j] * x) over
    the interval [lower, upper] exactly. The candidates are the interval
    ends and the pairwise intersections; among minimizers the largest x
    wins, which puts the mass on the lowest action index when x is the
    weight of the first action.

    Returns the tuple (x, f(x)).
    """
    a = np.asarray(intercepts, dtype=float).ravel()
    b = np.asarray(slopes, dtype=float).ravel()
    assert a.size == b.size, 'intercepts and slopes differ in length'
    if a.size == 0:
        raise InvalidParameterError('line envelope needs at least one line')
    if lower > upper:
        raise InvalidParameterError('empty interval [%r, %r]' % (lower, upper))

    # STEP 1: Collect the crossing points strictly inside the interval.
    crossings = []
    for i in range(a.size):
        for j in range(i + 1, a.size):
            if b[i] == b[j]:
                continue
            x = (a[j] - a[i]) / (b[i] - b[j])
            if lower < x < upper:
                crossings.append(x)
    candidates = [upper] + sorted(set(crossings), reverse=True) + [lower]

    # STEP 2: Evaluate and take the first candidate within tie tolerance.
    values = [float(np.max(a + b * x)) for x in candidates]
    best = min(values)
    scale = 1.0 + float(np.max(np.abs(a))) + float(np.max(np.abs(b)))
    for x, value in zip(candidates, values):
        if value <= best + LINE_ENVELOPE_TIE_TOLERANCE * scale:
            return float(x), value
    return float(candidates[-1]), values[-1]


def replace_all(text, dic):
    """
    https://stackoverflow.com/a/6117042
    """
    for i, j in dic.items():
        text = text.replace(i, j)
    return text
