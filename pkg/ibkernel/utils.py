# -*- coding: utf-8 -*-
"""
utils.py - Set of utility functions to be used in module.
"""
import logging
import math

import numpy as np

logger = logging.getLogger(__name__)

# Round-trippable decimal representation of an IEEE double
SIGNIFICANT_DIGITS = 17

# Fractional part of the golden ratio, generator of the sampling sweep
GOLDEN_FRACTION = (math.sqrt(5.0) - 1.0) / 2.0

# Largest double below 1, right side of the [0, 1) branch seam
BELOW_ONE = float(np.nextafter(1.0, 0.0))


def format_real(value):
    """
    Format a real number with 17 significant digits.

    Negative zero is written as zero so that outputs are byte-stable.

    :param value: The number to format.
    :returns: Decimal representation as a string.

    >>> format_real(0.5)
    '0.5'
    >>> format_real(1.0 / 3.0)
    '0.33333333333333331'
    >>> format_real(-0.0)
    '0'
    >>> format_real(float('nan'))
    'nan'
    """
    value = float(value)
    if value == 0.0:
        value = 0.0
    return '%.*g' % (SIGNIFICANT_DIGITS, value)


def sample_points(count, seed=0):
    """
    Deterministic low-discrepancy sweep of [0, 1) plus the branch seams.

    The sweep is the additive golden-ratio recurrence shifted by an offset
    derived from `seed`; the exact seam points 0 and 1 - ulp are appended.

    :param count: Number of points of the sweep.
    :param seed: Integer selecting the sweep offset.
    :returns: Array of `count + 2` reals in [0, 1).

    >>> points = sample_points(5)
    >>> len(points)
    7
    >>> bool(((points >= 0) & (points < 1)).all())
    True
    >>> float(points[-2]), float(points[-1]) == BELOW_ONE
    (0.0, True)
    >>> bool((sample_points(5, seed=3) == sample_points(5, seed=3)).all())
    True
    """
    if count < 1:
        raise ValueError("count must be positive")
    offset = math.modf(seed * GOLDEN_FRACTION * GOLDEN_FRACTION)[0]
    k = np.arange(count, dtype=np.float64)
    sweep = np.mod(offset + k * GOLDEN_FRACTION, 1.0)
    # np.mod can round up to exactly 1.0
    sweep[sweep >= 1.0] = 0.0
    return np.concatenate([sweep, [0.0, BELOW_ONE]])


def arange_inclusive(start, stop, step):
    """
    Points start, start + step, ... up to stop (included when reached).

    Points are computed as `start + i * step` so that rounding does not
    accumulate.

    :param start: First point.
    :param stop: Last admissible point.
    :param step: Positive increment.
    :returns: Array of points.

    >>> len(arange_inclusive(-3.0, 3.0, 0.01))
    601
    >>> [float(x) for x in arange_inclusive(0.0, 1.0, 0.5)]
    [0.0, 0.5, 1.0]
    """
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    points = start + step * np.arange(count, dtype=np.float64)
    return np.minimum(points, stop)


def minimum_image(delta, period):
    """
    Map displacements to their periodic minimum image in [-period/2, period/2).

    :param delta: Array of displacements.
    :param period: Period of the domain.
    :returns: Array of wrapped displacements.

    >>> [float(x) for x in minimum_image(np.array([31.0, -17.0, 2.5]), 32.0)]
    [-1.0, 15.0, 2.5]
    """
    return delta - period * np.floor(delta / period + 0.5)


if __name__ == "__main__":
    import doctest

    logger.addHandler(logging.NullHandler())
    doctest.testmod()
