# -*- coding: utf-8 -*-
"""
sum_of_squares.py - Sum-of-squares condition and one-dimensional coupling.
"""
import logging

import numpy as np

from ibkernel.audit.moments import stencil_arrays
from ibkernel.audit.report import COUPLING_BOUND, evaluate_condition
from ibkernel.core import KERNEL_SPECS, SUM_OF_SQUARES, KernelId

logger = logging.getLogger(__name__)

# Random stream of the coupling check, see `check_coupling_bound`
COUPLING_STREAM = 1


def sum_of_squares(kernel, r):
    """
    Sum of the squared weights of a kernel.

    :param kernel: `KernelId` or kernel name.
    :param float r: Real.
    :return: Sum over j of phi(r - j)**2.

    >>> round(sum_of_squares('std4', 0.3), 12)
    0.375
    """
    _, _, w = stencil_arrays(KernelId.from_name(kernel), r)
    return float(np.sum(w[0] ** 2))


def coupling_array(kernel, r1, r2):
    """
    Vectorized coupling sum over j of phi(r1 - j) phi(r2 - j).

    The products are accumulated in increasing j, so that the result is
    exactly symmetric in (r1, r2).

    :param kernel: `KernelId`.
    :param r1: Array of reals, shape (N,).
    :param r2: Array of reals, shape (N,).
    :return: Array of couplings.
    """
    _, j1, w1 = stencil_arrays(kernel, r1)
    _, j2, w2 = stencil_arrays(kernel, r2)
    width = w1.shape[1]
    shift = j1[:, 0] - j2[:, 0]
    rows = np.arange(w1.shape[0])
    first = np.minimum(j1[:, 0], j2[:, 0])
    total = np.zeros(w1.shape[0])
    # Walk the union of both stencils from its leftmost index
    for step in range(2 * width):
        i1 = first + step - j1[:, 0]
        i2 = i1 + shift
        valid = (i1 >= 0) & (i1 < width) & (i2 >= 0) & (i2 < width)
        a = w1[rows, np.clip(i1, 0, width - 1)]
        b = w2[rows, np.clip(i2, 0, width - 1)]
        total = total + np.where(valid, a * b, 0.0)
    return total


def coupling_1d(kernel, r1, r2):
    """
    Coupling of a kernel between two points.

    By the Cauchy-Schwarz inequality its magnitude never exceeds C.

    :param kernel: `KernelId` or kernel name.
    :param float r1: Real.
    :param float r2: Real.
    :return: Sum over j of phi(r1 - j) phi(r2 - j).

    >>> coupling_1d('std4', 0.3, 0.3) == sum_of_squares('std4', 0.3)
    True
    >>> coupling_1d('new6', 0.2, 6.2)
    0.0
    """
    return float(coupling_array(KernelId.from_name(kernel), [r1], [r2])[0])


def check_sum_of_squares(kernel, options):
    """
    Check that the sum of squared weights is the constant C of the kernel.

    :param kernel: The audited `KernelId`.
    :param options: Dictionary of audit options, uses 'points' and
                    'tolerance'.
    :return: Tuple (success, result dict).
    """
    logger.info("Testing sum-of-squares condition")
    _, _, w = stencil_arrays(kernel, options['points'])
    condition = evaluate_condition(kernel, SUM_OF_SQUARES,
                                   np.sum(w ** 2, axis=1),
                                   KERNEL_SPECS[kernel].sum_of_squares,
                                   options['tolerance'])
    return condition.matches, {
        'description': 'Testing sum-of-squares condition',
        'conditions': [condition],
    }


def check_coupling_bound(kernel, options):
    """
    Check that couplings of random pairs are symmetric and bounded by C.

    The second point of each pair is drawn uniformly within twice the
    support radius of the first one.

    :param kernel: The audited `KernelId`.
    :param options: Dictionary of audit options, uses 'points', 'seed' and
                    'tolerance'.
    :return: Tuple (success, result dict).
    """
    logger.info("Testing coupling bound")
    spec = KERNEL_SPECS[kernel]
    rng = np.random.default_rng([options['seed'], COUPLING_STREAM])
    r1 = options['points']
    reach = 2.0 * spec.support_radius
    r2 = r1 + rng.uniform(-reach, reach, size=r1.shape)
    forward = coupling_array(kernel, r1, r2)
    backward = coupling_array(kernel, r2, r1)
    excess = np.maximum(np.abs(forward) - spec.sum_of_squares, 0.0)
    excess = np.maximum(excess, np.abs(forward - backward))
    condition = evaluate_condition(kernel, COUPLING_BOUND, excess, 0.0,
                                   options['tolerance'])
    return condition.matches, {
        'description': 'Testing coupling bound',
        'conditions': [condition],
    }
