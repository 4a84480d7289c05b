# -*- coding: utf-8 -*-
"""
moments.py - Moment and even-odd conditions.
"""
import logging

import numpy as np

from ibkernel.audit.report import evaluate_condition
from ibkernel.core import (EVEN_ODD,
                           KERNEL_SPECS,
                           KernelId,
                           MOMENT_0,
                           MOMENT_1,
                           MOMENT_2,
                           MOMENT_3,
                           weights_array)
from ibkernel.exceptions import KernelDomainError

logger = logging.getLogger(__name__)

MOMENT_NAMES = (MOMENT_0, MOMENT_1, MOMENT_2, MOMENT_3)


def stencil_arrays(kernel, r):
    """
    Grid indices and weights of the stencils around the points r.

    :param kernel: `KernelId`.
    :param r: Array of reals, shape (N,).
    :return: Tuple (r, j, w) of arrays; j and w have shape (N, width).
    """
    r = np.atleast_1d(np.asarray(r, dtype=np.float64))
    start, w = weights_array(kernel, r)
    j = start[:, None] + np.arange(w.shape[1], dtype=np.int64)
    return r, j, w


def moments_array(kernel, m, r):
    """
    Vectorized m-th moment, sum over j of (r - j)**m phi(r - j).
    """
    r, j, w = stencil_arrays(kernel, r)
    return np.sum((r[:, None] - j) ** m * w, axis=1)


def moment(kernel, m, r):
    """
    Compute a discrete moment of a kernel.

    :param kernel: `KernelId` or kernel name.
    :param int m: Moment order, 0 to 3.
    :param float r: Real.
    :return: Sum over j of (r - j)**m phi(r - j).
    :raises KernelDomainError: m outside 0..3.

    >>> abs(moment('std6', 2, 0.3)) < 1e-12
    True
    >>> round(moment('std4', 0, 0.1), 12)
    1.0
    """
    if m not in (0, 1, 2, 3):
        raise KernelDomainError('m', m)
    return float(moments_array(KernelId.from_name(kernel), m, r)[0])


def even_odd_array(kernel, r):
    """
    Vectorized sums of phi(r - j) over even and odd j.

    :return: Tuple of two arrays.
    """
    _, j, w = stencil_arrays(kernel, r)
    even = (j % 2) == 0
    return np.sum(np.where(even, w, 0.0), axis=1), \
        np.sum(np.where(even, 0.0, w), axis=1)


def even_odd_sums(kernel, r):
    """
    Split the weights of a kernel between even and odd grid points.

    :param kernel: `KernelId` or kernel name.
    :param float r: Real.
    :return: Tuple (sum over even j, sum over odd j).

    >>> [round(s, 12) for s in even_odd_sums('std4', 0.25)]
    [0.5, 0.5]
    """
    even, odd = even_odd_array(KernelId.from_name(kernel), r)
    return float(even[0]), float(odd[0])


def check_even_odd(kernel, options):
    """
    Check that even and odd grid points each carry half of the weight.

    :param kernel: The audited `KernelId`.
    :param options: Dictionary of audit options, uses 'points' and
                    'tolerance'.
    :return: Tuple (success, result dict).
    """
    logger.info("Testing even-odd condition")
    even, odd = even_odd_array(kernel, options['points'])
    condition = evaluate_condition(kernel, EVEN_ODD,
                                   np.concatenate([even, odd]), 0.5,
                                   options['tolerance'])
    return condition.matches, {
        'description': 'Testing even-odd condition',
        'conditions': [condition],
    }


def check_moments(kernel, options):
    """
    Check the moment conditions of order 0 to 3.

    Moments 0, 1 and 3 must be 1, 0 and 0; the second moment must equal the
    constant K of the kernel, or merely be constant when K is unknown.

    :param kernel: The audited `KernelId`.
    :param options: Dictionary of audit options, uses 'points' and
                    'tolerance'.
    :return: Tuple (success, result dict).
    """
    logger.info("Testing moment conditions")
    targets = (1.0, 0.0, KERNEL_SPECS[kernel].second_moment, 0.0)
    conditions = []
    for m, (name, target) in enumerate(zip(MOMENT_NAMES, targets)):
        values = moments_array(kernel, m, options['points'])
        conditions.append(evaluate_condition(kernel, name, values, target,
                                             options['tolerance']))
    return all(c.matches for c in conditions), {
        'description': 'Testing moment conditions',
        'conditions': conditions,
    }
