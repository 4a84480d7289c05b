# -*- coding: utf-8 -*-
"""
reproduction.py - Interpolation of cubic polynomials.

A kernel with unit zeroth moment, vanishing first and third moments and a
constant second moment K interpolates a cubic p with the error (K/2) p''(r).
It is exact for K = 0.
"""
import logging

import numpy as np
from numpy.polynomial import Polynomial

from ibkernel.audit.moments import stencil_arrays
from ibkernel.audit.report import CUBIC_DEFECT, CUBIC_EXACT, evaluate_condition
from ibkernel.core import KERNEL_SPECS, KernelId
from ibkernel.exceptions import KernelDomainError

logger = logging.getLogger(__name__)

# Random stream of the cubic coefficients
CUBIC_STREAM = 2
CUBIC_COUNT = 8
EXACT_TOLERANCE = 1e-11
DEFECT_TOLERANCE = 1e-10


def _cubic(coeffs):
    coeffs = tuple(float(c) for c in coeffs)
    if len(coeffs) != 4:
        raise KernelDomainError('coeffs', coeffs)
    return Polynomial(coeffs)


def reproduction_error_array(kernel, p, r):
    """
    Vectorized interpolation error of the polynomial p.
    """
    r, j, w = stencil_arrays(kernel, r)
    return np.sum(p(j.astype(np.float64)) * w, axis=1) - p(r)


def cubic_reproduction_error(kernel, coeffs, r):
    """
    Error of the kernel interpolation of a cubic.

    :param kernel: `KernelId` or kernel name.
    :param coeffs: Coefficients c0, c1, c2, c3 of p(x) = c0 + c1 x + ...
    :param float r: Real.
    :return: Sum over j of p(j) phi(r - j), minus p(r).

    >>> abs(cubic_reproduction_error('std6', (1, -2, 0.5, 3), 0.37)) < 1e-11
    True
    >>> round(cubic_reproduction_error('new6', (0, 0, 1, 0), 0.2), 10)
    0.714075093
    """
    kernel = KernelId.from_name(kernel)
    return float(reproduction_error_array(kernel, _cubic(coeffs), r)[0])


def _random_cubics(seed):
    rng = np.random.default_rng([seed, CUBIC_STREAM])
    return [Polynomial(c) for c in rng.uniform(-1.0, 1.0, (CUBIC_COUNT, 4))]


def check_cubic_reproduction(kernel, options):
    """
    Check the interpolation error of random cubics.

    Two conditions are reported: the error vanishes, and the error is
    (K/2) p''(r). For kernels without a constant second moment the latter is
    taken with K = 0.

    :param kernel: The audited `KernelId`.
    :param options: Dictionary of audit options, uses 'points' and 'seed'.
    :return: Tuple (success, result dict).
    """
    logger.info("Testing cubic reproduction")
    points = options['points']
    k = KERNEL_SPECS[kernel].second_moment or 0.0
    errors = []
    defects = []
    for p in _random_cubics(options['seed']):
        error = reproduction_error_array(kernel, p, points)
        errors.append(error)
        defects.append(error - 0.5 * k * p.deriv(2)(points))
    conditions = [
        evaluate_condition(kernel, CUBIC_EXACT, np.concatenate(errors), 0.0,
                           EXACT_TOLERANCE),
        evaluate_condition(kernel, CUBIC_DEFECT, np.concatenate(defects), 0.0,
                           DEFECT_TOLERANCE),
    ]
    return all(c.matches for c in conditions), {
        'description': 'Testing cubic reproduction',
        'conditions': conditions,
    }
