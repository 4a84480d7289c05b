# -*- coding: utf-8 -*-
"""
positivity.py - Sign of the kernel values and second derivative at the
support edge.
"""
import logging

import numpy as np

from ibkernel.audit.moments import stencil_arrays
from ibkernel.audit.report import NON_NEGATIVITY, SPECIAL_K, condition_result
from ibkernel.core import SIX_POINT_FAMILIES

logger = logging.getLogger(__name__)

NON_NEGATIVITY_TOLERANCE = 1e-14
SPECIAL_K_TOLERANCE = 1e-10


def min_value(kernel, points):
    """
    Smallest kernel value over the stencils of the given points.

    The stencils of points sweeping [0, 1) cover the whole support.
    """
    _, _, w = stencil_arrays(kernel, points)
    return float(np.min(w))


def check_non_negativity(kernel, options):
    """
    Check the sign of the kernel values.

    :param kernel: The audited `KernelId`.
    :param options: Dictionary of audit options, uses 'points'.
    :return: Tuple (success, result dict), the result holds 'min_value'.
    """
    logger.info("Testing non-negativity")
    lowest = min_value(kernel, options['points'])
    condition = condition_result(kernel, NON_NEGATIVITY,
                                 lowest >= -NON_NEGATIVITY_TOLERANCE,
                                 max(0.0, -lowest), lowest)
    return condition.matches, {
        'description': 'Testing non-negativity',
        'conditions': [condition],
        'min_value': lowest,
    }


def check_special_k(kernel, options):
    """
    Check whether phi''(-3) vanishes, which singles out the three times
    continuously differentiable member of the six-point family.

    Kernels outside the six-point family are not concerned.

    :param kernel: The audited `KernelId`.
    :param options: Dictionary of audit options - unused.
    :return: Tuple (success, result dict).
    """
    result = {
        'description': 'Testing edge second derivative',
        'conditions': [],
    }
    family = SIX_POINT_FAMILIES.get(kernel)
    if family is None:
        return True, result
    logger.info("Testing edge second derivative")
    edge = family.edge_second_derivative()
    condition = condition_result(kernel, SPECIAL_K,
                                 abs(edge) < SPECIAL_K_TOLERANCE,
                                 abs(edge), edge)
    result['conditions'].append(condition)
    return condition.matches, result
