# -*- coding: utf-8 -*-
"""
smoothness.py - Finite-difference probing of derivative jumps at knots.

A derivative is estimated on each side of a knot from a polynomial fit
through FD_NODES points lying in a single polynomial piece, then the two
estimates are compared.
"""
import functools
import logging

import numpy as np
from numpy.polynomial import Polynomial

from ibkernel.audit.report import SMOOTHNESS, condition_result
from ibkernel.core import KERNEL_SPECS, KernelId, phi_array
from ibkernel.exceptions import KernelDomainError

logger = logging.getLogger(__name__)

FD_NODES = 7
MAX_ORDER = 3

# Jumps below this, relative to the derivative scale, count as continuous
JUMP_THRESHOLD = 1e-6


@functools.lru_cache(maxsize=None)
def _one_sided_weights(order):
    """
    Weights of the order-th derivative at 0 of the polynomial through the
    nodes 0, 1, ..., FD_NODES - 1.
    """
    nodes = np.arange(FD_NODES, dtype=np.float64)
    weights = []
    for i, node in enumerate(nodes):
        others = np.delete(nodes, i)
        basis = Polynomial.fromroots(others) / np.prod(node - others)
        weights.append(basis.deriv(order)(0.0))
    return np.array(weights)


def one_sided_derivative(kernel, point, order, eps, side):
    """
    Estimate a derivative of a kernel from one side of a point.

    :param kernel: `KernelId` or kernel name.
    :param float point: Where to estimate the derivative.
    :param int order: Derivative order.
    :param float eps: Node spacing, positive.
    :param side: -1 for the left side, +1 for the right side.
    :return: The estimated derivative.
    """
    kernel = KernelId.from_name(kernel)
    if not eps > 0:
        raise KernelDomainError('eps', eps)
    step = side * eps
    values = phi_array(kernel, point + step * np.arange(FD_NODES))
    return float(np.dot(_one_sided_weights(order), values) / step ** order)


def smoothness_jump(kernel, knot, order, eps):
    """
    Estimate the jump of a derivative of a kernel at a knot.

    :param kernel: `KernelId` or kernel name.
    :param float knot: Breakpoint between polynomial pieces.
    :param int order: Derivative order, at least 1.
    :param float eps: Node spacing, positive; nodes stay within FD_NODES - 1
                      spacings of the knot.
    :return: abs(right estimate - left estimate).

    >>> smoothness_jump('std4', 1.0, 1, 0.05) < 1e-6
    True
    >>> round(smoothness_jump('std4', 1.0, 2, 0.00625), 3)
    2.0
    """
    if order < 1:
        raise KernelDomainError('order', order)
    left = one_sided_derivative(kernel, knot, order, eps, -1)
    right = one_sided_derivative(kernel, knot, order, eps, 1)
    return abs(right - left)


def _jump_and_scale(kernel, knot, order, eps):
    left = one_sided_derivative(kernel, knot, order, eps, -1)
    right = one_sided_derivative(kernel, knot, order, eps, 1)
    return abs(right - left), max(1.0, abs(left), abs(right))


def jump_sweep(kernel, knot, order, epsilons):
    """
    Jump estimates along a sweep of node spacings.

    :return: List of jumps, one per spacing.
    """
    return [smoothness_jump(kernel, knot, order, eps) for eps in epsilons]


def jump_limit(sweep, epsilons):
    """
    Estimate the jump left when the node spacing goes to 0.

    The last two estimates of the sweep are extrapolated linearly in the
    spacing. A jump estimate decaying at least like the spacing extrapolates
    to 0 or below, a genuine jump keeps its value. The result never exceeds
    the estimate at the smallest spacing.

    :param sweep: Jump estimates, one per spacing.
    :param epsilons: Decreasing node spacings.
    :return: The extrapolated jump, clipped to [0, sweep[-1]].

    >>> jump_limit([2.0, 2.0], (0.1, 0.05))
    2.0
    >>> jump_limit([6.4e-5, 1e-6], (0.0125, 0.00625))
    0.0
    >>> jump_limit([3e-7], (0.1, ))
    3e-07
    """
    last = sweep[-1]
    if len(sweep) < 2:
        return last
    coarse, fine = epsilons[-2], epsilons[-1]
    extrapolated = (coarse * last - fine * sweep[-2]) / (coarse - fine)
    return min(last, max(extrapolated, 0.0))


def smoothness_class(kernel, epsilons):
    """
    Measure the number of continuous derivatives of a kernel.

    The class is the largest order k (at most MAX_ORDER) such that, for
    every order up to k and every knot, the jump extrapolated to a vanishing
    spacing (see `jump_limit`) is below JUMP_THRESHOLD times the size of the
    derivative at the smallest spacing.

    :param kernel: `KernelId` or kernel name.
    :param epsilons: Decreasing node spacings.
    :return: Tuple (class, jumps) where jumps maps (knot, order) to the
             list of estimates along the sweep.
    """
    kernel = KernelId.from_name(kernel)
    smallest = min(epsilons)
    jumps = {}
    measured = MAX_ORDER
    for order in range(1, MAX_ORDER + 1):
        for knot in KERNEL_SPECS[kernel].knots:
            sweep = jump_sweep(kernel, knot, order, epsilons)
            jumps[(knot, order)] = sweep
            _, scale = _jump_and_scale(kernel, knot, order, smallest)
            jump = jump_limit(sweep, epsilons)
            if jump >= JUMP_THRESHOLD * scale and measured >= order:
                logger.debug("Kernel %s: derivative %d jumps by %g at %g",
                             kernel, order, jump, knot)
                measured = order - 1
    return measured, jumps


def check_smoothness(kernel, options):
    """
    Check that the measured smoothness class is the one of the kernel table.

    :param kernel: The audited `KernelId`.
    :param options: Dictionary of audit options, uses 'fd_epsilons'.
    :return: Tuple (success, result dict), the result holds the measured
             'smoothness_class' and the 'jumps'.
    """
    logger.info("Testing smoothness")
    epsilons = options['fd_epsilons']
    measured, jumps = smoothness_class(kernel, epsilons)
    expected = KERNEL_SPECS[kernel].smoothness
    worst = max(jump_limit(sweep, epsilons)
                for (_, order), sweep in jumps.items() if order <= expected)
    condition = condition_result(kernel, SMOOTHNESS, measured == expected,
                                 worst, float(measured))
    return condition.matches, {
        'description': 'Testing smoothness',
        'conditions': [condition],
        'smoothness_class': measured,
        'jumps': jumps,
    }
