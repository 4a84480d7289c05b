# -*- coding: utf-8 -*-
"""
sixpoint.py - Branch formulas of the six-point kernel family.

On the unit interval 0 <= r <= 1 a six-point kernel is described by the six
values phi(r-3), phi(r-2), phi(r-1), phi(r), phi(r+1), phi(r+2). The even-odd,
first, second (= K) and third moment conditions express the last five of
them linearly in phi(r-3); the sum-of-squares condition then makes phi(r-3) a
root of the quadratic

    alpha * w**2 + beta(r) * w + gamma(r) = 0,   alpha = 28.

The standard six-point kernel is the member K = 0 of this family. The member
K = 59/60 - sqrt(29)/20 is the only one with three continuous derivatives.
"""
import logging
import math

import numpy as np
from numpy.polynomial import Polynomial

from ibkernel.exceptions import InternalInconsistency, KernelDomainError
from ibkernel.memoize import MethodAttributeMemoizer

logger = logging.getLogger(__name__)

ALPHA = 28.0

# Coefficient of phi(r-3) in each of the six branch weights
ROOT_COEFFICIENTS = (1.0, -3.0, 2.0, 2.0, -3.0, 1.0)

# Roundoff can push an analytically vanishing discriminant slightly negative
DISCRIMINANT_TOLERANCE = 1e-12

# Below this, the square root is not differentiated directly
DOUBLE_ROOT_THRESHOLD = 1e-10
ONE_SIDED_STEP = 1e-6


def _sqrt_derivative(d, order):
    """
    Derivative of sqrt(D(r)) from the derivatives of D.

    :param d: Sequence (D, D', D'', D''') evaluated at one point, D > 0.
    :param order: Derivative order, 1 to 3.
    :return: The derivative of the square root.
    """
    s = math.sqrt(d[0])
    if order == 1:
        return d[1] / (2.0 * s)
    if order == 2:
        return d[2] / (2.0 * s) - d[1] ** 2 / (4.0 * s ** 3)
    return (d[3] / (2.0 * s)
            - 3.0 * d[1] * d[2] / (4.0 * s ** 3)
            + 3.0 * d[1] ** 3 / (8.0 * s ** 5))


class SixPointFamily(object):
    """
    A member of the six-point kernel family, selected by its constant
    second moment K.
    """

    def __init__(self, second_moment):
        """
        :param float second_moment: The constant K of the second moment
                                    condition.
        """
        self.second_moment = float(second_moment)
        # Sign in front of the square root selecting phi(-3) = 0 at r = 0
        self.root_sign = 1.0 if self.second_moment < 1.5 else -1.0

    def __repr__(self):
        return "<SixPointFamily: K=%r>" % self.second_moment

    @MethodAttributeMemoizer('second_moment')
    def polynomials(self):
        """
        Build the branch polynomials for this K.

        :return: Tuple (beta, gamma, discriminant, parts) of
                 `numpy.polynomial.Polynomial`; parts[i] is the part of the
                 i-th branch weight which does not depend on phi(r-3).
        """
        k = self.second_moment
        r = Polynomial([0.0, 1.0])
        beta = (9.0 / 4.0 - 1.5 * (k + r ** 2) + (22.0 / 3.0 - 7.0 * k) * r
                - 7.0 / 3.0 * r ** 3)
        gamma = (-11.0 / 32.0 * r ** 2
                 + 3.0 / 32.0 * (2.0 * k + r ** 2) * r ** 2
                 + 1.0 / 72.0 * ((3.0 * k - 1.0) * r + r ** 3) ** 2
                 + 1.0 / 18.0 * ((4.0 - 3.0 * k) * r - r ** 3) ** 2)
        discriminant = beta ** 2 - 4.0 * ALPHA * gamma

        quadratic = (k + r ** 2) / 8.0
        odd_low = ((3.0 * k - 1.0) * r + r ** 3) / 12.0
        odd_high = ((4.0 - 3.0 * k) * r - r ** 3) / 6.0
        parts = (
            Polynomial([0.0]),
            -1.0 / 16.0 + quadratic + odd_low,
            1.0 / 4.0 + odd_high,
            5.0 / 8.0 - 2.0 * quadratic,
            1.0 / 4.0 - odd_high,
            -1.0 / 16.0 + quadratic - odd_low,
        )
        return beta, gamma, discriminant, parts

    def discriminant(self, r):
        """
        Evaluate the discriminant beta**2 - 4*alpha*gamma.

        Values within `DISCRIMINANT_TOLERANCE` below zero are clamped to 0.

        :param r: Real or array of reals in [0, 1].
        :return: The (clamped) discriminant.
        :raises InternalInconsistency: Discriminant significantly negative.
        """
        disc = np.asarray(self.polynomials()[2](r), dtype=np.float64)
        if (disc < -DISCRIMINANT_TOLERANCE).any():
            bad = np.argmin(disc)
            raise InternalInconsistency(np.ravel(r)[bad] if np.ndim(r) else r,
                                        float(np.ravel(disc)[bad]))
        return np.maximum(disc, 0.0)

    def root(self, r):
        """
        Evaluate phi(r-3), the selected root of the branch quadratic.

        The root is computed in the form that avoids cancellation between
        -beta and the square root.

        :param r: Real or array of reals in [0, 1].
        :return: phi(r-3).
        """
        beta = np.asarray(self.polynomials()[0](r), dtype=np.float64)
        gamma = np.asarray(self.polynomials()[1](r), dtype=np.float64)
        sqrt_disc = self.root_sign * np.sqrt(self.discriminant(r))
        cancelling = self.root_sign * beta > 0.0
        denominator = np.where(cancelling, beta + sqrt_disc, 1.0)
        stable = -2.0 * gamma / denominator
        direct = (sqrt_disc - beta) / (2.0 * ALPHA)
        return np.where(cancelling, stable, direct)

    def branch(self, r):
        """
        Evaluate the six branch weights.

        :param r: Real or array of reals in [0, 1].
        :return: Array of shape r.shape + (6,) holding
                 phi(r-3), phi(r-2), phi(r-1), phi(r), phi(r+1), phi(r+2).
        """
        root = self.root(r)
        parts = self.polynomials()[3]
        return np.stack([c * root + p(r)
                         for c, p in zip(ROOT_COEFFICIENTS, parts)], axis=-1)

    def root_derivative(self, r, order):
        """
        Analytic derivative of phi(r-3) with respect to r.

        Obtained by differentiating the root expression through the square
        root. Where the discriminant vanishes the derivative is the common
        value of its one-sided limits.

        :param float r: Point in [0, 1].
        :param int order: Derivative order, 1 to 3.
        :return: The derivative.
        """
        beta, _, discriminant, _ = self.polynomials()
        disc = float(self.discriminant(r))
        if disc < DOUBLE_ROOT_THRESHOLD:
            return self._one_sided_root_derivative(r, order)
        d = [disc] + [float(discriminant.deriv(m)(r)) for m in (1, 2, 3)]
        return ((-float(beta.deriv(order)(r))
                 + self.root_sign * _sqrt_derivative(d, order))
                / (2.0 * ALPHA))

    def _one_sided_root_derivative(self, r, order):
        limits = []
        for side in (-1.0, 1.0):
            shifted = r + side * ONE_SIDED_STEP
            if 0.0 <= shifted <= 1.0:
                limits.append(self.root_derivative(shifted, order))
        if len(limits) == 2:
            scale = max(1.0, abs(limits[0]), abs(limits[1]))
            if abs(limits[0] - limits[1]) > 1e-4 * scale:
                logger.error("One-sided derivatives of order %d disagree at "
                             "r=%r: %r != %r", order, r, limits[0], limits[1])
                raise InternalInconsistency(r, float(self.discriminant(r)))
        return sum(limits) / len(limits)

    def weight_derivative(self, r, index, order):
        """
        Analytic derivative of one branch weight.

        :param float r: Point in [0, 1].
        :param int index: Weight index, 0 (phi(r-3)) to 5 (phi(r+2)).
        :param int order: Derivative order, 1 to 3.
        :return: The derivative of the weight with respect to r.
        """
        if not 0.0 <= r <= 1.0:
            raise KernelDomainError('r', r)
        part = self.polynomials()[3][index]
        return (ROOT_COEFFICIENTS[index] * self.root_derivative(r, order)
                + float(part.deriv(order)(r)))

    def sum_of_squares_constant(self):
        """
        The sum-of-squares constant C implied by K.

        At r = 0 the selected root is phi(-3) = 0, so C is the sum of the
        squared constant parts of the five remaining weights.

        :return: C.
        """
        parts = self.polynomials()[3]
        return float(sum(p(0.0) ** 2 for p in parts))

    def edge_second_derivative(self):
        """
        phi''(-3) taken from inside the support.

        It vanishes only for the special K of the three-times continuously
        differentiable kernel.

        :return: The one-sided second derivative at the support edge.
        """
        return self.root_derivative(0.0, 2)
