# -*- coding: utf-8 -*-
"""
core.py - Definition of the immersed-boundary kernels and their evaluation.

Four kernels are supported: the standard 3-, 4- and 6-point kernels and the
new 6-point kernel with three continuous derivatives. Every operation is a
pure function of its arguments.
"""
import enum
import logging
import math
from collections import namedtuple
from fractions import Fraction

import numpy as np

from ibkernel.exceptions import (KernelDomainError,
                                 UnknownKernel,
                                 UnsupportedSmoothness)
from ibkernel.sixpoint import ALPHA, SixPointFamily

logger = logging.getLogger(__name__)


class KernelId(enum.Enum):
    """
    Identifier of a supported kernel.
    """
    STD3 = 'std3'
    STD4 = 'std4'
    STD6 = 'std6'
    NEW6 = 'new6'

    def __str__(self):
        return self.value

    @classmethod
    def from_name(cls, name):
        """
        Get a kernel identifier from its name.

        :param name: Kernel name (``std3``, ``std4``, ``std6``, ``new6``),
                     case insensitive, or a `KernelId`.
        :return: The `KernelId`.
        :raises UnknownKernel: Name is not a supported kernel.

        >>> KernelId.from_name('New6')
        <KernelId.NEW6: 'new6'>
        """
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise UnknownKernel(name)


ALL_KERNELS = (KernelId.STD3, KernelId.STD4, KernelId.STD6, KernelId.NEW6)

# Names of the postulates of a kernel, in table order
EVEN_ODD = 'even_odd'
MOMENT_0 = 'moment_0'
MOMENT_1 = 'moment_1'
MOMENT_2 = 'moment_2'
MOMENT_3 = 'moment_3'
SUM_OF_SQUARES = 'sum_of_squares'
CONDITIONS = (EVEN_ODD, MOMENT_0, MOMENT_1, MOMENT_2, MOMENT_3)


def _widest_float_k():
    """
    K = 59/60 - sqrt(29)/20 evaluated in extended precision, then rounded.
    """
    wide = (np.longdouble(59) / np.longdouble(60)
            - np.sqrt(np.longdouble(29)) / np.longdouble(20))
    return float(wide)


NEW6_K = _widest_float_k()

STD6_FAMILY = SixPointFamily(0.0)
NEW6_FAMILY = SixPointFamily(NEW6_K)
SIX_POINT_FAMILIES = {
    KernelId.STD6: STD6_FAMILY,
    KernelId.NEW6: NEW6_FAMILY,
}


class KernelSpec(namedtuple('KernelSpec', ['id',
                                           'support_radius',
                                           'stencil_width',
                                           'sum_of_squares',
                                           'second_moment',
                                           'satisfies',
                                           'knots',
                                           'smoothness',
                                           'non_negative'])):
    """
    Constants of a kernel.

    - `support_radius`: r_s, phi(r) = 0 for abs(r) >= r_s.
    - `stencil_width`: number of grid points a weight stencil covers.
    - `sum_of_squares`: the constant C of the sum-of-squares condition.
    - `second_moment`: the constant K, None when the second moment is not
      constant.
    - `satisfies`: frozenset of the condition names holding for the kernel.
    - `knots`: breakpoints between polynomial pieces.
    - `smoothness`: number of continuous derivatives.
    - `non_negative`: False when phi takes negative values (negative tails).
    """
    __slots__ = ()

    def __str__(self):
        return str(self.id)


KERNEL_SPECS = {
    KernelId.STD3: KernelSpec(
        id=KernelId.STD3,
        support_radius=1.5,
        stencil_width=3,
        sum_of_squares=float(Fraction(1, 2)),
        second_moment=None,
        satisfies=frozenset([MOMENT_0, MOMENT_1]),
        knots=(-1.5, -0.5, 0.5, 1.5),
        smoothness=1,
        non_negative=True),
    KernelId.STD4: KernelSpec(
        id=KernelId.STD4,
        support_radius=2.0,
        stencil_width=4,
        sum_of_squares=float(Fraction(3, 8)),
        second_moment=None,
        satisfies=frozenset([EVEN_ODD, MOMENT_0, MOMENT_1]),
        knots=(-2.0, -1.0, 0.0, 1.0, 2.0),
        smoothness=1,
        non_negative=True),
    KernelId.STD6: KernelSpec(
        id=KernelId.STD6,
        support_radius=3.0,
        stencil_width=6,
        sum_of_squares=float(Fraction(67, 128)),
        second_moment=0.0,
        satisfies=frozenset(CONDITIONS),
        knots=(-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0),
        smoothness=1,
        non_negative=False),
    KernelId.NEW6: KernelSpec(
        id=KernelId.NEW6,
        support_radius=3.0,
        stencil_width=6,
        sum_of_squares=NEW6_FAMILY.sum_of_squares_constant(),
        second_moment=NEW6_K,
        satisfies=frozenset(CONDITIONS),
        knots=(-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0),
        smoothness=3,
        non_negative=True),
}


def kernel_spec(kernel):
    """
    Get the constants of a kernel.

    :param kernel: `KernelId` or kernel name.
    :return: The `KernelSpec`.

    >>> kernel_spec('std4').sum_of_squares
    0.375
    >>> round(kernel_spec('new6').sum_of_squares, 6)
    0.325778
    """
    return KERNEL_SPECS[KernelId.from_name(kernel)]


class Branch6Weights(namedtuple('Branch6Weights',
                                ['r', 'alpha', 'beta', 'gamma', 'w'])):
    """
    Weights of the new 6-point kernel on the branch interval [0, 1].

    `w` holds phi(r-3), phi(r-2), phi(r-1), phi(r), phi(r+1), phi(r+2);
    phi(r-3) is the root of alpha*w**2 + beta*w + gamma = 0.
    """
    __slots__ = ()


class WeightStencil(namedtuple('WeightStencil',
                               ['kernel', 'base_offset', 'first_index',
                                'weights'])):
    """
    Weights phi(x - j) of a kernel around a point x.

    `first_index` is the leftmost grid index j_min, `base_offset` is
    j_min - floor(x); `weights[i]` is phi(x - (j_min + i)).
    """
    __slots__ = ()

    @property
    def indices(self):
        return range(self.first_index, self.first_index + len(self.weights))


def _check_finite(name, value):
    value = np.asarray(value, dtype=np.float64)
    if not np.isfinite(value).all():
        raise KernelDomainError(name, value.tolist())
    return value


def new6_branch(r):
    """
    Evaluate the new 6-point kernel branch formulas.

    :param float r: Branch parameter in [0, 1].
    :return: `Branch6Weights`.
    :raises KernelDomainError: r outside [0, 1].
    :raises InternalInconsistency: Negative discriminant.

    >>> b = new6_branch(0.0)
    >>> b.w[0], round(b.w[3], 10)
    (0.0, 0.4464812268)
    """
    r = float(_check_finite('r', r))
    if not 0.0 <= r <= 1.0:
        raise KernelDomainError('r', r)
    beta, gamma, _, _ = NEW6_FAMILY.polynomials()
    w = NEW6_FAMILY.branch(r)
    return Branch6Weights(r=r,
                          alpha=ALPHA,
                          beta=float(beta(r)),
                          gamma=float(gamma(r)),
                          w=tuple(float(v) for v in w))


def _std3_phi(t):
    inner = (1.0 + np.sqrt(np.maximum(1.0 - 3.0 * t ** 2, 0.0))) / 3.0
    outer = (5.0 - 3.0 * t
             - np.sqrt(np.maximum(1.0 - 3.0 * (1.0 - t) ** 2, 0.0))) / 6.0
    return np.where(t < 0.5, inner, np.where(t < 1.5, outer, 0.0))


def _std3_dphi(t):
    inner = -t / np.sqrt(np.maximum(1.0 - 3.0 * t ** 2, 1e-300))
    outer = (-0.5 - (1.0 - t)
             / (2.0 * np.sqrt(np.maximum(1.0 - 3.0 * (1.0 - t) ** 2, 1e-300))))
    return np.where(t < 0.5, inner, np.where(t < 1.5, outer, 0.0))


def _std4_phi(t):
    inner = (3.0 - 2.0 * t
             + np.sqrt(np.maximum(1.0 + 4.0 * t - 4.0 * t ** 2, 0.0))) / 8.0
    outer = (5.0 - 2.0 * t
             - np.sqrt(np.maximum(-7.0 + 12.0 * t - 4.0 * t ** 2, 0.0))) / 8.0
    return np.where(t < 1.0, inner, np.where(t < 2.0, outer, 0.0))


def _std4_dphi(t):
    inner = (-2.0 + (2.0 - 4.0 * t)
             / np.sqrt(np.maximum(1.0 + 4.0 * t - 4.0 * t ** 2, 1e-300))) / 8.0
    outer = (-2.0 - (6.0 - 4.0 * t)
             / np.sqrt(np.maximum(-7.0 + 12.0 * t - 4.0 * t ** 2, 1e-300))) / 8.0
    return np.where(t < 1.0, inner, np.where(t < 2.0, outer, 0.0))


def _six_point_phi(family, t):
    # 0 <= t < 3 is phi(rho + i - 3) with i = 3, 4, 5
    t = np.asarray(t, dtype=np.float64)
    inside = t < 3.0
    piece = np.where(inside, np.floor(t), 0.0)
    rho = np.where(inside, t - piece, 0.0)
    branch = family.branch(rho)
    index = (piece + 3).astype(np.intp)
    values = np.take_along_axis(branch, index[..., None], axis=-1)[..., 0]
    return np.where(inside, values, 0.0)


def phi_array(kernel, r):
    """
    Vectorized kernel evaluation.

    The kernel is evaluated at abs(r), so that evenness holds exactly.

    :param kernel: `KernelId` or kernel name.
    :param r: Array of finite reals.
    :return: Array of phi(r), same shape as r.
    :raises KernelDomainError: Non-finite input.
    """
    kernel = KernelId.from_name(kernel)
    t = np.abs(_check_finite('r', r))
    if kernel is KernelId.STD3:
        return _std3_phi(t)
    if kernel is KernelId.STD4:
        return _std4_phi(t)
    return _six_point_phi(SIX_POINT_FAMILIES[kernel], t)


def phi(kernel, r):
    """
    Evaluate a kernel.

    :param kernel: `KernelId` or kernel name.
    :param float r: Finite real.
    :return: phi(r), zero for abs(r) >= r_s.
    :raises KernelDomainError: Non-finite input.

    >>> phi('std4', 0.0)
    0.5
    >>> phi('new6', 3.0)
    0.0
    >>> round(phi('std3', 0.0), 15)
    0.666666666666667
    """
    return float(phi_array(kernel, float(_check_finite('r', r))))


def _stencil_start(kernel, x):
    """
    Leftmost grid index of the stencil around x (vectorized).
    """
    if kernel is KernelId.STD3:
        return np.floor(x + 0.5) - 1.0
    if kernel is KernelId.STD4:
        return np.floor(x) - 1.0
    return np.floor(x) - 2.0


def weights_array(kernel, x):
    """
    Vectorized weight stencils.

    Six-point kernels use the branch formulas: with rho = x - floor(x), the
    weights of j = floor(x) - 2 ... floor(x) + 3 are phi(rho + 2) ...
    phi(rho - 3). The other kernels are evaluated point by point.

    :param kernel: `KernelId` or kernel name.
    :param x: Array of finite reals, shape (N,).
    :return: Tuple (first_index, weights): int array of shape (N,) and array
             of shape (N, stencil_width).
    :raises KernelDomainError: Non-finite input.
    """
    kernel = KernelId.from_name(kernel)
    x = np.atleast_1d(_check_finite('x', x))
    start = _stencil_start(kernel, x)
    if kernel in SIX_POINT_FAMILIES:
        rho = x - np.floor(x)
        weights = SIX_POINT_FAMILIES[kernel].branch(rho)[..., ::-1]
    else:
        width = KERNEL_SPECS[kernel].stencil_width
        offsets = start[:, None] + np.arange(width, dtype=np.float64)
        weights = phi_array(kernel, x[:, None] - offsets)
    return start.astype(np.int64), np.ascontiguousarray(weights)


def weights(kernel, x):
    """
    Weight stencil of a kernel around a point.

    The stencil covers every integer j with abs(x - j) < r_s.

    :param kernel: `KernelId` or kernel name.
    :param float x: Finite real.
    :return: `WeightStencil`.
    :raises KernelDomainError: Non-finite input.

    >>> s = weights('std4', 0.5)
    >>> s.first_index, s.base_offset, len(s.weights)
    (-1, -1, 4)
    """
    kernel = KernelId.from_name(kernel)
    x = float(_check_finite('x', x))
    start, w = weights_array(kernel, [x])
    first = int(start[0])
    return WeightStencil(kernel=kernel,
                         base_offset=first - int(math.floor(x)),
                         first_index=first,
                         weights=tuple(float(v) for v in w[0]))


def phi_derivative(r, order=1, *, kernel=KernelId.NEW6):
    """
    Analytic derivative of a kernel.

    Orders 2 and 3 exist only for the new 6-point kernel; order 1 exists for
    all kernels.

    :param float r: Finite real.
    :param int order: Derivative order, 1 to 3.
    :param kernel: Keyword only, `KernelId` or kernel name, new 6-point by
                   default.
    :return: The derivative of phi at r.
    :raises KernelDomainError: Non-finite r or order outside {1, 2, 3}.
    :raises UnsupportedSmoothness: Order >= 2 for a C1 kernel.

    >>> phi_derivative(0.0, 1)
    0.0
    >>> phi_derivative(3.0, 2)
    0.0
    """
    kernel = KernelId.from_name(kernel)
    r = float(_check_finite('r', r))
    if order not in (1, 2, 3):
        raise KernelDomainError('order', order)
    if order > KERNEL_SPECS[kernel].smoothness:
        raise UnsupportedSmoothness(kernel, order)

    t = abs(r)
    # phi is even: odd derivatives are odd functions
    sign = -1.0 if (r < 0.0 and order % 2 == 1) else 1.0
    if t >= KERNEL_SPECS[kernel].support_radius or (t == 0.0 and order % 2):
        return 0.0
    if kernel is KernelId.STD3:
        return sign * float(_std3_dphi(t))
    if kernel is KernelId.STD4:
        return sign * float(_std4_dphi(t))
    piece = math.floor(t)
    index = piece + 3
    return sign * SIX_POINT_FAMILIES[kernel].weight_derivative(t - piece,
                                                               index, order)


def gaussian_match(r):
    """
    Gaussian whose variance is the second moment K of the new 6-point kernel.

    :param float r: Real.
    :return: exp(-r**2 / (2K)) / sqrt(2 pi K).

    >>> round(gaussian_match(0.0), 5)
    0.4721
    """
    k = NEW6_K
    return math.exp(-float(r) ** 2 / (2.0 * k)) / math.sqrt(2.0 * math.pi * k)
