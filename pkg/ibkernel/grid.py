# -*- coding: utf-8 -*-
"""
grid.py - Periodic Eulerian grid, tensor-product delta, spreading and
interpolation.

Grid points are x = h * (i, j, k) with 0 <= i < n1, 0 <= j < n2, 0 <= k < n3.
Field values are stored in axis-major order: the flat offset of (i, j, k) is
(i * n2 + j) * n3 + k. Marker coordinates are physical lengths, interpreted
periodically.
"""
import logging
import math
from collections import namedtuple

import numpy as np

from ibkernel.core import KERNEL_SPECS, KernelId, weights_array
from ibkernel.exceptions import (GridConfigurationError,
                                 GridMismatch,
                                 KernelDomainError,
                                 LengthMismatch)

logger = logging.getLogger(__name__)


class PeriodicGrid3(namedtuple('PeriodicGrid3', ['dims', 'meshwidth'])):
    """
    Uniform periodic 3D grid with dimensions (n1, n2, n3) and meshwidth h.
    """
    __slots__ = ()

    def __new__(cls, dims, meshwidth=1.0):
        try:
            dims = tuple(int(n) for n in dims)
        except (TypeError, ValueError):
            raise GridConfigurationError(dims)
        meshwidth = float(meshwidth)
        if len(dims) != 3 or min(dims) < 1 or \
                not (math.isfinite(meshwidth) and meshwidth > 0):
            raise GridConfigurationError(dims)
        return super(PeriodicGrid3, cls).__new__(cls, dims, meshwidth)

    def __str__(self):
        return "%dx%dx%d (h=%g)" % (self.dims + (self.meshwidth, ))

    @property
    def size(self):
        return self.dims[0] * self.dims[1] * self.dims[2]

    def check_kernel(self, kernel):
        """
        Ensure the stencil of a kernel fits in the grid without overlapping
        itself through periodicity.

        :param kernel: `KernelId` or kernel name.
        :raises GridConfigurationError: A dimension is below 2 * ceil(r_s).
        """
        spec = KERNEL_SPECS[KernelId.from_name(kernel)]
        if min(self.dims) < 2 * int(math.ceil(spec.support_radius)):
            raise GridConfigurationError(self.dims, spec.stencil_width)

    def flat_index(self, i, j, k):
        """
        Axis-major offset of the grid point (i, j, k), indices taken modulo
        the dimensions.

        >>> PeriodicGrid3((8, 8, 8)).flat_index(1, 2, -1)
        87
        """
        n1, n2, n3 = self.dims
        return ((i % n1) * n2 + (j % n2)) * n3 + (k % n3)


class ScalarField3(object):
    """
    Scalar values on the points of a `PeriodicGrid3`, in axis-major order.
    """

    def __init__(self, grid, values=None):
        """
        :param grid: The `PeriodicGrid3`.
        :param values: Flat sequence of grid.size reals, zeros when None.
        :raises LengthMismatch: Wrong number of values.
        """
        self.grid = grid
        if values is None:
            values = np.zeros(grid.size)
        self.values = np.ascontiguousarray(values, dtype=np.float64).ravel()
        if self.values.shape[0] != grid.size:
            raise LengthMismatch(grid.size, self.values.shape[0])

    def __repr__(self):
        return "<ScalarField3: %s>" % (self.grid, )

    def as_array(self):
        """
        View of the values with shape dims.
        """
        return self.values.reshape(self.grid.dims)

    def total(self):
        """
        Integral of the field, sum of the values times h**3.
        """
        return float(np.sum(self.values)) * self.grid.meshwidth ** 3


class MarkerSet(object):
    """
    Lagrangian marker positions, array of shape (N, 3).
    """

    def __init__(self, positions):
        positions = np.asarray(positions, dtype=np.float64)
        if positions.size == 0:
            positions = positions.reshape(0, 3)
        if positions.ndim != 2 or positions.shape[1] != 3:
            raise KernelDomainError('positions', positions.shape)
        if not np.isfinite(positions).all():
            raise KernelDomainError('positions', 'non-finite coordinate')
        self.positions = positions

    def __len__(self):
        return self.positions.shape[0]

    def __repr__(self):
        return "<MarkerSet: %d markers>" % len(self)


def _axis_stencils(kernel, grid, coords, axis):
    """
    Wrapped grid indices and 1D weights along one axis.

    :return: Tuple (indices, weights), both of shape (N, stencil_width).
    """
    start, w = weights_array(kernel, coords / grid.meshwidth)
    offsets = start[:, None] + np.arange(w.shape[1], dtype=np.int64)
    return np.mod(offsets, grid.dims[axis]), w


def _marker_stencils(kernel, grid, positions):
    """
    Flat grid offsets and tensor-product weights (without the 1/h**3
    factor) of the stencils of all markers.

    :return: Tuple (flat, weights), both of shape (N, W, W, W).
    """
    (i, wi), (j, wj), (k, wk) = [_axis_stencils(kernel, grid,
                                                positions[:, axis], axis)
                                 for axis in range(3)]
    _, n2, n3 = grid.dims
    flat = ((i[:, :, None, None] * n2 + j[:, None, :, None]) * n3
            + k[:, None, None, :])
    weights = (wi[:, :, None, None] * wj[:, None, :, None]
               * wk[:, None, None, :])
    return flat, weights


def delta3(kernel, grid, x):
    """
    Stencil of the discrete delta function of a kernel at a point.

    delta_h(x - g) = phi((x1 - g1)/h) phi((x2 - g2)/h) phi((x3 - g3)/h) / h**3

    :param kernel: `KernelId` or kernel name.
    :param grid: The `PeriodicGrid3`.
    :param x: Point, three finite reals.
    :return: List of ((i, j, k), value) over the stencil_width**3 nearest
             grid points, indices wrapped into the grid.
    :raises GridConfigurationError: Grid too small for the stencil.

    >>> stencil = delta3('std4', PeriodicGrid3((8, 8, 8)), (0.0, 0.0, 0.0))
    >>> len(stencil)
    64
    >>> round(sum(value for _, value in stencil), 12)
    1.0
    """
    kernel = KernelId.from_name(kernel)
    grid.check_kernel(kernel)
    point = MarkerSet([x]).positions
    axes = [_axis_stencils(kernel, grid, point[:, axis], axis)
            for axis in range(3)]
    scale = grid.meshwidth ** -3
    stencil = []
    for a, wa in zip(axes[0][0][0], axes[0][1][0]):
        for b, wb in zip(axes[1][0][0], axes[1][1][0]):
            for c, wc in zip(axes[2][0][0], axes[2][1][0]):
                stencil.append(((int(a), int(b), int(c)),
                                float(wa * wb * wc * scale)))
    return stencil


def spread(kernel, grid, markers, values):
    """
    Spread marker values onto the grid.

    field(x) = sum over markers m of values[m] * delta_h(x - X_m)

    Contributions are accumulated in marker order.

    :param kernel: `KernelId` or kernel name.
    :param grid: The `PeriodicGrid3`.
    :param markers: The `MarkerSet`.
    :param values: One real per marker.
    :return: The `ScalarField3`.
    :raises LengthMismatch: values and markers differ in length.
    """
    kernel = KernelId.from_name(kernel)
    grid.check_kernel(kernel)
    values = np.asarray(values, dtype=np.float64).ravel()
    if values.shape[0] != len(markers):
        raise LengthMismatch(len(markers), values.shape[0])
    if len(markers) == 0:
        return ScalarField3(grid)
    flat, weights = _marker_stencils(kernel, grid, markers.positions)
    contributions = values[:, None, None, None] * weights
    field = np.bincount(flat.ravel(), weights=contributions.ravel(),
                        minlength=grid.size)
    return ScalarField3(grid, field * grid.meshwidth ** -3)


def interpolate(kernel, grid, field, markers):
    """
    Interpolate a field at marker positions.

    value[m] = sum over grid points x of field(x) * delta_h(x - X_m) * h**3

    :param kernel: `KernelId` or kernel name.
    :param grid: The `PeriodicGrid3`.
    :param field: The `ScalarField3`, on grid.
    :param markers: The `MarkerSet`.
    :return: Array of one real per marker.
    :raises GridMismatch: field lives on another grid.
    """
    kernel = KernelId.from_name(kernel)
    if field.grid != grid:
        raise GridMismatch()
    grid.check_kernel(kernel)
    if len(markers) == 0:
        return np.zeros(0)
    flat, weights = _marker_stencils(kernel, grid, markers.positions)
    return np.sum(field.values[flat] * weights, axis=(1, 2, 3))


def _folded_weights(kernel, grid, coords, axis):
    """
    1D stencils folded onto the periodic axis, shape (N, n).
    """
    n = grid.dims[axis]
    idx, w = _axis_stencils(kernel, grid, coords, axis)
    rows = np.arange(idx.shape[0], dtype=np.int64)[:, None]
    folded = np.bincount((rows * n + idx).ravel(), weights=w.ravel(),
                         minlength=idx.shape[0] * n)
    return folded.reshape(idx.shape[0], n)


def pair_couplings(kernel, grid, first, second):
    """
    Grid coupling of many pairs of points.

    The sum over the grid of delta_h(x - X1) delta_h(x - X2) factorizes into
    the product over the axes of 1D periodic couplings.

    :param kernel: `KernelId` or kernel name.
    :param grid: The `PeriodicGrid3`.
    :param first: Array of shape (N, 3), points X1.
    :param second: Array of shape (N, 3), points X2.
    :return: Array of N couplings.
    """
    kernel = KernelId.from_name(kernel)
    grid.check_kernel(kernel)
    first = MarkerSet(first).positions
    second = MarkerSet(second).positions
    if first.shape != second.shape:
        raise LengthMismatch(first.shape[0], second.shape[0])
    coupling = np.ones(first.shape[0])
    for axis in range(3):
        a = _folded_weights(kernel, grid, first[:, axis], axis)
        b = _folded_weights(kernel, grid, second[:, axis], axis)
        coupling = coupling * np.sum(a * b, axis=1)
    return coupling * grid.meshwidth ** -6


def pair_coupling(kernel, grid, first, second):
    """
    Grid coupling of two points, sum over x of delta_h(x - X1) delta_h(x - X2).

    :param kernel: `KernelId` or kernel name.
    :param grid: The `PeriodicGrid3`.
    :param first: Point X1, three finite reals.
    :param second: Point X2, three finite reals.
    :return: The coupling; C**3 / h**6 when X1 = X2.

    >>> grid = PeriodicGrid3((8, 8, 8))
    >>> round(pair_coupling('std4', grid, (1.2, 3.4, 5.6), (1.2, 3.4, 5.6)), 12)
    0.052734375
    """
    return float(pair_couplings(kernel, grid, [first], [second])[0])
