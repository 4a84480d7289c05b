# -*- coding: utf-8 -*-
"""
test_grid.py - Unit testing of the periodic grid operators.
"""
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis.strategies import floats, sampled_from
from numpy.testing import assert_allclose

from ibkernel.core import ALL_KERNELS, KERNEL_SPECS, kernel_spec, phi
from ibkernel.exceptions import (GridConfigurationError,
                                 GridMismatch,
                                 KernelDomainError,
                                 LengthMismatch)
from ibkernel.grid import (MarkerSet,
                           PeriodicGrid3,
                           ScalarField3,
                           delta3,
                           interpolate,
                           pair_coupling,
                           pair_couplings,
                           spread)

coords = floats(min_value=-50.0, max_value=50.0)


class TestPeriodicGrid3(unittest.TestCase):

    def test_valid(self):
        grid = PeriodicGrid3([8, 6, 10], 0.5)
        self.assertEqual(grid.dims, (8, 6, 10))
        self.assertEqual(grid.size, 480)
        self.assertEqual(str(grid), "8x6x10 (h=0.5)")
        self.assertEqual(grid.flat_index(8, 6, 10), 0)

    def test_invalid(self):
        self.assertRaises(GridConfigurationError, PeriodicGrid3, (8, 8))
        self.assertRaises(GridConfigurationError, PeriodicGrid3, (8, 0, 8))
        self.assertRaises(GridConfigurationError, PeriodicGrid3, (8, 8, 8),
                          0.0)
        self.assertRaises(GridConfigurationError, PeriodicGrid3, (8, 8, 8),
                          float('inf'))
        self.assertRaises(GridConfigurationError, PeriodicGrid3, 'abc')

    def test_check_kernel(self):
        grid = PeriodicGrid3((5, 8, 8))
        grid.check_kernel('std4')
        self.assertRaises(GridConfigurationError, grid.check_kernel, 'new6')
        PeriodicGrid3((6, 6, 6)).check_kernel('new6')


class TestScalarField3(unittest.TestCase):

    def test_zeros(self):
        field = ScalarField3(PeriodicGrid3((2, 3, 4)))
        self.assertEqual(field.as_array().shape, (2, 3, 4))
        self.assertEqual(field.total(), 0.0)

    def test_axis_major(self):
        grid = PeriodicGrid3((2, 3, 4))
        field = ScalarField3(grid, np.arange(24.0))
        self.assertEqual(field.as_array()[1, 2, 3], 23.0)
        self.assertEqual(field.as_array()[1, 0, 2],
                         field.values[grid.flat_index(1, 0, 2)])

    def test_length(self):
        self.assertRaises(LengthMismatch, ScalarField3,
                          PeriodicGrid3((2, 2, 2)), [1.0, 2.0])


class TestMarkerSet(unittest.TestCase):

    def test_empty(self):
        self.assertEqual(len(MarkerSet([])), 0)

    def test_invalid(self):
        self.assertRaises(KernelDomainError, MarkerSet, [[1.0, 2.0]])
        self.assertRaises(KernelDomainError, MarkerSet,
                          [[1.0, 2.0, float('nan')]])


class TestDelta3(unittest.TestCase):

    def test_center(self):
        grid = PeriodicGrid3((8, 8, 8))
        stencil = dict(delta3('new6', grid, (2.0, 2.0, 2.0)))
        self.assertEqual(len(stencil), 216)
        self.assertAlmostEqual(stencil[(2, 2, 2)], phi('new6', 0.0) ** 3,
                               places=14)

    def test_periodic_indices(self):
        grid = PeriodicGrid3((8, 8, 8))
        stencil = dict(delta3('std4', grid, (0.5, 7.5, 0.0)))
        self.assertIn((7, 6, 7), stencil)
        self.assertTrue(all(0 <= n < 8 for key in stencil for n in key))

    def test_meshwidth(self):
        grid = PeriodicGrid3((8, 8, 8), 0.5)
        total = sum(v for _, v in delta3('std3', grid, (1.1, 0.3, 2.0)))
        self.assertAlmostEqual(total * 0.5 ** 3, 1.0, places=13)

    def test_grid_too_small(self):
        self.assertRaises(GridConfigurationError, delta3, 'std6',
                          PeriodicGrid3((4, 8, 8)), (0.0, 0.0, 0.0))

    @settings(max_examples=50)
    @given(sampled_from(ALL_KERNELS), coords, coords, coords)
    def test_sum(self, kernel, x, y, z):
        grid = PeriodicGrid3((8, 8, 8))
        total = sum(v for _, v in delta3(kernel, grid, (x, y, z)))
        self.assertAlmostEqual(total, 1.0, places=12)


class TestSpreadInterpolate(unittest.TestCase):

    def setUp(self):
        self.grid = PeriodicGrid3((8, 8, 8), 0.5)
        rng = np.random.default_rng(42)
        self.markers = MarkerSet(rng.random((10, 3)) * 4.0)
        self.values = rng.standard_normal(10)

    def test_conservation(self):
        for kernel in ALL_KERNELS:
            field = spread(kernel, self.grid, self.markers, self.values)
            self.assertAlmostEqual(field.total(), float(np.sum(self.values)),
                                   places=12)

    def test_linearity(self):
        other = np.linspace(-1.0, 1.0, 10)
        a = spread('new6', self.grid, self.markers, 2.0 * self.values + other)
        b = spread('new6', self.grid, self.markers, self.values)
        c = spread('new6', self.grid, self.markers, other)
        assert_allclose(a.values, 2.0 * b.values + c.values, atol=1e-12)

    def test_periodicity(self):
        shifted = MarkerSet(self.markers.positions + [4.0, -8.0, 12.0])
        a = spread('std4', self.grid, self.markers, self.values)
        b = spread('std4', self.grid, shifted, self.values)
        assert_allclose(a.values, b.values, atol=1e-12)

    def test_empty(self):
        field = spread('std4', self.grid, MarkerSet([]), [])
        self.assertEqual(field.total(), 0.0)
        self.assertEqual(interpolate('std4', self.grid, field,
                                     MarkerSet([])).shape, (0, ))

    def test_interpolate_constant(self):
        field = ScalarField3(self.grid, np.full(self.grid.size, 3.5))
        for kernel in ALL_KERNELS:
            assert_allclose(interpolate(kernel, self.grid, field,
                                        self.markers),
                            3.5, atol=1e-12)

    def test_interpolate_linear(self):
        # Linear along the first axis, away from the periodic seam
        grid = PeriodicGrid3((32, 8, 8))
        x = np.arange(32.0)
        field = ScalarField3(grid, np.repeat(2.0 * x - 1.0, 64))
        markers = MarkerSet([[10.3, 1.0, 2.0], [15.75, 7.5, 0.2]])
        for kernel in ALL_KERNELS:
            assert_allclose(interpolate(kernel, grid, field, markers),
                            [19.6, 30.5], atol=1e-11)

    def test_adjoint(self):
        rng = np.random.default_rng(7)
        field = ScalarField3(self.grid, rng.standard_normal(self.grid.size))
        h3 = self.grid.meshwidth ** 3
        for kernel in ALL_KERNELS:
            spread_field = spread(kernel, self.grid, self.markers, self.values)
            interpolated = interpolate(kernel, self.grid, field, self.markers)
            assert_allclose(np.dot(spread_field.values, field.values) * h3,
                            np.dot(self.values, interpolated), rtol=1e-12,
                            atol=1e-12)

    def test_errors(self):
        self.assertRaises(LengthMismatch, spread, 'std4', self.grid,
                          self.markers, [1.0])
        other = ScalarField3(PeriodicGrid3((8, 8, 9), 0.5))
        self.assertRaises(GridMismatch, interpolate, 'std4', self.grid, other,
                          self.markers)


class TestPairCoupling(unittest.TestCase):

    def setUp(self):
        self.grid = PeriodicGrid3((16, 16, 16))

    def test_same_point(self):
        for kernel in ALL_KERNELS:
            c = KERNEL_SPECS[kernel].sum_of_squares
            self.assertAlmostEqual(pair_coupling(kernel, self.grid,
                                                 (1.3, 4.7, 9.1),
                                                 (1.3, 4.7, 9.1)),
                                   c ** 3, places=13)

    def test_meshwidth_scaling(self):
        grid = PeriodicGrid3((16, 16, 16), 0.5)
        value = pair_coupling('new6', grid, (1.0, 2.0, 3.0), (1.0, 2.0, 3.0))
        c = kernel_spec('new6').sum_of_squares
        self.assertAlmostEqual(value * 0.5 ** 6, c ** 3, places=13)

    def test_symmetric(self):
        a = (0.3, 2.2, 5.9)
        b = (1.7, 1.1, 6.4)
        self.assertAlmostEqual(pair_coupling('std6', self.grid, a, b),
                               pair_coupling('std6', self.grid, b, a),
                               places=15)

    def test_disjoint(self):
        self.assertEqual(pair_coupling('std4', self.grid, (0.0, 0.0, 0.0),
                                       (8.0, 0.0, 0.0)), 0.0)

    def test_translation_by_grid_vector(self):
        a = np.array([[0.3, 2.2, 5.9]])
        b = np.array([[1.7, 1.1, 6.4]])
        shift = np.array([3.0, -5.0, 15.0])
        assert_allclose(pair_couplings('new6', self.grid, a, b),
                        pair_couplings('new6', self.grid, a + shift,
                                       b + shift), atol=1e-14)

    def test_length_mismatch(self):
        self.assertRaises(LengthMismatch, pair_couplings, 'std4', self.grid,
                          [[0.0, 0.0, 0.0]], [[0.0, 0.0, 0.0]] * 2)


if __name__ == '__main__':
    unittest.main()
