# -*- coding: utf-8 -*-
"""
test_sixpoint.py - Unit testing of the six-point kernel family.
"""
import unittest

import numpy as np

from ibkernel.core import NEW6_K
from ibkernel.exceptions import KernelDomainError
from ibkernel.sixpoint import ALPHA, SixPointFamily


class TestSixPointFamily(unittest.TestCase):

    def setUp(self):
        self.std6 = SixPointFamily(0.0)
        self.new6 = SixPointFamily(NEW6_K)

    def test_sum_of_squares_constant(self):
        self.assertAlmostEqual(self.std6.sum_of_squares_constant(),
                               67.0 / 128.0, places=15)
        self.assertAlmostEqual(self.new6.sum_of_squares_constant(), 0.325778,
                               places=6)

    def test_root_vanishes_at_zero(self):
        self.assertAlmostEqual(float(self.std6.root(0.0)), 0.0, places=15)
        self.assertAlmostEqual(float(self.new6.root(0.0)), 0.0, places=15)

    def test_branch_sums_to_one(self):
        r = np.linspace(0.0, 1.0, 101)
        for family in (self.std6, self.new6):
            sums = np.sum(family.branch(r), axis=-1)
            np.testing.assert_allclose(sums, 1.0, rtol=0, atol=1e-14)

    def test_branch_sum_of_squares_constant(self):
        r = np.linspace(0.0, 1.0, 101)
        for family in (self.std6, self.new6):
            squares = np.sum(family.branch(r) ** 2, axis=-1)
            np.testing.assert_allclose(squares,
                                       family.sum_of_squares_constant(),
                                       rtol=0, atol=1e-13)

    def test_root_solves_quadratic(self):
        beta, gamma, _, _ = self.new6.polynomials()
        for r in (0.05, 0.5, 0.95):
            w = float(self.new6.root(r))
            self.assertAlmostEqual(ALPHA * w * w + beta(r) * w + gamma(r),
                                   0.0, places=12)

    def test_discriminant_non_negative(self):
        r = np.linspace(0.0, 1.0, 1001)
        for family in (self.std6, self.new6):
            self.assertTrue((family.discriminant(r) >= 0.0).all())

    def test_edge_second_derivative(self):
        self.assertAlmostEqual(self.new6.edge_second_derivative(), 0.0,
                               places=8)
        self.assertGreater(abs(self.std6.edge_second_derivative()), 1e-3)

    def test_weight_derivative_matches_finite_differences(self):
        h = 1e-5
        for index in range(6):
            r = 0.4
            fd = (self.new6.branch(r + h)[index]
                  - self.new6.branch(r - h)[index]) / (2 * h)
            self.assertAlmostEqual(self.new6.weight_derivative(r, index, 1),
                                   float(fd), places=7)

    def test_weight_derivative_domain(self):
        self.assertRaises(KernelDomainError, self.new6.weight_derivative,
                          1.2, 0, 1)

    def test_polynomials_cached_per_constant(self):
        first = self.new6.polynomials()
        self.assertIs(first, self.new6.polynomials())
        family = SixPointFamily(0.0)
        before = family.polynomials()
        family.second_moment = NEW6_K
        self.assertIsNot(before, family.polynomials())
        self.assertAlmostEqual(family.sum_of_squares_constant(),
                               self.new6.sum_of_squares_constant(),
                               places=15)

    def test_repr(self):
        self.assertEqual(repr(self.std6), "<SixPointFamily: K=0.0>")


if __name__ == '__main__':
    unittest.main()
