# -*- coding: utf-8 -*-
"""
test_utils.py - Unit testing of ibkernel utils module.
"""
import unittest

import numpy as np

from ibkernel.utils import (BELOW_ONE,
                            arange_inclusive,
                            format_real,
                            minimum_image,
                            sample_points)


class TestUtils(unittest.TestCase):

    def test_format_real(self):
        self.assertEqual(format_real(0.1), '0.10000000000000001')
        self.assertEqual(format_real(np.float64(2.0)), '2')
        self.assertEqual(format_real(-0.0), '0')
        self.assertEqual(format_real(-1e-20), '-9.9999999999999995e-21')
        self.assertEqual(float(format_real(1.0 / 7.0)), 1.0 / 7.0)

    def test_sample_points(self):
        points = sample_points(1000, seed=2)
        self.assertEqual(len(points), 1002)
        self.assertTrue(((points >= 0.0) & (points < 1.0)).all())
        self.assertEqual(points[-1], BELOW_ONE)
        # The sweep fills the interval evenly
        counts = np.histogram(points[:-2], bins=10, range=(0.0, 1.0))[0]
        self.assertTrue((counts >= 95).all())
        self.assertFalse(np.array_equal(sample_points(10, 0),
                                        sample_points(10, 1)))
        self.assertRaises(ValueError, sample_points, 0)

    def test_arange_inclusive(self):
        points = arange_inclusive(-1.5, 1.5, 0.5)
        self.assertEqual([float(x) for x in points],
                         [-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5])
        self.assertEqual(len(arange_inclusive(0.0, 1.0, 0.3)), 4)

    def test_minimum_image(self):
        delta = np.array([16.0, -16.0, 0.0, 47.5])
        self.assertEqual([float(x) for x in minimum_image(delta, 32.0)],
                         [-16.0, -16.0, 0.0, 15.5])


if __name__ == '__main__':
    unittest.main()
