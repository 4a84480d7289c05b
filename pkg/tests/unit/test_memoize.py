# -*- coding: utf-8 -*-
"""
test_memoize.py - Unit testing of memoize decorators.
"""
import unittest

from ibkernel.memoize import MethodAttributeMemoizer


class Counter(object):

    def __init__(self, constant):
        self.constant = constant
        self.calls = 0

    @MethodAttributeMemoizer('constant')
    def scaled(self, value):
        self.calls += 1
        return self.constant * value


class TestMethodAttributeMemoizer(unittest.TestCase):

    def test_cached(self):
        counter = Counter(2)
        self.assertEqual(counter.scaled(3), 6)
        self.assertEqual(counter.scaled(3), 6)
        self.assertEqual(counter.calls, 1)
        self.assertEqual(counter.scaled(4), 8)
        self.assertEqual(counter.calls, 2)

    def test_attribute_change(self):
        counter = Counter(2)
        counter.scaled(3)
        counter.constant = 5
        self.assertEqual(counter.scaled(3), 15)
        self.assertEqual(counter.calls, 2)

    def test_per_instance(self):
        first = Counter(2)
        second = Counter(2)
        first.scaled(1)
        second.scaled(1)
        self.assertEqual((first.calls, second.calls), (1, 1))

    def test_wraps(self):
        self.assertEqual(Counter.scaled.__name__, 'scaled')


if __name__ == '__main__':
    unittest.main()
