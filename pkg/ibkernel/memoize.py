# -*- coding: utf-8 -*-
"""
memoize.py - Definition of memoize decorators.
"""
import functools


class MethodAttributeMemoizer(object):
    """
    Define a decorator which caches results of an instance method.

    Results are cached according to the value of a specific instance
    attribute, so that a kernel family rebuilds its polynomials only when its
    defining constant changes. Only hashable positional arguments are
    supported.
    """

    def __init__(self, attribute_name):
        """
        Create the decorator, by giving the instance attribute name.
        """
        self.attribute_name = attribute_name

    def __call__(self, func):
        @functools.wraps(func)
        def wrapped_f(obj, *args):
            try:
                cache = obj.__cache
            except AttributeError:
                cache = obj.__cache = {}
            key = (func.__name__, getattr(obj, self.attribute_name), args)
            if key not in cache:
                cache[key] = func(obj, *args)
            return cache[key]

        return wrapped_f
