#!/bin/env python
# -*- coding: utf-8 -*-
from io import open
import sys
from setuptools import setup, find_packages
from setuptools.command.test import test as TestCommand


# From https://docs.pytest.org/en/latest/goodpractices.html#manual-integration
class PyTest(TestCommand):
    user_options = [('pytest-args=', 'a', "Arguments to pass to pytest")]

    def initialize_options(self):
        TestCommand.initialize_options(self)
        self.pytest_args = ''

    def run_tests(self):
        import shlex
        #import here, cause outside the eggs aren't loaded
        import pytest
        errno = pytest.main(shlex.split(self.pytest_args))
        sys.exit(errno)


setup(
    name="ibkernel-core",
    version='1.0.0',
    description="Immersed boundary discrete delta function kernels",
    long_description=open('README.md', encoding='utf-8').read(),
    long_description_content_type='text/markdown',
    license="TBD",
    python_requires='>=3.7',
    install_requires=['numpy>=1.17'],
    packages=find_packages(exclude=['tests', 'tests.*']),
    scripts=[
        'tools/ibk_cli.py',
    ],
    tests_require=['pytest', 'pytest-cov', 'hypothesis'],
    cmdclass={'test': PyTest},
    classifiers=[
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries'
    ]
)
