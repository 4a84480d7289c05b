#!/bin/env python
# -*- coding: utf-8 -*-
"""
ibk_cli.py - Small CLI tool to exercise the kernel API.

Can evaluate and tabulate kernels, audit their postulates, run the
translational invariance benchmark and a spread/interpolate round trip.
"""
import sys

from ibkernel.tools.cli import main

if __name__ == '__main__':
    sys.exit(main())
