# -*- coding: utf-8 -*-
"""
__init__.py - Immersed-boundary kernel library.

The public entry points live in :mod:`ibkernel.core` (kernel evaluation),
:mod:`ibkernel.grid` (spreading and interpolation), :mod:`ibkernel.audit`
(postulate verification) and :mod:`ibkernel.invariance` (translational
invariance benchmark).
"""

__version__ = '1.0.0'
