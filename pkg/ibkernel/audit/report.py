# -*- coding: utf-8 -*-
"""
report.py - Audit configuration, per-condition results and audit report.
"""
import logging
from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from ibkernel.core import (ALL_KERNELS,
                           CONDITIONS,
                           KERNEL_SPECS,
                           KernelId,
                           SUM_OF_SQUARES)
from ibkernel.exceptions import KernelDomainError

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 10000
DEFAULT_TOLERANCE = 1e-12
DEFAULT_FD_EPSILONS = (0.1, 0.05, 0.025, 0.0125, 0.00625)
DEFAULT_SEED = 0

COUPLING_BOUND = 'coupling_bound'
NON_NEGATIVITY = 'non_negativity'
CUBIC_EXACT = 'cubic_exact'
CUBIC_DEFECT = 'cubic_defect'
SPECIAL_K = 'special_k'
SMOOTHNESS = 'smoothness'


def _expectations(spec):
    """
    Conditions a kernel is expected to satisfy (True) or violate (False).
    """
    expected = dict((name, name in spec.satisfies) for name in CONDITIONS)
    expected[SUM_OF_SQUARES] = True
    expected[COUPLING_BOUND] = True
    expected[NON_NEGATIVITY] = spec.non_negative
    expected[CUBIC_EXACT] = spec.second_moment == 0.0
    expected[CUBIC_DEFECT] = spec.second_moment is not None
    if spec.stencil_width == 6:
        expected[SPECIAL_K] = spec.id is KernelId.NEW6
    expected[SMOOTHNESS] = True
    return expected


EXPECTATIONS = dict((k, _expectations(KERNEL_SPECS[k])) for k in ALL_KERNELS)

POLICY_LEVELS = ("IGNORE", "WARNING", "ERROR")

# Level of a condition which disagrees with the kernel table.
DEFAULT_POLICY = dict(even_odd="ERROR",
                      moment_0="ERROR",
                      moment_1="ERROR",
                      moment_2="ERROR",
                      moment_3="ERROR",
                      sum_of_squares="ERROR",
                      coupling_bound="ERROR",
                      non_negativity="ERROR",
                      cubic_exact="ERROR",
                      cubic_defect="WARNING",
                      special_k="WARNING",
                      smoothness="ERROR")


def audit_policy(kernel, overrides=None):
    """
    Policy of the audit of a kernel, over the conditions of its table row.

    :param kernel: `KernelId` or kernel name.
    :param overrides: Optional dict mapping condition names to a level.
    :return: Dict mapping condition names to IGNORE, WARNING or ERROR.
    :raises KernelDomainError: Unknown condition or level.

    >>> audit_policy('std4')['cubic_defect']
    'WARNING'
    >>> 'special_k' in audit_policy('std4')
    False
    """
    expected = EXPECTATIONS[KernelId.from_name(kernel)]
    policy = dict((name, DEFAULT_POLICY[name]) for name in expected)
    for name, level in (overrides or {}).items():
        if name not in DEFAULT_POLICY:
            raise KernelDomainError('policy', name)
        if level not in POLICY_LEVELS:
            raise KernelDomainError(name, level)
        if name in policy:
            policy[name] = level
    return policy


@dataclass(frozen=True)
class AuditConfig(object):
    """
    Parameters of an audit.

    - `samples`: number of r values of the sweep of [0, 1).
    - `tolerance`: tolerance of the algebraic identities.
    - `fd_epsilons`: strictly decreasing finite-difference steps.
    - `seed`: selects the sweep offset and the random test data.
    """
    samples: int = DEFAULT_SAMPLES
    tolerance: float = DEFAULT_TOLERANCE
    fd_epsilons: tuple = DEFAULT_FD_EPSILONS
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if int(self.samples) < 1:
            raise KernelDomainError('samples', self.samples)
        if not self.tolerance > 0:
            raise KernelDomainError('tolerance', self.tolerance)
        eps = tuple(float(e) for e in self.fd_epsilons)
        if len(eps) == 0 or any(e <= 0 for e in eps) or \
                any(a <= b for a, b in zip(eps, eps[1:])):
            raise KernelDomainError('fd_epsilons', self.fd_epsilons)
        object.__setattr__(self, 'fd_epsilons', eps)


class ConditionResult(namedtuple('ConditionResult', ['name',
                                                     'expected',
                                                     'observed',
                                                     'max_violation',
                                                     'value'])):
    """
    Outcome of one condition for one kernel.

    - `expected`: whether the condition holds according to the kernel table.
    - `observed`: whether it holds numerically.
    - `max_violation`: largest deviation found over the samples.
    - `value`: measured constant (mean over samples), if meaningful.
    """
    __slots__ = ()

    @property
    def matches(self):
        return self.expected == self.observed

    def to_dict(self):
        return {
            'name': self.name,
            'expected': self.expected,
            'observed': self.observed,
            'max_violation': self.max_violation,
            'value': self.value,
            'matches': self.matches,
        }


def evaluate_condition(kernel, name, values, target, tolerance):
    """
    Compare sampled values of an identity with its target.

    :param kernel: The audited `KernelId`.
    :param name: Condition name.
    :param values: Array of sampled values of the left-hand side.
    :param target: Constant the values should equal, or None if the
                   condition only requires them to be constant.
    :param tolerance: Maximum admissible violation.
    :return: `ConditionResult`.
    """
    values = np.asarray(values, dtype=np.float64)
    if target is None:
        violation = float(np.ptp(values))
    else:
        violation = float(np.max(np.abs(values - target)))
    return condition_result(kernel, name, violation <= tolerance, violation,
                            float(np.mean(values)))


def condition_result(kernel, name, observed, violation, value):
    """
    Build a `ConditionResult`, taking the expectation from the kernel table.
    """
    expected = EXPECTATIONS[kernel][name]
    if observed != expected:
        logger.warning("Kernel %s: condition '%s' observed %s, expected %s "
                       "(max violation %g)", kernel, name,
                       observed, expected, violation)
    return ConditionResult(name=name,
                           expected=expected,
                           observed=bool(observed),
                           max_violation=float(violation),
                           value=value)


class AuditReport(object):
    """
    Result of the audit of one kernel.
    """

    def __init__(self, kernel, conditions, smoothness_class, min_value,
                 verdict, log=None):
        """
        :param kernel: The audited `KernelId`.
        :param conditions: List of `ConditionResult`.
        :param int smoothness_class: Number of continuous derivatives found.
        :param float min_value: Smallest sampled kernel value.
        :param str verdict: PASS, WARN or FAIL, see `AuditResults`.
        :param str log: Optional verbose verdict log.
        """
        self.kernel = kernel
        self.conditions = list(conditions)
        self.smoothness_class = smoothness_class
        self.min_value = min_value
        self.verdict = verdict
        self.log = log

    def __repr__(self):
        return "<AuditReport: %s %s>" % (self.kernel, self.verdict)

    def __getitem__(self, name):
        for condition in self.conditions:
            if condition.name == name:
                return condition
        raise KeyError(name)

    @property
    def matches_table(self):
        """
        True when every condition behaves as the kernel table states.
        """
        return all(c.matches for c in self.conditions)

    def to_dict(self):
        return {
            'kernel': str(self.kernel),
            'checks': [c.to_dict() for c in self.conditions],
            'smoothness_class': self.smoothness_class,
            'min_value': self.min_value,
            'verdict': self.verdict,
        }
