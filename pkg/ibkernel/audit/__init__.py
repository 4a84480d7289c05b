# -*- coding: utf-8 -*-
"""
__init__.py - Numerical audit of the postulates and properties of a kernel.
"""
import logging

from ibkernel.audit.moments import (check_even_odd,
                                    check_moments,
                                    even_odd_sums,
                                    moment)
from ibkernel.audit.positivity import check_non_negativity, check_special_k
from ibkernel.audit.report import (AuditConfig,
                                   AuditReport,
                                   ConditionResult,
                                   audit_policy)
from ibkernel.audit.reproduction import (check_cubic_reproduction,
                                         cubic_reproduction_error)
from ibkernel.audit.results import AuditResults
from ibkernel.audit.smoothness import check_smoothness, smoothness_jump
from ibkernel.audit.sum_of_squares import (check_coupling_bound,
                                           check_sum_of_squares,
                                           coupling_1d,
                                           sum_of_squares)
from ibkernel.core import ALL_KERNELS, KernelId
from ibkernel.exceptions import AuditEvaluationError, IBKernelException
from ibkernel.utils import sample_points

__all__ = ['AuditConfig', 'AuditReport', 'ConditionResult', 'audit',
           'audit_all', 'audit_policy', 'coupling_1d',
           'cubic_reproduction_error', 'even_odd_sums', 'moment',
           'smoothness_jump', 'sum_of_squares']

CHECKS = [
    check_even_odd,
    check_moments,
    check_sum_of_squares,
    check_coupling_bound,
    check_non_negativity,
    check_cubic_reproduction,
    check_special_k,
    check_smoothness,
]

logger = logging.getLogger(__name__)


def audit(kernel, cfg=None, policy=None):
    """
    Run every check on a kernel.

    Each check function receives the kernel and an options dictionary
    holding the sampled points, the tolerance, the finite-difference
    spacings and the seed.

    :param kernel: `KernelId` or kernel name.
    :param cfg: `AuditConfig`, defaults when None.
    :param policy: Optional dict overriding the level of some conditions,
                   see `audit_policy`.
    :return: The `AuditReport`.
    :raises AuditEvaluationError: A kernel evaluation failed.
    :raises KernelDomainError: Invalid policy.
    """
    kernel = KernelId.from_name(kernel)
    cfg = cfg or AuditConfig()
    policy = audit_policy(kernel, policy)
    options = {
        'points': sample_points(int(cfg.samples), cfg.seed),
        'tolerance': cfg.tolerance,
        'fd_epsilons': cfg.fd_epsilons,
        'seed': cfg.seed,
    }

    results = AuditResults()
    conditions = []
    smoothness_class = None
    min_value = None
    for check_function in CHECKS:
        try:
            _, func_result = check_function(kernel, options)
        except AuditEvaluationError:
            raise
        except IBKernelException as exc:
            logger.error("Error while auditing kernel '%s' (%s): %s",
                         kernel, check_function.__name__, exc)
            raise AuditEvaluationError(kernel, getattr(exc, 'r', None),
                                       exc) from exc
        for condition in func_result['conditions']:
            results.add_test_result(condition.name, condition.matches)
            conditions.append(condition)
        smoothness_class = func_result.get('smoothness_class',
                                           smoothness_class)
        min_value = func_result.get('min_value', min_value)

    verdict = results.get_final_result(policy)
    report = AuditReport(kernel, conditions, smoothness_class, min_value,
                         verdict,
                         log=results.get_final_result(policy, verbose=True))
    logger.info("Audit of kernel %s: %s", kernel, verdict)
    return report


def audit_all(cfg=None, policy=None):
    """
    Audit every supported kernel.

    :param cfg: `AuditConfig`, defaults when None.
    :param policy: Optional policy overrides, see `audit_policy`.
    :return: List of `AuditReport`, in table order.
    """
    return [audit(kernel, cfg, policy) for kernel in ALL_KERNELS]
