# -*- coding: utf-8 -*-
"""
results.py - Aggregator of the conditions checked by an audit.
"""
import logging

logger = logging.getLogger(__name__)


class AuditResults(object):
    """
    Aggregator for results of the conditions of an audit.

    A condition "succeeds" when its observed behaviour agrees with the
    kernel table, whether the table says it holds or not.
    """
    condition_description = dict(
        even_odd='Sums over even and odd grid points are both 1/2',
        moment_0='Weights sum to 1',
        moment_1='First moment vanishes',
        moment_2='Second moment is the constant K',
        moment_3='Third moment vanishes',
        sum_of_squares='Sum of squared weights is the constant C',
        coupling_bound='Coupling of two points is bounded by C',
        non_negativity='Kernel values are non-negative',
        cubic_exact='Cubic polynomials are interpolated exactly',
        cubic_defect='Cubic interpolation error is K/2 times the second derivative',
        special_k='Second derivative vanishes at the edge of the support',
        smoothness='Measured smoothness class is the expected one',
    )

    def __init__(self):
        self.test_result = dict()

    def add_test_result(self, label, success):
        """
        Record the outcome of a condition.

        A failure is never overwritten by a later success.

        :param label: The label of the condition.
        :param success: Whether the condition agrees with the table.
        """
        if not success or label not in self.test_result:
            self.test_result[label] = success

    def get_final_result(self, policy=None, verbose=False):
        """
        Calculate the audit verdict based on policy and condition results.

        The final result will be:
         - PASS if all conditions of the policy have been checked and any
                failed condition has policy "IGNORE"
         - WARN if all conditions have been checked, one or more failed
                condition has policy "WARNING", and all other failed
                conditions have policy "IGNORE"
         - FAIL otherwise
        If no policy is given, the result will be FAIL if any of the checked
        conditions failed, PASS otherwise.

        :param policy: Dict mapping condition labels to IGNORE, WARNING or
                       ERROR.
        :param verbose: If False, return only the verdict. Otherwise return a
                        log with the result of each condition.
        :return: The verdict as a string.

        >>> results = AuditResults()
        >>> results.add_test_result('moment_0', True)
        >>> results.add_test_result('special_k', False)
        >>> results.get_final_result()
        'FAIL'
        >>> results.get_final_result({'moment_0': 'ERROR',
        ...                           'special_k': 'WARNING'})
        'WARN'
        """
        if policy is None:
            if False in self.test_result.values():
                return "FAIL"
            return "PASS"

        info = ""
        got_warning = False
        got_error = False
        for label in policy:
            desc = self.condition_description.get(label, label)
            if label not in self.test_result:
                got_error = True
                if verbose:
                    info += "ERROR: " + desc + " - NOT CHECKED\n"
            elif not self.test_result[label]:
                level = policy[label]
                if level == "IGNORE":
                    if verbose:
                        info += "IGNORE: " + desc + " - NOK\n"
                elif level == "WARNING":
                    got_warning = True
                    if verbose:
                        info += "WARNING: " + desc + " - NOK\n"
                else:
                    got_error = True
                    if verbose:
                        info += "ERROR: " + desc + " - NOK\n"
            elif verbose:
                info += "PASS: " + desc + " - OK\n"

        if verbose:
            info += "Audit result: "
        if got_error:
            info += "FAIL"
        elif got_warning:
            info += "WARN"
        else:
            info += "PASS"
        return info
