# -*- coding: utf-8 -*-
"""
evaluate.py - Kernel values and tables.
"""
import logging
import sys

from ibkernel.core import KERNEL_SPECS, KernelId, gaussian_match, phi, \
    phi_derivative
from ibkernel.exceptions import KernelDomainError
from ibkernel.parser.report_serializer import to_json, write_csv
from ibkernel.tools.utils import write_output
from ibkernel.utils import arange_inclusive, format_real

logger = logging.getLogger(__name__)

PHI = 'phi'
DERIVATIVES = 'derivatives'
GAUSSIAN = 'gaussian'
TABLE_COLUMNS = (PHI, DERIVATIVES, GAUSSIAN)


def evaluate(kernel, r, order=0):
    """
    Value or derivative of a kernel.

    :param kernel: `KernelId` or kernel name.
    :param float r: Real.
    :param int order: 0 for the value, 1 to 3 for a derivative.
    :return: The real.

    >>> evaluate('std4', 0.0)
    0.5
    """
    if order == 0:
        return phi(kernel, r)
    return phi_derivative(r, order, kernel=kernel)


def cmd_eval(kernel, r, order=0, fmt='csv', output=None):
    """
    Print the value or a derivative of a kernel with 17 significant digits.
    """
    kernel = KernelId.from_name(kernel)
    value = evaluate(kernel, r, order)
    if fmt == 'json':
        write_output(to_json({'kernel': str(kernel), 'r': float(r),
                              'order': order, 'value': value}), output)
    else:
        write_output(format_real(value), output)


def table_rows(kernel, lo, hi, step, include=(PHI, )):
    """
    Build the rows of a kernel table.

    Derivative columns are d1 for every kernel plus d2, d3 for kernels with
    three continuous derivatives.

    :param kernel: `KernelId` or kernel name.
    :param lo: First r.
    :param hi: Last r, greater than lo.
    :param step: Positive increment.
    :param include: Subset of TABLE_COLUMNS.
    :return: Tuple (header, rows).
    :raises KernelDomainError: Invalid range or column.
    """
    kernel = KernelId.from_name(kernel)
    if not lo < hi:
        raise KernelDomainError('max', hi)
    if not step > 0:
        raise KernelDomainError('step', step)
    for column in include:
        if column not in TABLE_COLUMNS:
            raise KernelDomainError('include', column)

    orders = []
    if DERIVATIVES in include:
        orders = list(range(1, KERNEL_SPECS[kernel].smoothness + 1))
    header = ['r', 'phi'] + ['d%d' % n for n in orders]
    if GAUSSIAN in include:
        header.append('gauss')

    rows = []
    for r in arange_inclusive(lo, hi, step):
        r = float(r)
        row = [r, phi(kernel, r)]
        row.extend(phi_derivative(r, n, kernel=kernel) for n in orders)
        if GAUSSIAN in include:
            row.append(gaussian_match(r))
        rows.append(row)
    logger.debug("Table of kernel %s: %d rows", kernel, len(rows))
    return header, rows


def cmd_table(kernel, lo, hi, step, include=(PHI, ), fmt='csv', output=None):
    """
    Print a kernel table as CSV rows "r,phi[,d1,d2,d3][,gauss]" or JSON.
    """
    header, rows = table_rows(kernel, lo, hi, step, include)
    if fmt == 'json':
        write_output(to_json([dict(zip(header, row)) for row in rows]),
                     output)
    else:
        write_csv(header, rows, output if output is not None else sys.stdout)