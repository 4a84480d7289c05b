# -*- coding: utf-8 -*-
"""
audit.py - Audit reports for one or all kernels.
"""
import logging
import sys

from ibkernel.audit import AuditConfig, audit
from ibkernel.parser.report_serializer import serialize_audit_csv, to_json
from ibkernel.tools.utils import (EXIT_CHECK_FAILURE,
                                  EXIT_SUCCESS,
                                  parse_kernels,
                                  write_output)

logger = logging.getLogger(__name__)


def cmd_audit(kernel, cfg=None, fmt='json', output=None, policy=None):
    """
    Audit kernels and print their reports.

    A single kernel gives one JSON object, "all" a list of them.

    :param kernel: Kernel name or "all".
    :param cfg: `AuditConfig`.
    :param fmt: "json" or "csv".
    :param output: Writable text stream, stdout when None.
    :param policy: Optional dict overriding the level of some conditions.
    :return: Exit code, success only when every verdict is PASS.
    """
    cfg = cfg or AuditConfig()
    names = parse_kernels(kernel)
    reports = [audit(name, cfg, policy) for name in names]

    if fmt == 'csv':
        serialize_audit_csv(reports, output if output is not None
                            else sys.stdout)
    else:
        dicts = [r.to_dict() for r in reports]
        write_output(to_json(dicts if len(names) > 1 else dicts[0]), output)

    failed = [r for r in reports if r.verdict != 'PASS']
    for report in failed:
        logger.error("Kernel %s does not match its table row:\n%s",
                     report.kernel, report.log)
    return EXIT_CHECK_FAILURE if failed else EXIT_SUCCESS
