# -*- coding: utf-8 -*-
"""
report_serializer.py - CSV and JSON output of tables, audits and benchmarks.

CSV reals are written with 17 significant digits so that outputs are
byte-stable and round-trip to the same doubles.
"""
import json
import logging
import math

import numpy as np

from ibkernel.utils import format_real

logger = logging.getLogger(__name__)

SAMPLES_HEADER = ('distance', 'coupling')
STATS_HEADER = ('bin_lo', 'bin_hi', 'count', 'min', 'mean', 'max', 'std')
AUDIT_HEADER = ('kernel', 'check', 'expected', 'observed', 'max_violation',
                'value', 'matches')


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_real(value)
    return str(value)


def write_csv(header, rows, output):
    """
    Write rows of cells as CSV.

    :param header: Sequence of column names.
    :param rows: Iterable of sequences of cells (reals, ints, bools, str).
    :param output: Writable text stream.
    """
    output.write(','.join(header) + '\n')
    for row in rows:
        output.write(','.join(_cell(v) for v in row) + '\n')


def serialize_samples(samples, output):
    """
    Write benchmark observations, header "distance,coupling".
    """
    write_csv(SAMPLES_HEADER,
              ((float(d), float(c)) for d, c in samples), output)


def serialize_stats(stats, output):
    """
    Write per-bin statistics, header "bin_lo,bin_hi,count,min,mean,max,std".
    """
    write_csv(STATS_HEADER,
              ((float(lo), float(hi), int(count), float(low), float(mean),
                float(high), float(std))
               for lo, hi, count, low, mean, high, std in stats.rows()),
              output)


def serialize_audit_csv(reports, output):
    """
    Write one row per (kernel, condition) of audit reports.
    """
    rows = []
    for report in reports:
        for c in report.conditions:
            rows.append((str(report.kernel), c.name, c.expected, c.observed,
                         c.max_violation, c.value, c.matches))
    write_csv(AUDIT_HEADER, rows, output)


def _prepare(obj):
    """
    Make an object JSON-ready: NaN and infinities become null, numpy
    scalars become Python numbers.
    """
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if obj is None:
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        obj = float(obj)
        if math.isnan(obj) or math.isinf(obj):
            return None
        return obj
    if isinstance(obj, dict):
        return dict((str(k), _prepare(v)) for k, v in obj.items())
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_prepare(v) for v in obj]
    return obj


def to_json(obj):
    """
    Serialize an object made of dicts, lists and scalars to JSON.

    Floats use the shortest representation that round-trips, and keys are
    sorted, so that the output is byte-stable.

    >>> to_json({'b': float('nan'), 'a': 0.1})
    '{\\n  "a": 0.1,\\n  "b": null\\n}'
    """
    return json.dumps(_prepare(obj), indent=2, sort_keys=True,
                      allow_nan=False)
