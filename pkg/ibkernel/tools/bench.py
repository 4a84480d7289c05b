# -*- coding: utf-8 -*-
"""
bench.py - Translational invariance benchmark runs and their output files.
"""
import dataclasses
import logging

from ibkernel.core import KernelId
from ibkernel.invariance import (DEFAULT_SENSITIVITY_WIDTHS,
                                 bin_width_sensitivity,
                                 reference_ordering_holds,
                                 run_bench,
                                 summary,
                                 within_reference)
from ibkernel.parser.report_serializer import (serialize_samples,
                                               serialize_stats,
                                               to_json)
from ibkernel.tools.utils import (EXIT_CHECK_FAILURE,
                                  EXIT_SUCCESS,
                                  open_output,
                                  parse_kernels,
                                  write_output)

logger = logging.getLogger(__name__)


def output_paths(prefix, kernel=None):
    """
    Names of the files written by a run.

    >>> output_paths('out')
    ('out-samples.csv', 'out-stats.csv', 'out-summary.json')
    >>> output_paths('out', 'new6')[0]
    'out-new6-samples.csv'
    """
    if kernel is not None:
        prefix = '%s-%s' % (prefix, kernel)
    return tuple('%s-%s' % (prefix, suffix)
                 for suffix in ('samples.csv', 'stats.csv', 'summary.json'))


def bench_kernel(cfg, paths=None, sensitivity=DEFAULT_SENSITIVITY_WIDTHS,
                 fmt='json', output=None):
    """
    Run the benchmark for one kernel and write its results.

    With paths (see `output_paths`), samples, stats and summary go to three
    files; otherwise the summary (json) or the stats (csv) go to output.

    :return: The summary dictionary.
    """
    samples, stats = run_bench(cfg)
    widths = None
    if sensitivity:
        widths = bin_width_sensitivity(samples, sensitivity,
                                       cfg.max_distance, cfg.detrend)
    result = summary(cfg, stats, widths)

    if paths is not None:
        samples_path, stats_path, summary_path = paths
        with open_output(samples_path) as out:
            serialize_samples(samples, out)
        with open_output(stats_path) as out:
            serialize_stats(stats, out)
        with open_output(summary_path) as out:
            write_output(to_json(result), out)
    elif fmt == 'csv':
        with open_output(None, output) as out:
            serialize_stats(stats, out)
    else:
        write_output(to_json(result), output)
    return result


def cmd_bench(kernel, cfg, out_prefix=None,
              sensitivity=DEFAULT_SENSITIVITY_WIDTHS, check_reference=False,
              fmt='json', output=None):
    """
    Run the benchmark for one kernel or for all of them.

    With "all", the reference ordering of the maximum standard deviations is
    checked; with check_reference, each value must also lie within the relative
    tolerance of its reference value.

    :param kernel: Kernel name or "all".
    :param cfg: `BenchConfig`, its kernel is replaced by each benchmarked one.
    :param out_prefix: Prefix of the output files, None for output.
    :return: Exit code.
    """
    names = parse_kernels(kernel)
    results = {}
    for name in names:
        kernel_cfg = dataclasses.replace(cfg, kernel=KernelId.from_name(name))
        paths = None
        if out_prefix is not None:
            paths = output_paths(out_prefix, name if len(names) > 1 else None)
        results[kernel_cfg.kernel] = bench_kernel(kernel_cfg, paths,
                                                  sensitivity, fmt, output)

    code = EXIT_SUCCESS
    max_stds = dict((k, r['max_std']) for k, r in results.items())
    if len(names) > 1 and not reference_ordering_holds(max_stds):
        logger.error("Maximum standard deviations do not follow the "
                     "reference ordering: %s",
                     ', '.join('%s=%g' % (k, v) for k, v in max_stds.items()))
        code = EXIT_CHECK_FAILURE
    if check_reference:
        for k, value in max_stds.items():
            if not within_reference(k, value):
                logger.error("Kernel %s: max std %g too far from the "
                             "reference value", k, value)
                code = EXIT_CHECK_FAILURE
    return code
