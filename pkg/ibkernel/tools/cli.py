# -*- coding: utf-8 -*-
"""
cli.py - Command line front end of the kernel library.

Sub-commands: eval, table, audit, bench and demo. Data goes to stdout or to
files, logs to stderr. Exit codes: 0 success, 1 failed check, 2 usage error.
"""
import argparse
import logging

from ibkernel.audit import AuditConfig
from ibkernel.audit.report import (DEFAULT_FD_EPSILONS,
                                   DEFAULT_POLICY,
                                   DEFAULT_SAMPLES,
                                   DEFAULT_SEED,
                                   DEFAULT_TOLERANCE,
                                   POLICY_LEVELS)
from ibkernel.core import kernel_spec
from ibkernel.exceptions import (GridException,
                                 IBKernelException,
                                 KernelApiException)
from ibkernel.invariance import (DEFAULT_BIN_WIDTH,
                                 DEFAULT_BOX,
                                 DEFAULT_MAX_DISTANCE,
                                 DEFAULT_MESHWIDTH,
                                 DEFAULT_PAIRS,
                                 DEFAULT_SENSITIVITY_WIDTHS,
                                 BenchConfig)
from ibkernel.tools.audit import cmd_audit
from ibkernel.tools.bench import cmd_bench
from ibkernel.tools.demo import (DEFAULT_MARKERS,
                                 DEFAULT_RESIDUAL_TOLERANCE,
                                 cmd_demo)
from ibkernel.tools.evaluate import PHI, TABLE_COLUMNS, cmd_eval, cmd_table
from ibkernel.tools.utils import (ALL,
                                  EXIT_CHECK_FAILURE,
                                  EXIT_SUCCESS,
                                  EXIT_USAGE,
                                  KERNEL_NAMES,
                                  OUTPUT_FORMATS,
                                  configure_logging)

logger = logging.getLogger("ibk_cli")


def _real_list(text):
    try:
        return tuple(float(v) for v in text.split(',') if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("invalid list of reals '%s'" % text)


def _policy_item(text):
    name, _, level = text.partition('=')
    level = level.upper()
    if name not in DEFAULT_POLICY or level not in POLICY_LEVELS:
        raise argparse.ArgumentTypeError("invalid policy '%s'" % text)
    return name, level


def build_parser():
    """
    Build the argument parser of the command line tool.
    """
    parser = argparse.ArgumentParser(description='Immersed boundary kernel '
                                                 'CLI')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='be verbose')
    parser.add_argument('-q', '--quiet', action='store_true',
                        help='Be quiet (no log)')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    def add_format(sub, default):
        sub.add_argument('--format', choices=OUTPUT_FORMATS, default=default,
                         help='output format')

    sub = subparsers.add_parser('eval', help='Evaluate a kernel')
    sub.add_argument('--kernel', choices=KERNEL_NAMES, required=True)
    sub.add_argument('--r', type=float, required=True, help='point')
    sub.add_argument('--order', type=int, choices=(0, 1, 2, 3), default=0,
                     help='derivative order, 2 and 3 for new6 only')
    add_format(sub, 'csv')

    sub = subparsers.add_parser('table', help='Tabulate a kernel')
    sub.add_argument('--kernel', choices=KERNEL_NAMES, required=True)
    sub.add_argument('--min', type=float, default=None,
                     help='first r, -r_s by default')
    sub.add_argument('--max', type=float, default=None,
                     help='last r, r_s by default')
    sub.add_argument('--step', type=float, default=0.01)
    sub.add_argument('--include', choices=TABLE_COLUMNS, action='append',
                     help='extra columns (repeatable)')
    add_format(sub, 'csv')

    sub = subparsers.add_parser('audit', help='Audit kernel postulates')
    sub.add_argument('--kernel', choices=KERNEL_NAMES + (ALL, ),
                     default=ALL)
    sub.add_argument('--samples', type=int, default=DEFAULT_SAMPLES)
    sub.add_argument('--tol', type=float, default=DEFAULT_TOLERANCE)
    sub.add_argument('--fd-epsilons', type=_real_list,
                     default=DEFAULT_FD_EPSILONS,
                     help='comma separated decreasing steps')
    sub.add_argument('--seed', type=int, default=DEFAULT_SEED)
    sub.add_argument('--policy', type=_policy_item, action='append',
                     metavar='CONDITION=LEVEL',
                     help='level of a condition: IGNORE, WARNING or ERROR')
    add_format(sub, 'json')

    sub = subparsers.add_parser('bench', help='Translational invariance '
                                              'benchmark')
    sub.add_argument('--kernel', choices=KERNEL_NAMES + (ALL, ),
                     default='new6')
    sub.add_argument('--pairs', type=int, default=DEFAULT_PAIRS)
    sub.add_argument('--seed', type=int, default=DEFAULT_SEED)
    sub.add_argument('--box', type=int, default=DEFAULT_BOX)
    sub.add_argument('--meshwidth', type=float, default=DEFAULT_MESHWIDTH)
    sub.add_argument('--bin-width', type=float, default=DEFAULT_BIN_WIDTH)
    sub.add_argument('--max-distance', type=float,
                     default=DEFAULT_MAX_DISTANCE)
    sub.add_argument('--raw-bins', dest='detrend', action='store_false',
                     help='std about the bin mean instead of the within-bin '
                          'linear trend')
    sub.add_argument('--workers', type=int, default=1)
    sub.add_argument('--sensitivity', type=_real_list,
                     default=DEFAULT_SENSITIVITY_WIDTHS,
                     help='comma separated bin widths to re-bin with')
    sub.add_argument('--check-reference', action='store_true',
                     help='fail when max std is off the reference value')
    sub.add_argument('--out-prefix', metavar='PREFIX',
                     help='write PREFIX-samples.csv, PREFIX-stats.csv and '
                          'PREFIX-summary.json')
    add_format(sub, 'json')

    sub = subparsers.add_parser('demo', help='Spread/interpolate round trip')
    sub.add_argument('--kernel', choices=KERNEL_NAMES, default='new6')
    sub.add_argument('--dims', type=int, nargs=3, default=(16, 16, 16),
                     metavar=('N1', 'N2', 'N3'))
    sub.add_argument('--meshwidth', type=float, default=1.0)
    sub.add_argument('--markers', metavar='CSV',
                     help='marker file, "x,y,z[,value]" rows')
    sub.add_argument('--count', type=int, default=DEFAULT_MARKERS,
                     help='number of random markers without --markers')
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--field-in', metavar='CSV',
                     help='field to interpolate, "i,j,k,value" rows')
    sub.add_argument('--field-out', metavar='CSV',
                     help='where to write the spread field')
    sub.add_argument('--tol', type=float, default=DEFAULT_RESIDUAL_TOLERANCE)
    add_format(sub, 'json')
    return parser


def run(args):
    """
    Dispatch parsed arguments to a command.

    :return: Exit code.
    """
    if args.command == 'eval':
        cmd_eval(args.kernel, args.r, args.order, args.format)
        return EXIT_SUCCESS
    if args.command == 'table':
        radius = kernel_spec(args.kernel).support_radius
        lo = -radius if args.min is None else args.min
        hi = radius if args.max is None else args.max
        cmd_table(args.kernel, lo, hi, args.step, args.include or [PHI],
                  args.format)
        return EXIT_SUCCESS
    if args.command == 'audit':
        cfg = AuditConfig(samples=args.samples, tolerance=args.tol,
                          fd_epsilons=args.fd_epsilons, seed=args.seed)
        return cmd_audit(args.kernel, cfg, args.format,
                         policy=dict(args.policy or ()))
    if args.command == 'bench':
        first = 'new6' if args.kernel == ALL else args.kernel
        cfg = BenchConfig(kernel=first, pairs=args.pairs, box=args.box,
                          meshwidth=args.meshwidth, seed=args.seed,
                          bin_width=args.bin_width,
                          max_distance=args.max_distance,
                          detrend=args.detrend, workers=args.workers)
        return cmd_bench(args.kernel, cfg, args.out_prefix, args.sensitivity,
                         args.check_reference, args.format)
    return cmd_demo(args.kernel, args.dims, args.meshwidth, args.markers,
                    args.count, args.seed, args.field_in, args.field_out,
                    args.tol, args.format)


def main(argv=None):
    """
    Entry point of the command line tool.

    :param argv: Arguments, sys.argv[1:] when None.
    :return: Exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code

    configure_logging(args.verbose, args.quiet)
    try:
        return run(args)
    except (KernelApiException, GridException, IOError) as exc:
        logger.error("%s: %s", args.command, exc)
        return EXIT_USAGE
    except IBKernelException as exc:
        logger.error("%s failed: %s", args.command, exc)
        return EXIT_CHECK_FAILURE
