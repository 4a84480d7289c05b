# -*- coding: utf-8 -*-
"""
utils - List of utility functions for tools.
"""
import contextlib
import io
import logging
import sys

from ibkernel.core import ALL_KERNELS

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2

OUTPUT_FORMATS = ('csv', 'json')
KERNEL_NAMES = tuple(str(k) for k in ALL_KERNELS)
ALL = 'all'


def configure_logging(verbose=False, quiet=False):
    """
    Send logs to stderr; data goes to stdout or files.

    :param verbose: Log at DEBUG level.
    :param quiet: Disable logging (CRITICAL only).
    """
    log_level = logging.DEBUG if verbose else logging.INFO
    if quiet:
        log_level = logging.CRITICAL
    logging.basicConfig(stream=sys.stderr, level=log_level,
                        format="%(levelname)s:%(name)s [%(filename)s:%(lineno)s] %(message)s")


def write_output(s, output=None):
    """
    Write a text block followed by a newline.

    :param s: The text.
    :param output: Writable text stream, stdout when None.
    """
    output = output if output is not None else sys.stdout
    output.write(s)
    if not s.endswith('\n'):
        output.write('\n')


@contextlib.contextmanager
def open_output(path, output=None):
    """
    Open an output file, or fall back to a stream when path is None or "-".

    :param path: File path, None or "-".
    :param output: Stream used when there is no path, stdout when None.
    """
    if path is None or path == '-':
        yield output if output is not None else sys.stdout
    else:
        with io.open(path, 'w', encoding='utf-8', newline='\n') as out:
            yield out


def parse_kernels(name):
    """
    Expand a kernel argument, "all" meaning every kernel in table order.

    >>> parse_kernels('all')
    ['std3', 'std4', 'std6', 'new6']
    >>> parse_kernels('std4')
    ['std4']
    """
    if name == ALL:
        return list(KERNEL_NAMES)
    return [name]
