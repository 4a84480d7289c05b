# -*- coding: utf-8 -*-
"""
demo.py - Spreading and interpolation round trip on a periodic grid.
"""
import logging
import sys

import numpy as np

from ibkernel.core import KernelId
from ibkernel.grid import MarkerSet, PeriodicGrid3, ScalarField3, \
    interpolate, spread
from ibkernel.parser.field_serializer import FieldParser, serialize_field
from ibkernel.parser.marker_parser import MarkerParser
from ibkernel.parser.report_serializer import to_json, write_csv
from ibkernel.tools.utils import (EXIT_CHECK_FAILURE,
                                  EXIT_SUCCESS,
                                  open_output,
                                  write_output)

logger = logging.getLogger(__name__)

DEFAULT_MARKERS = 16
DEFAULT_RESIDUAL_TOLERANCE = 1e-11


def random_markers(grid, count, rng):
    """
    Markers uniform in the periodic box, carrying standard normal values.
    """
    extent = np.array(grid.dims, dtype=np.float64) * grid.meshwidth
    positions = rng.random((count, 3)) * extent
    return MarkerSet(positions), rng.standard_normal(count)


def round_trip(kernel, grid, markers, values, field):
    """
    Spread marker values, interpolate a field and measure the identities
    relating both operators.

    :param field: `ScalarField3` interpolated at the markers.
    :return: Tuple (report dict, spread field, interpolated values).
    """
    spread_field = spread(kernel, grid, markers, values)
    interpolated = interpolate(kernel, grid, field, markers)
    h3 = grid.meshwidth ** 3
    eulerian = float(np.dot(spread_field.values, field.values)) * h3
    lagrangian = float(np.dot(values, interpolated))
    report = {
        'kernel': str(kernel),
        'dims': list(grid.dims),
        'meshwidth': grid.meshwidth,
        'markers': len(markers),
        'adjointness_residual': abs(eulerian - lagrangian),
        'conservation_residual': abs(spread_field.total()
                                     - float(np.sum(values))),
    }
    return report, spread_field, interpolated


def cmd_demo(kernel, dims, meshwidth=1.0, marker_file=None,
             count=DEFAULT_MARKERS, seed=0, field_in=None, field_out=None,
             tolerance=DEFAULT_RESIDUAL_TOLERANCE, fmt='json', output=None):
    """
    Run the spreading and interpolation round trip.

    Markers come from marker_file, or are drawn at random. Markers without
    values, and the field when field_in is not given, get random values.

    :return: Exit code, failure when a residual exceeds the tolerance.
    """
    kernel = KernelId.from_name(kernel)
    grid = PeriodicGrid3(dims, meshwidth)
    grid.check_kernel(kernel)
    rng = np.random.default_rng(seed)

    if marker_file is not None:
        markers, values = MarkerParser(marker_file).parse_document()
        if values is None:
            values = rng.standard_normal(len(markers))
    else:
        markers, values = random_markers(grid, count, rng)

    if field_in is not None:
        field = FieldParser(field_in, grid).parse_document()
    else:
        field = ScalarField3(grid, rng.standard_normal(grid.size))

    report, spread_field, _ = round_trip(kernel, grid, markers, values, field)
    if field_out is not None:
        with open_output(field_out) as out:
            serialize_field(spread_field, out)

    if fmt == 'csv':
        rows = [(key, 'x'.join(str(n) for n in value) if key == 'dims'
                 else value) for key, value in sorted(report.items())]
        write_csv(('key', 'value'), rows,
                  output if output is not None else sys.stdout)
    else:
        write_output(to_json(report), output)

    worst = max(report['adjointness_residual'],
                report['conservation_residual'])
    if worst > tolerance:
        logger.error("Residual %g above tolerance %g", worst, tolerance)
        return EXIT_CHECK_FAILURE
    return EXIT_SUCCESS
