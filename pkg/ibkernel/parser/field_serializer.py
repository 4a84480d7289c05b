# -*- coding: utf-8 -*-
"""
field_serializer.py - Export and import scalar fields as "i,j,k,value" CSV.
"""
import logging

import numpy as np

from ibkernel.exceptions import MarkerFormatException
from ibkernel.grid import ScalarField3
from ibkernel.parser.marker_parser import iter_rows, parse_real
from ibkernel.parser.parser import InputParser
from ibkernel.utils import format_real

logger = logging.getLogger(__name__)

FIELD_HEADER = ('i', 'j', 'k', 'value')


def serialize_field(field, output):
    """
    Write every grid point of a field, in axis-major order.

    :param field: The `ScalarField3`.
    :param output: Writable text stream.
    """
    output.write(','.join(FIELD_HEADER) + '\n')
    values = field.as_array()
    n1, n2, n3 = field.grid.dims
    for i in range(n1):
        for j in range(n2):
            for k in range(n3):
                output.write('%d,%d,%d,%s\n' % (i, j, k,
                                                format_real(values[i, j, k])))


class FieldParser(InputParser):
    """
    Parser of field files written by `serialize_field`.

    Grid points missing from the file are zero; a point given twice is an
    error.
    """

    def __init__(self, source, grid, filename=None):
        super(FieldParser, self).__init__(source, filename)
        self.grid = grid

    def parse_document(self):
        """
        Read the field.

        :return: The `ScalarField3` on self.grid.
        :raises MarkerFormatException: Malformed row, index outside the grid
                                       or repeated point.
        """
        logger.debug('Start parsing of file: %s', self.filename)
        with self.open_source() as field_file:
            return self._parse_doc(field_file)

    def _parse_doc(self, field_file):
        values = np.zeros(self.grid.dims)
        seen = np.zeros(self.grid.dims, dtype=bool)
        for line_num, fields in iter_rows(field_file):
            if tuple(f.lower() for f in fields) == FIELD_HEADER:
                continue
            if len(fields) != 4:
                raise MarkerFormatException(line_num,
                                            "expected 4 columns, got %d"
                                            % len(fields))
            try:
                index = tuple(int(f) for f in fields[:3])
            except ValueError:
                raise MarkerFormatException(line_num, "invalid grid index")
            if any(not 0 <= n < dim for n, dim in zip(index, self.grid.dims)):
                raise MarkerFormatException(line_num,
                                            "index %r outside the grid"
                                            % (index, ))
            if seen[index]:
                raise MarkerFormatException(line_num,
                                            "index %r given twice" % (index, ))
            seen[index] = True
            values[index] = parse_real(fields[3], line_num)
        return ScalarField3(self.grid, values.ravel())
