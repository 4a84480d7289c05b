# -*- coding: utf-8 -*-
"""
marker_parser.py - Parse a marker file, one "x,y,z[,value]" row per line.
"""
import csv
import logging
import math

import numpy as np

from ibkernel.exceptions import MarkerFormatException
from ibkernel.grid import MarkerSet
from ibkernel.parser.parser import InputParser

logger = logging.getLogger(__name__)

MARKER_HEADER = ('x', 'y', 'z')
VALUE_HEADER = MARKER_HEADER + ('value', )


def iter_rows(stream):
    """
    Iterate on the CSV rows of a stream, skipping blank and comment lines.

    :return: Iterator of (line number, list of stripped fields).
    """
    for line_num, line in enumerate(stream, start=1):
        line = line.strip()
        if len(line) == 0 or line[0] == '#':
            continue
        fields = next(csv.reader([line]))
        yield line_num, [f.strip() for f in fields]


def parse_real(text, line_num):
    """
    Convert a field to a finite real.

    :raises MarkerFormatException: Not a finite real.
    """
    try:
        value = float(text)
    except ValueError:
        raise MarkerFormatException(line_num, "invalid number '%s'" % text)
    if not math.isfinite(value):
        raise MarkerFormatException(line_num, "non-finite number '%s'" % text)
    return value


class MarkerParser(InputParser):
    """
    Parser of marker files.

    Each row holds the coordinates of one marker and optionally the value it
    carries; all rows must have the same number of columns. An optional
    header row "x,y,z[,value]" is accepted.
    """

    def parse_document(self):
        """
        Read the markers.

        :return: Tuple (`MarkerSet`, values) where values is an array, or
                 None when the file has no value column.
        :raises MarkerFormatException: Malformed row.
        """
        logger.debug('Start parsing of file: %s', self.filename)
        with self.open_source() as marker_file:
            return self._parse_doc(marker_file)

    def _parse_doc(self, marker_file):
        columns = None
        positions = []
        values = []
        for line_num, fields in iter_rows(marker_file):
            if columns is None and tuple(f.lower() for f in fields) in \
                    (MARKER_HEADER, VALUE_HEADER):
                columns = len(fields)
                continue
            if len(fields) not in (3, 4):
                raise MarkerFormatException(line_num,
                                            "expected 3 or 4 columns, got %d"
                                            % len(fields))
            if columns is None:
                columns = len(fields)
            elif len(fields) != columns:
                raise MarkerFormatException(line_num,
                                            "expected %d columns, got %d"
                                            % (columns, len(fields)))
            reals = [parse_real(f, line_num) for f in fields]
            positions.append(reals[:3])
            if columns == 4:
                values.append(reals[3])

        logger.debug('Read %d markers from %s', len(positions), self.filename)
        markers = MarkerSet(np.array(positions, dtype=np.float64))
        if columns == 4:
            return markers, np.array(values, dtype=np.float64)
        return markers, None
