# -*- coding: utf-8 -*-
"""
test_parser.py - Unit testing of marker/field parsers and report serializers.
"""
import json
import os
import shutil
import tempfile
import unittest
from io import StringIO

import numpy as np

from ibkernel.audit import AuditConfig, audit
from ibkernel.exceptions import MarkerFormatException
from ibkernel.grid import PeriodicGrid3, ScalarField3
from ibkernel.invariance import BinnedStats, PairSamples
from ibkernel.parser.field_serializer import FieldParser, serialize_field
from ibkernel.parser.marker_parser import MarkerParser
from ibkernel.parser.report_serializer import (serialize_audit_csv,
                                               serialize_samples,
                                               serialize_stats,
                                               to_json,
                                               write_csv)


class TestMarkerParser(unittest.TestCase):

    def test_positions_only(self):
        markers, values = MarkerParser(StringIO("1,2,3\n# comment\n\n"
                                                "4.5, 5, 6e-1\n")) \
            .parse_document()
        self.assertEqual(len(markers), 2)
        self.assertIsNone(values)
        np.testing.assert_array_equal(markers.positions[1], [4.5, 5.0, 0.6])

    def test_header_and_values(self):
        markers, values = MarkerParser(StringIO("x,y,z,value\n"
                                                "0,0,0,1.5\n"
                                                "1,1,1,-2\n")) \
            .parse_document()
        self.assertEqual(len(markers), 2)
        np.testing.assert_array_equal(values, [1.5, -2.0])

    def test_empty(self):
        markers, values = MarkerParser(StringIO("")).parse_document()
        self.assertEqual(len(markers), 0)
        self.assertIsNone(values)

    def test_errors(self):
        for content in ("1,2\n",
                        "1,2,3\n1,2,3,4\n",
                        "1,2,abc\n",
                        "1,2,nan\n",
                        "1,2,3,4,5\n"):
            parser = MarkerParser(StringIO(content))
            self.assertRaises(MarkerFormatException, parser.parse_document)

    def test_error_line(self):
        parser = MarkerParser(StringIO("# markers\n1,2,3\n1,2,x\n"))
        self.assertEqual(parser.validate_document(),
                         ["line 3: invalid number 'x'"])
        self.assertIsNone(MarkerParser(StringIO("1,2,3\n"))
                          .validate_document())

    def test_validate_then_parse(self):
        parser = MarkerParser(StringIO("1,2,3,4\n5,6,7,8\n"))
        self.assertIsNone(parser.validate_document())
        markers, values = parser.parse_document()
        self.assertEqual(len(markers), 2)
        np.testing.assert_array_equal(values, [4.0, 8.0])

    def test_file(self):
        tmp_dir = tempfile.mkdtemp()
        try:
            path = os.path.join(tmp_dir, 'markers.csv')
            with open(path, 'w') as marker_file:
                marker_file.write("1,2,3,4\n")
            parser = MarkerParser(path)
            self.assertEqual(parser.filename, 'markers.csv')
            markers, values = parser.parse_document()
            self.assertEqual(len(markers), 1)
            self.assertEqual(float(values[0]), 4.0)
        finally:
            shutil.rmtree(tmp_dir)


class TestFieldSerializer(unittest.TestCase):

    def setUp(self):
        self.grid = PeriodicGrid3((2, 2, 3))

    def test_round_trip(self):
        field = ScalarField3(self.grid, np.arange(12.0) / 3.0)
        output = StringIO()
        serialize_field(field, output)
        lines = output.getvalue().splitlines()
        self.assertEqual(lines[0], 'i,j,k,value')
        self.assertEqual(lines[1], '0,0,0,0')
        self.assertEqual(lines[2], '0,0,1,0.33333333333333331')
        self.assertEqual(lines[-1], '1,1,2,3.6666666666666665')
        parsed = FieldParser(StringIO(output.getvalue()),
                             self.grid).parse_document()
        np.testing.assert_array_equal(parsed.values, field.values)

    def test_missing_points(self):
        field = FieldParser(StringIO("1,0,2,5\n"), self.grid).parse_document()
        self.assertEqual(field.as_array()[1, 0, 2], 5.0)
        self.assertEqual(field.total(), 5.0)

    def test_validate_then_parse(self):
        parser = FieldParser(StringIO("0,0,0,5\n"), self.grid)
        self.assertIsNone(parser.validate_document())
        self.assertEqual(parser.parse_document().total(), 5.0)
        self.assertEqual(parser.parse_document().total(), 5.0)

    def test_validate_twice(self):
        parser = FieldParser(StringIO("0,0,0,1\n0,0,a,1\n"), self.grid)
        self.assertEqual(parser.validate_document(),
                         ["line 2: invalid grid index"])
        self.assertEqual(parser.validate_document(),
                         ["line 2: invalid grid index"])

    def test_errors(self):
        for content in ("0,0,0\n",
                        "0,0,3,1\n",
                        "0,a,0,1\n",
                        "0,0,0,1\n0,0,0,2\n",
                        "0,0,0,inf\n"):
            parser = FieldParser(StringIO(content), self.grid)
            self.assertRaises(MarkerFormatException, parser.parse_document)
            self.assertEqual(len(parser.validate_document()), 1)


class TestReportSerializer(unittest.TestCase):

    def test_write_csv(self):
        output = StringIO()
        write_csv(('a', 'b', 'c', 'd'), [(1, 0.1, True, None),
                                         ('x', -0.0, False, 2.5)], output)
        self.assertEqual(output.getvalue(),
                         "a,b,c,d\n"
                         "1,0.10000000000000001,true,\n"
                         "x,0,false,2.5\n")

    def test_samples(self):
        output = StringIO()
        serialize_samples(PairSamples(np.array([0.5]), np.array([0.25])),
                          output)
        self.assertEqual(output.getvalue(), "distance,coupling\n0.5,0.25\n")

    def test_stats(self):
        stats = BinnedStats(lo=np.array([0.0]), hi=np.array([0.5]),
                            count=np.array([0]), min=np.array([np.nan]),
                            mean=np.array([np.nan]), max=np.array([np.nan]),
                            std=np.array([np.nan]))
        output = StringIO()
        serialize_stats(stats, output)
        self.assertEqual(output.getvalue(),
                         "bin_lo,bin_hi,count,min,mean,max,std\n"
                         "0,0.5,0,nan,nan,nan,nan\n")

    def test_audit_csv(self):
        report = audit('std4', AuditConfig(samples=50))
        output = StringIO()
        serialize_audit_csv([report], output)
        lines = output.getvalue().splitlines()
        self.assertEqual(lines[0], "kernel,check,expected,observed,"
                                   "max_violation,value,matches")
        self.assertEqual(len(lines), len(report.conditions) + 1)
        self.assertTrue(lines[1].startswith("std4,even_odd,true,true,"))

    def test_json(self):
        content = to_json({'kernel': 'new6', 'values': (1, np.float64(0.5)),
                           'flag': np.bool_(True), 'missing': float('inf')})
        self.assertEqual(json.loads(content), {'flag': True,
                                               'kernel': 'new6',
                                               'missing': None,
                                               'values': [1, 0.5]})
        self.assertEqual(to_json([0.1]), '[\n  0.1\n]')


if __name__ == '__main__':
    unittest.main()
