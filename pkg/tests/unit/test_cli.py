# -*- coding: utf-8 -*-
"""
test_cli.py - Unit testing of the command line tool.
"""
import io
import json
import os
import shutil
import tempfile
import unittest
from io import StringIO
from unittest import mock

from ibkernel.grid import MarkerSet, PeriodicGrid3, ScalarField3
from ibkernel.tools.bench import output_paths
from ibkernel.tools.cli import main
from ibkernel.tools.demo import round_trip


def run_cli(*argv):
    """
    Run the CLI, returning (exit code, stdout content).
    """
    with mock.patch('sys.stdout', new_callable=StringIO) as stdout, \
            mock.patch('sys.stderr', new_callable=StringIO):
        code = main(['-q'] + list(argv))
    return code, stdout.getvalue()


class TestEval(unittest.TestCase):

    def test_values(self):
        self.assertEqual(run_cli('eval', '--kernel', 'std4', '--r', '0'),
                         (0, '0.5\n'))
        self.assertEqual(run_cli('eval', '--kernel', 'new6', '--r', '3'),
                         (0, '0\n'))
        self.assertEqual(run_cli('eval', '--kernel', 'new6', '--r', '0',
                                 '--order', '1'),
                         (0, '0\n'))

    def test_json(self):
        code, out = run_cli('eval', '--kernel', 'std4', '--r', '-1',
                            '--format', 'json')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), {'kernel': 'std4', 'order': 0,
                                           'r': -1.0, 'value': 0.25})

    def test_usage_errors(self):
        self.assertEqual(run_cli('eval', '--kernel', 'std4', '--r', '0',
                                 '--order', '2')[0], 2)
        self.assertEqual(run_cli('eval', '--kernel', 'gauss', '--r', '0')[0],
                         2)
        self.assertEqual(run_cli('eval', '--kernel', 'std4')[0], 2)
        self.assertEqual(run_cli()[0], 2)


class TestTable(unittest.TestCase):

    def test_default_range(self):
        code, out = run_cli('table', '--kernel', 'new6')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'r,phi')
        self.assertEqual(len(lines), 602)
        self.assertEqual(lines[1], '-3,0')
        self.assertTrue(lines[301].startswith('0,0.446481226'))
        self.assertEqual(lines[-1], '3,0')

    def test_columns(self):
        code, out = run_cli('table', '--kernel', 'new6', '--min', '0',
                            '--max', '1', '--step', '0.5',
                            '--include', 'derivatives', '--include',
                            'gaussian')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'r,phi,d1,d2,d3,gauss')
        self.assertEqual(len(lines), 4)
        code, out = run_cli('table', '--kernel', 'std4', '--min', '0',
                            '--max', '1', '--include', 'derivatives')
        self.assertEqual(out.splitlines()[0], 'r,phi,d1')

    def test_invalid_range(self):
        self.assertEqual(run_cli('table', '--kernel', 'std3', '--min', '1',
                                 '--max', '0')[0], 2)
        self.assertEqual(run_cli('table', '--kernel', 'std3', '--step',
                                 '0')[0], 2)


class TestAudit(unittest.TestCase):

    def test_single_kernel(self):
        code, out = run_cli('audit', '--kernel', 'new6', '--samples', '100')
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report['kernel'], 'new6')
        self.assertEqual(report['verdict'], 'PASS')
        self.assertEqual(report['smoothness_class'], 3)

    def test_csv(self):
        code, out = run_cli('audit', '--kernel', 'std3', '--samples', '100',
                            '--format', 'csv')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('kernel,check,expected,observed,'))

    def test_invalid_epsilons(self):
        self.assertEqual(run_cli('audit', '--kernel', 'std4',
                                 '--fd-epsilons', '0.01,0.1')[0], 2)
        self.assertEqual(run_cli('audit', '--fd-epsilons', 'a,b')[0], 2)

    @mock.patch('ibkernel.audit.positivity.SPECIAL_K_TOLERANCE', 1.0)
    def test_policy(self):
        code, out = run_cli('audit', '--kernel', 'std6', '--samples', '100')
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)['verdict'], 'WARN')
        code, out = run_cli('audit', '--kernel', 'std6', '--samples', '100',
                            '--policy', 'special_k=ignore')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['verdict'], 'PASS')

    def test_invalid_policy(self):
        self.assertEqual(run_cli('audit', '--policy', 'unknown=ERROR')[0], 2)
        self.assertEqual(run_cli('audit', '--policy', 'special_k=LOUD')[0],
                         2)


class TestBench(unittest.TestCase):

    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    def test_files_are_deterministic(self):
        contents = []
        for run in ('a', 'b'):
            prefix = os.path.join(self.tmp_dir, run)
            code, out = run_cli('bench', '--kernel', 'std4', '--pairs', '300',
                                '--sensitivity', '0.1,0.2',
                                '--out-prefix', prefix)
            self.assertEqual(code, 0)
            self.assertEqual(out, '')
            files = []
            for path in output_paths(prefix):
                with io.open(path, encoding='utf-8') as f:
                    files.append(f.read())
            contents.append(files)
        self.assertEqual(contents[0], contents[1])
        samples, stats, summary = contents[0]
        self.assertEqual(samples.splitlines()[0], 'distance,coupling')
        self.assertEqual(len(samples.splitlines()), 301)
        self.assertEqual(len(stats.splitlines()), 61)
        result = json.loads(summary)
        self.assertEqual(result['kernel'], 'std4')
        self.assertEqual(len(result['sensitivity']), 2)

    def test_stdout(self):
        code, out = run_cli('bench', '--kernel', 'new6', '--pairs', '300',
                            '--sensitivity', '', '--format', 'csv')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('bin_lo,bin_hi,count,min,mean,max,std'))

    def test_raw_bins(self):
        args = ('bench', '--kernel', 'std4', '--pairs', '300',
                '--sensitivity', '', '--format', 'csv')
        code, detrended = run_cli(*args)
        self.assertEqual(code, 0)
        code, raw = run_cli(*(args + ('--raw-bins', )))
        self.assertEqual(code, 0)
        self.assertNotEqual(raw, detrended)

    def test_invalid(self):
        self.assertEqual(run_cli('bench', '--pairs', '0')[0], 2)
        self.assertEqual(run_cli('bench', '--box', '4')[0], 2)


class TestDemo(unittest.TestCase):

    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    def test_random_markers(self):
        code, out = run_cli('demo', '--kernel', 'new6', '--dims', '8', '8',
                            '8', '--count', '5')
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report['markers'], 5)
        self.assertEqual(report['dims'], [8, 8, 8])
        self.assertLess(report['adjointness_residual'], 1e-11)

    def test_empty_marker_file(self):
        path = os.path.join(self.tmp_dir, 'markers.csv')
        with open(path, 'w') as marker_file:
            marker_file.write('x,y,z\n')
        field_path = os.path.join(self.tmp_dir, 'field.csv')
        code, out = run_cli('demo', '--kernel', 'std4', '--dims', '4', '4',
                            '4', '--markers', path, '--field-out',
                            field_path, '--format', 'csv')
        self.assertEqual(code, 0)
        self.assertIn('dims,4x4x4', out.splitlines())
        self.assertIn('markers,0', out.splitlines())
        with open(field_path) as field_file:
            lines = field_file.read().splitlines()
        self.assertEqual(len(lines), 65)
        self.assertEqual(lines[1], '0,0,0,0')

    def test_errors(self):
        missing = os.path.join(self.tmp_dir, 'missing.csv')
        self.assertEqual(run_cli('demo', '--markers', missing)[0], 2)
        self.assertEqual(run_cli('demo', '--kernel', 'new6', '--dims', '4',
                                 '8', '8')[0], 2)
        bad = os.path.join(self.tmp_dir, 'bad.csv')
        with open(bad, 'w') as marker_file:
            marker_file.write('1,2\n')
        self.assertEqual(run_cli('demo', '--markers', bad)[0], 2)

    def test_round_trip(self):
        grid = PeriodicGrid3((8, 8, 8))
        markers = MarkerSet([[1.0, 2.0, 3.0], [4.5, 6.25, 7.9]])
        field = ScalarField3(grid, [1.0] * grid.size)
        report, spread_field, interpolated = round_trip('std6', grid, markers,
                                                        [2.0, -1.0], field)
        self.assertAlmostEqual(spread_field.total(), 1.0, places=12)
        self.assertAlmostEqual(float(interpolated[0]), 1.0, places=12)
        self.assertLess(report['conservation_residual'], 1e-12)
        self.assertLess(report['adjointness_residual'], 1e-12)


if __name__ == '__main__':
    unittest.main()
