"""Unit tests for cli.py."""


import io
import json
import os
import tempfile
import unittest
from unittest import mock

from gpspec import checks
from gpspec.cli import *


MODELS_DIR = os.path.join(os.path.dirname(os.path.dirname(
                          os.path.abspath(__file__))), 'models')


def model_path(name):
    return os.path.join(MODELS_DIR, name)


class CliCase(unittest.TestCase):
    
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
    
    def tearDown(self):
        self.tmp.cleanup()
    
    def gps(self, *argv):
        fout, ferr = io.StringIO(), io.StringIO()
        code = main(list(argv), fout, ferr)
        return code, fout.getvalue(), ferr.getvalue()
    
    def write_model(self, text):
        path = os.path.join(self.tmp.name, 'model.gps')
        with open(path, 'wt') as f:
            f.write(text)
        return path
    
    def test_topology_json(self):
        code, out, err = self.gps('topology', model_path('z8.gps'),
                                  '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertTrue(data['trivial_topology'])
        self.assertEqual(err, '')
    
    def test_radical(self):
        code, out, _err = self.gps('radical', model_path('zmod.gps'),
                                   '--submodule', 'N')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, '2Z\n')
    
    def test_radical_unknown(self):
        path = self.write_model('group = Z2\nring = Z\nmodule = Z@0 x Z@0\n'
                                'submodule N = (4,0)\n')
        code, out, err = self.gps('radical', path, '--submodule', 'N')
        self.assertEqual(code, EXIT_UNKNOWN)
        self.assertEqual(out, '')
        self.assertTrue(err.startswith('gps: graded radical unknown'))
    
    def test_bad_input(self):
        path = self.write_model('group = Z2\nring = Z\nmodule = Z@@0\n')
        code, out, err = self.gps('parse', path)
        self.assertEqual(code, EXIT_INPUT)
        self.assertEqual(out, '')
        self.assertTrue(err.startswith('gps: '))
        
        code, _out, _err = self.gps('frobnicate')
        self.assertEqual(code, EXIT_INPUT)
        code, _out, _err = self.gps('radical', model_path('zmod.gps'),
                                    '--submodule', 'missing')
        self.assertEqual(code, EXIT_INPUT)
        code, _out, _err = self.gps('spec', model_path('nonexistent.gps'))
        self.assertEqual(code, EXIT_INPUT)
        code, _out, err = self.gps('check', model_path('z6.gps'),
                                   '--theorem', 'T9.9')
        self.assertEqual(code, EXIT_INPUT)
        self.assertIn('T9.9', err)
    
    def test_check(self):
        code, out, _err = self.gps('check', model_path('zxz.gps'),
                                   '--theorem', 'CE2.1', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data['summary']['failed'], 0)
        self.assertEqual(data['summary']['passed'], 1)
        
        code, _out, _err = self.gps('check', model_path('z8.gps'),
                                    '--theorem', 'E3.3b', '--theorem', 'T4.11')
        self.assertEqual(code, EXIT_OK)
    
    def test_failing_check(self):
        def broken(check, ctx):
            return check.failed({'forced': True})
        with mock.patch.object(checks.PrimaryNotPrime, 'run', broken):
            code, out, _err = self.gps('check', model_path('zmod.gps'),
                                       '--theorem', 'E1', '--format', 'json')
        self.assertEqual(code, EXIT_FAILED)
        data = json.loads(out)
        self.assertEqual(data['results'][0]['counterexample'],
                         {'forced': True})
    
    def test_points_and_varieties(self):
        code, out, _err = self.gps('pspec', model_path('z8.gps'))
        self.assertEqual(code, EXIT_OK)
        for label in ('4Z8', '2Z8'):
            self.assertIn(label, out)
        code, _out, _err = self.gps('variety', model_path('z6.gps'),
                                    '--submodule', 'A', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        code, _out, _err = self.gps('rho', model_path('z6.gps'),
                                    '--space', 'spec')
        self.assertEqual(code, EXIT_OK)
        code, out, _err = self.gps('topology', model_path('z6.gps'),
                                   '--format', 'dot')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith('digraph'))
    
    def test_repeatable(self):
        for argv in (('topology', model_path('z6.gps'), '--format', 'json'),
                     ('parse', model_path('zxz.gps')),
                     ('check', model_path('z6.gps'), '--format', 'json')):
            self.assertEqual(self.gps(*argv)[1], self.gps(*argv)[1])


if __name__ == '__main__':
    unittest.main()
