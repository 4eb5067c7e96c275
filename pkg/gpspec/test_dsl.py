"""Unit tests for dsl.py."""


import os
import unittest

from gpspec.errors import ParseError
from gpspec.algebra import GradedSubmodule
from gpspec.corpus import Corpus
from gpspec.dsl import *
from gpspec.workflow import Workflow


MODELS_DIR = os.path.join(os.path.dirname(os.path.dirname(
                          os.path.abspath(__file__))), 'models')


ZXZ = '''
# Z x Z over Z
group = Z2
ring = Z
module = Z@0 x Z@1
submodule N = (4,0)
submodule N2 = (0,4)   # second coordinate
submodule P = 0
subset Y = {N, P, N}
'''


class ParseCase(unittest.TestCase):
    
    def test_parse(self):
        m = parse_model(ZXZ, 'zxz')
        self.assertEqual(m.name, 'zxz')
        self.assertEqual(m.ring.modulus, 0)
        self.assertEqual(m.module.rank, 2)
        self.assertEqual(list(m.submodules), ['N', 'N2', 'P'])
        self.assertEqual(m.submodule('P'), GradedSubmodule.zero(m.module))
        self.assertEqual(m.subsets['Y'], ['N', 'P'])
        with self.assertRaises(KeyError):
            m.submodule('Q')
    
    def test_canonical_text(self):
        m = parse_model(ZXZ)
        text = model_text(m)
        self.assertEqual(text.splitlines()[:3],
                         ['group = Z2', 'ring = Z', 'module = Z@0 x Z@1'])
        self.assertEqual(parse_model(text), m)
        self.assertEqual(model_text(parse_model(text)), text)
    
    def test_tuple_degrees(self):
        m = parse_model('group = Z2 x Z2\nring = Z4\n'
                        'module = Z4@(0,1) x Z2@(1,1)\n'
                        'submodule A = (2,1)\n')
        self.assertEqual(m.module.factors, ((4, (0, 1)), (2, (1, 1))))
        self.assertEqual(m.submodule('A').cardinality(), 4)
    
    def assertParseError(self, text, line, column):
        with self.assertRaises(ParseError) as cm:
            parse_model(text)
        self.assertEqual((cm.exception.line, cm.exception.column),
                         (line, column))
        return cm.exception
    
    def test_errors(self):
        self.assertParseError('ring = Z\n', 1, 1)
        self.assertParseError('group = Z2\nring = Z6\nmodule = Z4@0\n',
                              3, 10)
        self.assertParseError('group = Z2\nring = Z6\nmodule = Z@0\n',
                              3, 10)
        self.assertParseError('group = Z2\nring = Z\nmodule = Z@2\n', 3, 12)
        self.assertParseError('group = Z2\nring = Z\nmodule = Z@0\n'
                              'submodule N = (1,2)\n', 4, 15)
        self.assertParseError('group = Z2\nring = Z\nmodule = Z@0\n'
                              'subset Y = {N}\n', 4, 13)
        self.assertParseError('group = Z2\nring = Z\nmodule = Z@0\n'
                              'submodule N = (1)\nsubmodule N = (2)\n',
                              5, 11)
        e = self.assertParseError('group = Z2\nring = Z $\n', 2, 10)
        self.assertEqual(e.token, '$')
        self.assertParseError('group = Z2\nring = Z\n', 3, 1)
        self.assertParseError('frobnicate = 3\n', 1, 1)
    
    def test_integer_bound(self):
        head = 'group = Z2\nring = Z\nmodule = Z@0\n'
        e = self.assertParseError(head + 'submodule N = (4294967296)\n',
                                  4, 16)
        self.assertEqual(e.message, 'integer exceeds 2^31')
        self.assertEqual(e.token, '4294967296')
        self.assertParseError(head + 'submodule N = (-2147483648)\n', 4, 16)
        self.assertParseError('group = Z2\nring = Z2147483648\n', 2, 8)
        self.assertParseError('group = Z2\nring = Z\n'
                              'module = Z4294967296@0\n', 3, 10)
        m = parse_model(head + 'submodule N = (2147483647)\n')
        self.assertTrue(m.submodule('N').is_proper())
    
    def test_format_vector(self):
        self.assertEqual(format_vector((4, 0)), '(4,0)')
        self.assertEqual(format_vector((-1,)), '(-1)')
    
    def test_model_files(self):
        for fn in sorted(os.listdir(MODELS_DIR)):
            m = read_model(os.path.join(MODELS_DIR, fn))
            self.assertEqual(m.name, fn[:-len('.gps')])
            self.assertEqual(parse_model(model_text(m)), m)
    
    def test_corpus_round_trip(self):
        for m in Corpus(Workflow()).models():
            self.assertEqual(parse_model(model_text(m)), m, m.name)


if __name__ == '__main__':
    unittest.main()
