"""Unit tests for verifier.py and the oracles it relies on."""


import io
import unittest

from gpspec.algebra import BaseRing, Ideal, enumerate_graded_submodules
from gpspec.corpus import Corpus, named_instance
from gpspec.dsl import Model
from gpspec.oracles import *
from gpspec.verifier import *
from gpspec.workflow import Settings, Workflow


class OracleCase(unittest.TestCase):
    
    def test_radical(self):
        R = BaseRing(12)
        self.assertEqual(radical_exhaustive(Ideal(R, 4)), Ideal(R, 2))
        self.assertEqual(radical_exhaustive(Ideal(R, 0)), Ideal(R, 6))
    
    def test_z8_points(self):
        z8 = named_instance('z8')
        M = z8.module
        for name in ('Z', 'F', 'T'):
            N = z8.submodule(name)
            self.assertTrue(is_primary_exhaustive(N, M), name)
        self.assertTrue(is_prime_exhaustive(z8.submodule('T'), M))
        self.assertFalse(is_prime_exhaustive(z8.submodule('F'), M))
    
    def test_lattice_size(self):
        M = Model.build([2], 0, [(2, (0,)), (2, (1,))]).module
        subs = graded_subgroups_exhaustive(M)
        # Homogeneous subgroups of Z2 x Z2 with distinct degrees.
        self.assertEqual(len(subs), 4)
        self.assertEqual(len(enumerate_graded_submodules(M)), 4)


class VerifierCase(unittest.TestCase):
    
    def make_workflow(self):
        self.out = io.StringIO()
        return Workflow(Settings(), fout=self.out, ferr=io.StringIO())
    
    def test_agrees(self):
        models = [named_instance(iid) for iid in ('z', 'z6', 'z8')]
        models += [m for m in Corpus(self.make_workflow()).models()
                   if m.name.startswith('z2xz')]
        verifier = OracleVerifier(self.make_workflow(), models)
        self.assertTrue(verifier.run())
        self.assertEqual(self.out.getvalue(),
                         'Output agrees on all instances.\n')
    
    def test_verify_model(self):
        verifier = OracleVerifier(self.make_workflow(), [])
        for n in (4, 12, 30):
            model = Model.build([2], n, [(n, (0,))], name='zmod{}'.format(n))
            self.assertIsNone(verifier.verify_model(model))
    
    def test_disagreement(self):
        class Broken(OracleVerifier):
            def verify_radicals(self):
                return 'radical of (0) in Z2'
        
        verifier = Broken(self.make_workflow(), [named_instance('z6')])
        self.assertFalse(verifier.run())
        self.assertEqual(self.out.getvalue(),
                         'Output disagrees for radical of (0) in Z2\n')


if __name__ == '__main__':
    unittest.main()
