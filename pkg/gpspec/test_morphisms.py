"""Unit tests for morphisms.py."""


import unittest

from gpspec.errors import ModuleMismatch, UnsupportedMorphism
from gpspec.algebra import (GradingGroup, BaseRing, GradedModule,
                            GradedSubmodule, submodule_from_generators,
                            enumerate_graded_submodules)
from gpspec.morphisms import *


Z2 = GradingGroup([2])


class MorphismCase(unittest.TestCase):
    
    def setUp(self):
        self.M = GradedModule(BaseRing(0), Z2, [(4, 0), (6, 0), (3, 1)])
    
    def test_projection_target(self):
        M = self.M
        K = submodule_from_generators([(2, 0, 0)], M)
        Q, f = quotient_module(M, K)
        # Z4 x Z6 / <(2,0)> is Z2 x Z6; the degree 1 part is untouched.
        self.assertEqual(Q.size, M.size // 2)
        self.assertEqual(sorted(o for o, _d in Q.factors), [2, 3, 6])
        self.assertEqual(f.kernel(), K)
        self.assertEqual(f.preimage(GradedSubmodule.zero(Q)), K)
    
    def test_projection_homomorphism(self):
        M = self.M
        K = submodule_from_generators([(1, 3, 0)], M)
        f = Projection(M, K)
        for x in M.homogeneous_elements((0,)):
            y = f(x)
            self.assertEqual(y.is_zero, K.contains_element(x))
            self.assertEqual(f(x + x), y + y)
    
    def test_preimage_image(self):
        M = self.M
        K = submodule_from_generators([(0, 3, 0)], M)
        f = Projection(M, K)
        for N in enumerate_graded_submodules(f.target):
            self.assertEqual(f.image(f.preimage(N)), N)
        for N in enumerate_graded_submodules(M):
            self.assertTrue(f.preimage(f.image(N)).contains(N))
            self.assertEqual(f.preimage(f.image(N)), N + K)
    
    def test_zero_kernel_is_isomorphism(self):
        M = GradedModule(BaseRing(0), Z2, [(6, 0), (4, 0)])
        f = Projection(M, GradedSubmodule.zero(M))
        self.assertEqual(f.target.size, M.size)
        self.assertTrue(f.kernel().is_zero())
    
    def test_factor_permutation(self):
        M = self.M
        f = FactorPermutation(M, (2, 0, 1))
        self.assertEqual(f.target.factors,
                         (M.factors[1], M.factors[2], M.factors[0]))
        x = M.element((1, 2, 1))
        self.assertEqual(f(x).coords, (2, 1, 1))
        for N in enumerate_graded_submodules(f.target):
            self.assertEqual(f.image(f.preimage(N)), N)
        with self.assertRaises(UnsupportedMorphism):
            FactorPermutation(M, (0, 0, 1))
        ident = identity_morphism(M)
        self.assertEqual(ident(x), x)
    
    def test_composite(self):
        M = self.M
        K = submodule_from_generators([(2, 0, 0)], M)
        f = Projection(M, K)
        g = identity_morphism(f.target)
        h = f.then(g)
        check_supported(h)
        self.assertEqual(h.kernel(), K)
        with self.assertRaises(ModuleMismatch):
            g.then(f)
        with self.assertRaises(UnsupportedMorphism):
            check_supported(GradedMorphism())


if __name__ == '__main__':
    unittest.main()
