"""Unit tests for structure.py."""


import unittest

from gpspec.errors import NotMaterializable, ModuleMismatch
from gpspec.algebra import (GradingGroup, BaseRing, GradedModule, Ideal,
                            GradedSubmodule, submodule_from_generators)
from gpspec.morphisms import Projection, FactorPermutation
from gpspec.topology import build_space
from gpspec.structure import *


Z2 = GradingGroup([2])


def cyclic(n):
    return GradedModule(BaseRing(n), Z2, [(n, 0)])


class ReducedRingCase(unittest.TestCase):
    
    def test_reduced_ring(self):
        M = GradedModule(BaseRing(0), Z2, [(4, 0), (6, 1)])
        reduced = ReducedRing(M)
        self.assertEqual(reduced.ring, BaseRing(12))
        self.assertFalse(reduced.lazy)
        self.assertEqual(reduced.project(Ideal(M.ring, 4)),
                         Ideal(BaseRing(12), 4))
        self.assertEqual(reduced.lift(Ideal(BaseRing(12), 3)),
                         Ideal(M.ring, 3))
        with self.assertRaises(ValueError):
            reduced.project(Ideal(M.ring, 5))
        self.assertEqual(len(reduced.ideals_over_annihilator()), 6)
        lazy = ReducedRing(GradedModule(BaseRing(0), Z2, [(0, 0)]))
        self.assertTrue(lazy.lazy)
        with self.assertRaises(NotMaterializable):
            lazy.ideals_over_annihilator()
    
    def test_pointwise_maps(self):
        M = GradedModule(BaseRing(0), Z2, [(0, 0)])
        Q = submodule_from_generators([(8,)], M)
        self.assertEqual(rho(Q, M), Ideal(BaseRing(0), 2))
        P = GradedSubmodule.zero(M)
        self.assertEqual(phi(P, M), Ideal(BaseRing(0), 0))


class MapCase(unittest.TestCase):
    
    def test_rho_z8(self):
        a = analyze_map(cyclic(8), 'rho')
        self.assertTrue(a.surjective.is_true)
        self.assertTrue(a.injective.is_false)
        self.assertTrue(a.continuous)
        self.assertTrue(a.image_identities.is_true)
        self.assertFalse(a.homeomorphism)
        (p, fiber), = a.fibers.items()
        self.assertEqual(p.generator, 2)
        self.assertEqual(len(fiber), 3)
    
    def test_rho_z6(self):
        a = analyze_map(cyclic(6), 'rho')
        self.assertTrue(a.injective.is_true)
        self.assertTrue(a.surjective.is_true)
        self.assertTrue(a.homeomorphism)
        self.assertTrue(a.open_closed.is_true)
        Y = a.domain.full()
        self.assertEqual(a.image_of(Y), a.codomain.full())
        self.assertEqual(a.preimage_of(a.codomain.empty()),
                         a.domain.empty())
        self.assertEqual([p.generator for p in a.images], [3, 2])
    
    def test_phi(self):
        a = analyze_map(cyclic(12), 'phi')
        self.assertTrue(a.injective.is_true)
        self.assertTrue(a.surjective.is_true)
        with self.assertRaises(ValueError):
            analyze_map(cyclic(12), 'psi')
    
    def test_reduced_ring_regimes(self):
        # A torsion module over Z reduces to a finite ring; a free factor
        # leaves Z, which has no finite spectrum.
        M = GradedModule(BaseRing(0), Z2, [(4, 0)])
        a = analyze_map(M, 'rho')
        self.assertTrue(a.surjective.is_true)
        M = GradedModule(BaseRing(0), Z2, [(0, 0)])
        with self.assertRaises(NotMaterializable):
            analyze_map(M, 'rho')


class InducedMapCase(unittest.TestCase):
    
    def test_projection(self):
        M = cyclic(12)
        K = submodule_from_generators([(6,)], M)
        f = Projection(M, K)
        pi = InducedMap(f)
        self.assertEqual(pi.source, f.target)
        self.assertEqual(pi.target, M)
        a = pi.analyze()
        self.assertTrue(a.injective.is_true)
        self.assertTrue(a.continuous)
        # PS(Z6) = {3Z6, 2Z6} lands on 3Z12 and 2Z12.
        self.assertEqual(sorted(Q.describe() for Q in a.images),
                         ['2Z12', '3Z12'])
        Q = submodule_from_generators([(2,)], M)
        self.assertEqual(pi.image(Q), f.image(Q))
        with self.assertRaises(ValueError):
            pi.image(submodule_from_generators([(4,)], M))
        with self.assertRaises(ModuleMismatch):
            pi.image(GradedSubmodule.zero(cyclic(6)))
    
    def test_isomorphism(self):
        M = GradedModule(BaseRing(0), Z2, [(2, 0), (3, 1)])
        f = FactorPermutation(M, (1, 0))
        a = induced_pi(f).analyze()
        self.assertTrue(a.homeomorphism)
        space = build_space(M)
        self.assertEqual(a.codomain.points, space.points)


if __name__ == '__main__':
    unittest.main()
