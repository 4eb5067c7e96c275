"""Unit tests for topology.py."""


import unittest

from gpspec.errors import ModuleMismatch, NotMaterializable
from gpspec.algebra import (GradingGroup, BaseRing, GradedModule, Ideal,
                            GradedSubmodule, submodule_from_generators)
from gpspec.topology import *


Z2 = GradingGroup([2])


def cyclic(n):
    return GradedModule(BaseRing(n), Z2, [(n, 0)])


class SpaceCase(unittest.TestCase):
    
    def test_point_sets(self):
        space = build_space(cyclic(12))
        a, b = space.singleton(0), space.singleton(1)
        self.assertEqual(len(a | b), 2)
        self.assertTrue((a & b).is_empty)
        self.assertEqual((a | b) - b, a)
        self.assertEqual(a.complement().complement(), a)
        self.assertTrue(a <= a | b)
        self.assertEqual(space.full().indices(), list(range(space.size)))
    
    def test_z8_trivial(self):
        space = build_space(cyclic(8))
        self.assertEqual(space.size, 3)
        self.assertEqual(space.closed_masks, [0, space.full_mask])
        report = analyze(space)
        self.assertTrue(report.trivial_topology)
        self.assertTrue(report.irreducible)
        self.assertFalse(report.T0)
        self.assertFalse(report.spectral)
        self.assertEqual(len(report.components), 1)
        self.assertEqual(report.components[0][1], [0, 1, 2])
    
    def test_z6_discrete(self):
        M = cyclic(6)
        space = build_space(M)
        report = analyze(space)
        self.assertTrue(report.T1)
        self.assertTrue(report.spectral)
        self.assertFalse(report.connected)
        self.assertFalse(report.irreducible)
        self.assertEqual(len(report.components), 2)
        zero = GradedSubmodule.zero(M)
        self.assertEqual(variety(zero, M, 'nu', space), space.full())
    
    def test_varieties(self):
        M = cyclic(12)
        space = build_space(M)
        N = submodule_from_generators([(4,)], M)
        nu = variety(N, M, 'nu', space)
        # 4Z12 lies under the primes over (2) only.
        for i in nu:
            self.assertEqual(space.radical_colons[i], Ideal(M.ring, 2))
        nu_star = variety(N, M, 'nu_star', space)
        self.assertTrue(nu_star <= nu)
        with self.assertRaises(ModuleMismatch):
            variety(N, M, 'V', space)
        with self.assertRaises(ValueError):
            variety(N, M, 'W', space)
        for Q in space.points:
            self.assertEqual(point_in_variety(N, Q, M, 'nu'),
                             space.index[Q] in nu)
    
    def test_base_and_ring_space(self):
        M = cyclic(12)
        space = build_space(M)
        self.assertEqual(base_open_S(1, space), space.full())
        self.assertTrue(base_open_S(0, space).is_empty)
        for _r, U in space.base:
            self.assertTrue(space.is_open(U))
        ring = build_ring_space(BaseRing(12))
        self.assertEqual([p.generator for p in ring.points], [2, 3])
        self.assertEqual(ring_basic_open(3, ring), ring.singleton(0))
        self.assertEqual(ring_variety(Ideal(ring.ring, 6), ring), ring.full())
        self.assertEqual(ring_variety(Ideal(ring.ring, 1), ring),
                         ring.empty())
        with self.assertRaises(NotMaterializable):
            build_ring_space(BaseRing(0))
    
    def test_closure(self):
        M = GradedModule(BaseRing(0), Z2, [(2, 0), (4, 1)])
        space = build_space(M)
        for mask in range(space.full_mask + 1):
            Y = PointSet(space, mask)
            C = closure(Y)
            self.assertEqual(C, lattice_closure(Y))
            self.assertTrue(space.is_closed(C))
            self.assertTrue(Y <= C)
        self.assertEqual(eta(space.empty()), GradedSubmodule.full(M))
        ring = build_ring_space(BaseRing(6))
        self.assertTrue(gamma(ring.empty()).is_unit)
    
    def test_irreducibility(self):
        space = build_space(cyclic(6))
        self.assertFalse(is_irreducible(space.empty()))
        self.assertTrue(is_irreducible(space.singleton(0)))
        self.assertFalse(is_irreducible(space.full()))
        self.assertEqual(generic_points(space.singleton(1)), [1])
        self.assertEqual(irreducible_components(space),
                         [space.singleton(0), space.singleton(1)])
    
    def test_subcover(self):
        space = build_space(cyclic(6))
        cover = [space.singleton(0), space.singleton(1)]
        self.assertEqual(len(quasi_compact_subcover(space.full(), cover)),
                         2)
        self.assertIsNone(quasi_compact_subcover(space.full(), cover[:1]))
        self.assertEqual(quasi_compact_subcover(space.empty(), []), [])
    
    def test_specialization(self):
        space = build_space(cyclic(8))
        S = specialization_matrix(space)
        self.assertTrue(S.all())
    
    def test_top_modules(self):
        self.assertTrue(is_primary_G_top(cyclic(12)).is_true)
        self.assertTrue(is_G_top(cyclic(12)).is_true)
        # Z2 x Z2 in one degree: nu*(N) u nu*(N') need not be a variety.
        M = GradedModule(BaseRing(0), Z2, [(2, 0), (2, 0)])
        t = is_primary_G_top(M)
        self.assertTrue(t.is_false)
        self.assertIn('N2', t.witness)
        ZZ = GradedModule(BaseRing(0), Z2, [(0, 0), (0, 1)])
        self.assertTrue(is_primary_G_top(ZZ).is_unknown)
    
    def test_point_index_map(self):
        M = cyclic(8)
        ps = build_space(M, PRIMARY_SPECTRUM)
        spec = build_space(M, PRIME_SPECTRUM)
        self.assertEqual(point_index_map(spec, ps), [2])
        self.assertEqual(point_index_map(ps, spec), [None, None, 0])


if __name__ == '__main__':
    unittest.main()
