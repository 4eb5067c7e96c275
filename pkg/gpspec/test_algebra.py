"""Unit tests for algebra.py."""


import unittest

from gpspec.errors import ModuleMismatch, InfiniteModule, EnumerationBound
from gpspec.algebra import *
from gpspec.oracles import (colon_exhaustive, graded_subgroups_exhaustive,
                            submodule_elements, element_orders,
                            predicted_orders)


Z2 = GradingGroup([2])


def cyclic(n):
    return GradedModule(BaseRing(n), Z2, [(n, 0)])


def pair_over_z(p, q, dp=0, dq=1):
    return GradedModule(BaseRing(0), Z2, [(p, dp), (q, dq)])


class IdealCase(unittest.TestCase):
    
    def test_canonical_generator(self):
        Z, Z12 = BaseRing(0), BaseRing(12)
        self.assertEqual(Ideal(Z, -4).generator, 4)
        self.assertEqual(Ideal(Z12, 8).generator, 4)
        self.assertEqual(Ideal(Z12, 0).generator, 12)
        self.assertTrue(Ideal(Z12, 0).is_zero)
        self.assertEqual(Ideal(Z12, 0).describe(), '(0)')
    
    def test_arithmetic(self):
        Z = BaseRing(0)
        I, J = Ideal(Z, 4), Ideal(Z, 6)
        self.assertEqual(I + J, Ideal(Z, 2))
        self.assertEqual(I * J, Ideal(Z, 24))
        self.assertEqual(I & J, Ideal(Z, 12))
        self.assertTrue(Ideal(Z, 12) <= I)
        self.assertFalse(I <= J)
        self.assertTrue(Ideal(Z, 0) < I)
        self.assertTrue(I.contains(8))
        self.assertFalse(I.contains(6))
        with self.assertRaises(ModuleMismatch):
            I + Ideal(BaseRing(6), 2)
    
    def test_radical_and_primes(self):
        Z, Z6 = BaseRing(0), BaseRing(6)
        self.assertEqual(ideal_radical(Ideal(Z, 4)), Ideal(Z, 2))
        self.assertEqual(ideal_radical(Ideal(Z, 0)), Ideal(Z, 0))
        self.assertEqual(ideal_radical(Ideal(Z6, 0)), Ideal(Z6, 0))
        self.assertTrue(Ideal(Z, 0).is_prime())
        self.assertFalse(Ideal(Z, 0).is_maximal())
        self.assertFalse(Ideal(Z6, 0).is_prime())
        self.assertFalse(Ideal(Z6, 1).is_prime())
        self.assertEqual(Z6.primes(), [Ideal(Z6, 2), Ideal(Z6, 3)])
        self.assertEqual(len(BaseRing(12).ideals()), 6)
    
    def test_units_nilpotents(self):
        Z8, Z = BaseRing(8), BaseRing(0)
        self.assertEqual([r for r in Z8.elements() if Z8.is_unit(r)],
                         [1, 3, 5, 7])
        self.assertEqual([r for r in Z8.elements() if Z8.is_nilpotent(r)],
                         [0, 2, 4, 6])
        self.assertTrue(Z.is_unit(-1))
        self.assertFalse(Z.is_nilpotent(2))


class ModuleCase(unittest.TestCase):
    
    def test_module_validation(self):
        with self.assertRaises(ValueError):
            GradedModule(BaseRing(6), Z2, [(4, 0)])
        with self.assertRaises(ValueError):
            GradedModule(BaseRing(6), Z2, [(0, 0)])
        with self.assertRaises(ValueError):
            GradedModule(BaseRing(0), Z2, [(1, 0)])
    
    def test_module_shape(self):
        M = pair_over_z(4, 0)
        self.assertFalse(M.is_finite)
        self.assertEqual(M.exponent, 0)
        self.assertEqual(M.degrees(), ((0,), (1,)))
        self.assertEqual(M.describe(), 'Z4@0 x Z@1')
        x = 3 * M.basis_element(0)
        self.assertEqual(x.coords, (3, 0))
        self.assertEqual((x + x).coords, (2, 0))
    
    def test_submodule_labels(self):
        M = cyclic(6)
        self.assertEqual(submodule_from_generators([(3,)], M).describe(),
                         '3Z6')
        self.assertEqual(GradedSubmodule.zero(M).describe(), '0')
        self.assertEqual(GradedSubmodule.full(M).describe(), 'Z6')
        N = submodule_from_generators([(4, 0)], pair_over_z(0, 0))
        self.assertEqual(N.describe(), '<(4,0)>')
    
    def test_homogeneous_generators(self):
        # A mixed generator splits into its homogeneous components.
        M = pair_over_z(2, 3)
        N = submodule_from_generators([(1, 1)], M)
        self.assertTrue(N.contains_element(M.element((1, 0))))
        self.assertTrue(N.contains_element(M.element((0, 1))))
        self.assertFalse(N.is_proper())
    
    def test_lattice_operations(self):
        M = cyclic(12)
        A = submodule_from_generators([(4,)], M)
        B = submodule_from_generators([(6,)], M)
        self.assertEqual(A + B, submodule_from_generators([(2,)], M))
        self.assertEqual(A & B, GradedSubmodule.zero(M))
        self.assertTrue(submodule_lattice(A + B, A, 'contains_submodule'))
        self.assertEqual(A.scale(Ideal(M.ring, 3)),
                         GradedSubmodule.zero(M))
        self.assertEqual(A.cardinality(), 3)
        with self.assertRaises(ValueError):
            submodule_lattice(A, B, 'union')
    
    def test_colon_and_annihilator(self):
        M = pair_over_z(4, 6, 0, 0)
        self.assertEqual(annihilator(M), Ideal(M.ring, 12))
        for N in enumerate_graded_submodules(M):
            self.assertEqual(colon_ideal(N, M), colon_exhaustive(N, M))
        M = pair_over_z(0, 4)
        N = submodule_from_generators([(2, 0), (0, 2)], M)
        self.assertEqual(colon_ideal(N, M), Ideal(M.ring, 2))
        self.assertEqual(annihilator(M), Ideal(M.ring, 0))
    
    def test_quotient_invariants(self):
        M = pair_over_z(0, 4, 0, 0)
        N = submodule_from_generators([(6, 2)], M)
        inv = quotient_invariants(M, N, 0)
        self.assertEqual(inv.free_rank, 0)
        self.assertEqual(inv.order, 24)
        self.assertEqual(inv.annihilators(M.ring)[-1].generator, 12)
    
    def test_element_orders_match_invariants(self):
        for M in (pair_over_z(2, 4, 0, 0), pair_over_z(3, 9, 0, 0),
                  cyclic(12)):
            for N in enumerate_graded_submodules(M):
                for g in M.degrees():
                    inv = N.quotient_invariants(g)
                    self.assertEqual(element_orders(M, N, g),
                                     predicted_orders(inv))
    
    def test_enumeration(self):
        self.assertEqual(len(enumerate_graded_submodules(cyclic(12))), 6)
        for M in (pair_over_z(2, 2, 0, 0), pair_over_z(4, 2, 0, 1),
                  pair_over_z(3, 9, 0, 0)):
            found = {submodule_elements(N)
                     for N in enumerate_graded_submodules(M)}
            self.assertEqual(found, set(graded_subgroups_exhaustive(M)))
        # Z2 x Z2 in one degree has five subgroups, in two degrees four.
        self.assertEqual(
            len(enumerate_graded_submodules(pair_over_z(2, 2, 0, 0))), 5)
        self.assertEqual(
            len(enumerate_graded_submodules(pair_over_z(2, 2, 0, 1))), 4)
        with self.assertRaises(InfiniteModule):
            enumerate_graded_submodules(pair_over_z(0, 2))
        with self.assertRaises(EnumerationBound):
            enumerate_graded_submodules(cyclic(36), 10)
    
    def test_graded_maximal(self):
        M = pair_over_z(2, 3)
        maximal = [N for N in enumerate_graded_submodules(M)
                   if N.is_proper() and is_graded_maximal(N, M)]
        self.assertEqual(len(maximal), 2)
        Mz = GradedModule(BaseRing(0), Z2, [(0, 0)])
        self.assertTrue(is_graded_maximal(
            submodule_from_generators([(5,)], Mz), Mz))
        self.assertFalse(is_graded_maximal(
            submodule_from_generators([(4,)], Mz), Mz))


if __name__ == '__main__':
    unittest.main()
