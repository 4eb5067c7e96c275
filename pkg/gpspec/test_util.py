"""Unit tests for util.py."""


import unittest

from gpspec.util import *


class UtilCase(unittest.TestCase):
    
    def test_stopwatch(self):
        n = 10
        def clock():
            return n
        
        w = StopWatch(clock)
        self.assertEqual(w.elapsed, 0)
        with w:
            n = 13
            self.assertEqual(w.elapsed, 3)
            n = 14
        n = 20
        self.assertEqual(w.elapsed, 4)
        
        # Reentering starts over.
        with w:
            n = 21
        self.assertEqual(w.elapsed, 1)
        
        # Time spent in a block that raises still counts.
        with self.assertRaises(KeyError):
            with w:
                n = 26
                raise KeyError
        self.assertEqual(w.elapsed, 5)
    
    def test_prime_divisors(self):
        self.assertEqual(prime_divisors(0), [])
        self.assertEqual(prime_divisors(1), [])
        self.assertEqual(prime_divisors(36), [2, 3])
        self.assertEqual(prime_divisors(-30), [2, 3, 5])
    
    def test_radical_of(self):
        self.assertEqual(radical_of(0), 0)
        self.assertEqual(radical_of(1), 1)
        self.assertEqual(radical_of(8), 2)
        self.assertEqual(radical_of(72), 6)
    
    def test_divisors_lcm(self):
        self.assertEqual(divisors_of(12), [1, 2, 3, 4, 6, 12])
        self.assertEqual(lcm(), 1)
        self.assertEqual(lcm(4, 6), 12)
        self.assertEqual(lcm(4, 0), 0)
        self.assertTrue(is_prime_number(7))
        self.assertFalse(is_prime_number(1))
        self.assertFalse(is_prime_number(9))


if __name__ == '__main__':
    unittest.main()
