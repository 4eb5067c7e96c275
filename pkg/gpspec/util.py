"""Miscellaneous small utilities."""


__all__ = [
    'StopWatch',
    'prime_divisors',
    'radical_of',
    'divisors_of',
    'lcm',
    'is_prime_number',
]


import time
from functools import reduce
from math import gcd

from sympy import primefactors, divisors, isprime


class StopWatch:
    
    """Times the body of a With block. elapsed reads the running total
    while inside the block and the final total afterwards; reentering
    restarts from 0.
    """
    
    def __init__(self, timefunc=time.perf_counter):
        self.timefunc = timefunc
        """Monotonic clock."""
        self.started = None
        self.stopped = None
    
    @property
    def elapsed(self):
        if self.started is None:
            return 0
        end = self.timefunc() if self.stopped is None else self.stopped
        return end - self.started
    
    def __enter__(self):
        self.started = self.timefunc()
        self.stopped = None
        return self
    
    def __exit__(self, exc_type, exc_value, traceback):
        self.stopped = self.timefunc()


def prime_divisors(n):
    """Return the sorted distinct primes dividing n. The primes of 0
    and of 1 are both empty; sign is ignored.
    """
    n = abs(n)
    if n < 2:
        return []
    return list(primefactors(n))


def radical_of(n):
    """Product of the distinct primes dividing n, with radical_of(0)
    equal to 0.
    """
    if n == 0:
        return 0
    r = 1
    for p in prime_divisors(n):
        r *= p
    return r


def divisors_of(n):
    """Sorted positive divisors of n (n > 0)."""
    assert n > 0
    return list(divisors(n))


def lcm(*values):
    """Least common multiple, with lcm involving 0 equal to 0 and the
    empty lcm equal to 1.
    """
    def pair(a, b):
        if a == 0 or b == 0:
            return 0
        return abs(a * b) // gcd(a, b)
    return reduce(pair, values, 1)


def is_prime_number(n):
    return n >= 2 and bool(isprime(n))
