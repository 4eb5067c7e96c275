"""Brute-force versions of the algebraic definitions, for finite
instances only. Nothing here uses Hermite or Smith forms, so these serve
as independent references for the lattice-based procedures.
"""


__all__ = [
    'closure_elements',
    'submodule_elements',
    'colon_exhaustive',
    'radical_exhaustive',
    'ideal_members',
    'is_prime_exhaustive',
    'is_primary_exhaustive',
    'graded_subgroups_exhaustive',
    'element_orders',
    'predicted_orders',
]


import itertools
from collections import Counter
from functools import reduce
from math import gcd

from gpspec.algebra import Ideal
from gpspec.util import lcm


def _add(a, b, orders):
    return tuple((x + y) % o if o else x + y
                 for x, y, o in zip(a, b, orders))


def _orders(M):
    return tuple(o for o, _d in M.factors)


def closure_elements(vectors, M):
    """Subgroup of a finite M generated by the given coordinate
    vectors, as a frozenset of tuples.
    """
    orders = _orders(M)
    zero = (0,) * M.rank
    seen = {zero}
    frontier = [zero]
    gens = [tuple(v) for v in vectors]
    while frontier:
        nxt = []
        for s in frontier:
            for v in gens:
                t = _add(s, v, orders)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return frozenset(seen)


def _components(v, M):
    comps = []
    for g in M.degrees():
        idx = set(M.factor_indices(g))
        comps.append(tuple(a if i in idx else 0 for i, a in enumerate(v)))
    return comps


def submodule_elements(N):
    """Element set of N, from the homogeneous components of its
    generators.
    """
    M = N.module
    vectors = []
    for v in N.generators():
        vectors.extend(_components(v, M))
    return closure_elements(vectors, M)


def _ring_range(M):
    """Ring elements that act distinctly on a finite M."""
    if M.ring.is_finite:
        return range(M.ring.modulus)
    return range(max(M.exponent, 1))


def _scale(r, v, orders):
    return tuple((r * a) % o if o else r * a for a, o in zip(v, orders))


def ideal_members(ideal_test, M):
    """Generator of the ideal {r : ideal_test(r)} over the ring of M,
    found by scanning the acting range.
    """
    members = [r for r in _ring_range(M) if ideal_test(r)]
    n = M.ring.modulus if M.ring.is_finite else max(M.exponent, 1)
    return Ideal(M.ring, reduce(gcd, members, n))


def colon_exhaustive(N, M):
    """{r : r M subset of N}, for a finite M."""
    elems = submodule_elements(N)
    orders = _orders(M)
    units = [tuple(int(i == j) for j in range(M.rank))
             for i in range(M.rank)]
    return ideal_members(
           lambda r: all(_scale(r, e, orders) in elems for e in units), M)


def radical_exhaustive(I):
    """{r : r^k in I for some k <= n} over a finite ring Z_n."""
    n = I.ring.modulus
    assert n > 0
    members = [r for r in range(n)
               if any(I.contains(pow(r, k, n)) for k in range(1, n + 1))]
    return Ideal(I.ring, reduce(gcd, members, n))


def _in_radical(r, ideal):
    c = ideal.generator
    if ideal.ring.is_finite:
        n = ideal.ring.modulus
        return any(pow(r, k, n) % c == 0 for k in range(1, n + 1))
    if c == 0:
        return r == 0
    return any(pow(r, k) % c == 0 for k in range(1, c.bit_length() + 2))


def _double_loop(N, M, in_target):
    elems = submodule_elements(N)
    orders = _orders(M)
    for r in _ring_range(M):
        if in_target(r):
            continue
        for g in M.degrees():
            for x in M.homogeneous_elements(g):
                if x.coords in elems:
                    continue
                if _scale(r, x.coords, orders) in elems:
                    return False
    return True


def is_prime_exhaustive(P, M):
    colon = colon_exhaustive(P, M)
    return _double_loop(P, M, colon.contains)


def is_primary_exhaustive(Q, M):
    colon = colon_exhaustive(Q, M)
    return _double_loop(Q, M, lambda r: _in_radical(r, colon))


def graded_subgroups_exhaustive(M):
    """All subgroups S of a small finite M with S equal to the sum of
    its homogeneous parts, as frozensets of tuples.
    """
    orders = _orders(M)
    elements = list(itertools.product(*(range(o) for o in orders)))
    cyclics = set(closure_elements([v], M) for v in elements)
    start = frozenset([(0,) * M.rank])
    seen = {start}
    queue = [start]
    while queue:
        S = queue.pop()
        for C in cyclics:
            T = closure_elements(list(S) + list(C), M) \
                if not C <= S else S
            if T not in seen:
                seen.add(T)
                queue.append(T)
    return [S for S in seen
            if all(c in S for v in S for c in _components(v, M))]


def element_orders(M, N, g):
    """Counter of element orders of M_g/N_g, by brute force."""
    elems = submodule_elements(N)
    orders = _orders(M)
    counts = Counter()
    members = 0
    for x in M.homogeneous_elements(g):
        if x.coords in elems:
            members += 1
        k = 1
        while _scale(k, x.coords, orders) not in elems:
            k += 1
        counts[k] += 1
    return Counter({k: c // members for k, c in counts.items()})


def predicted_orders(invariants):
    """Counter of element orders of the group presented by finite
    quotient invariants.
    """
    assert invariants.free_rank == 0
    counts = Counter()
    ds = invariants.torsion_factors
    for a in itertools.product(*(range(d) for d in ds)):
        counts[lcm(*(d // gcd(x, d) for x, d in zip(a, ds)))] += 1
    return counts
