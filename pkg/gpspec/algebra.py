"""Grading groups, base rings, ideals, graded modules and their graded
submodules.

The base ring is Z or Z_n concentrated in the identity degree, so a
graded submodule is exactly a choice of one subgroup N_g of M_g for
every degree g. Each N_g is stored as the row Hermite form of its
preimage lattice in Z^k (k = number of factors of degree g), which
always contains the relation rows n_i e_i of the finite factors.
"""


__all__ = [
    'DEFAULT_ENUM_BOUND',
    'GradingGroup',
    'BaseRing',
    'Ideal',
    'GradedModule',
    'ModuleElement',
    'GradedSubmodule',
    'QuotientInvariants',
    'ideal_radical',
    'colon_ideal',
    'annihilator',
    'submodule_from_generators',
    'submodule_lattice',
    'quotient_invariants',
    'enumerate_graded_submodules',
    'is_graded_maximal',
]


import itertools
from functools import lru_cache
from math import gcd

from gpspec.errors import ModuleMismatch, InfiniteModule, EnumerationBound
from gpspec.lattice import (hermite_rows, is_member, intersect_rows,
                            line_generator, smith_invariants, lattice_index)
from gpspec.util import radical_of, divisors_of, prime_divisors, lcm, \
                        is_prime_number


DEFAULT_ENUM_BOUND = 20000
"""Largest module cardinality that enumeration accepts by default."""


class GradingGroup:
    
    """Finite abelian group Z_{k_1} x ... x Z_{k_t}. Elements are tuples
    of residues; the identity is the all-zeros tuple.
    """
    
    def __init__(self, cyclic_orders):
        orders = tuple(int(k) for k in cyclic_orders)
        if len(orders) == 0:
            raise ValueError('Grading group needs at least one cyclic factor')
        for k in orders:
            if k < 1:
                raise ValueError('Cyclic order {} is not positive'.format(k))
        self.cyclic_orders = orders
        """Orders of the cyclic factors."""
    
    @property
    def identity(self):
        return (0,) * len(self.cyclic_orders)
    
    @property
    def size(self):
        size = 1
        for k in self.cyclic_orders:
            size *= k
        return size
    
    def element(self, value):
        """Canonical tuple for value. A bare integer is accepted when
        the group is cyclic.
        """
        if isinstance(value, int):
            value = (value,)
        value = tuple(value)
        if len(value) != len(self.cyclic_orders):
            raise ValueError('Degree {} does not match group {}'.format(
                             value, self.describe()))
        return tuple(a % k for a, k in zip(value, self.cyclic_orders))
    
    def add(self, a, b):
        return tuple((x + y) % k
                     for x, y, k in zip(a, b, self.cyclic_orders))
    
    def elements(self):
        return list(itertools.product(*(range(k)
                                        for k in self.cyclic_orders)))
    
    def format_degree(self, g):
        if len(g) == 1:
            return str(g[0])
        return '(' + ','.join(str(a) for a in g) + ')'
    
    def describe(self):
        return ' x '.join('Z{}'.format(k) for k in self.cyclic_orders)
    
    def __eq__(self, other):
        return (isinstance(other, GradingGroup) and
                self.cyclic_orders == other.cyclic_orders)
    
    def __hash__(self):
        return hash(('GradingGroup', self.cyclic_orders))
    
    def __repr__(self):
        return 'GradingGroup({!r})'.format(self.cyclic_orders)


class BaseRing:
    
    """The ring Z (modulus 0) or Z_n (modulus n). Modulus 1, the zero
    ring, only arises as a reduced ring R/Ann(M) of the zero module.
    """
    
    def __init__(self, modulus):
        modulus = int(modulus)
        if modulus < 0:
            raise ValueError('Negative ring modulus {}'.format(modulus))
        self.modulus = modulus
    
    @property
    def is_finite(self):
        return self.modulus != 0
    
    def reduce(self, r):
        return r % self.modulus if self.modulus else r
    
    def elements(self):
        assert self.is_finite
        return range(self.modulus)
    
    def ideal(self, raw):
        return Ideal(self, raw)
    
    @property
    def zero_ideal(self):
        return Ideal(self, 0)
    
    @property
    def unit_ideal(self):
        return Ideal(self, 1)
    
    def ideals(self):
        """All ideals of a finite ring, ordered by generator."""
        assert self.is_finite
        return [Ideal(self, d) for d in divisors_of(self.modulus)]
    
    def primes(self):
        """Prime ideals of a finite ring, ordered by generator."""
        assert self.is_finite
        return [Ideal(self, p) for p in prime_divisors(self.modulus)]
    
    def is_unit(self, r):
        if self.modulus == 0:
            return r in (1, -1)
        return gcd(r, self.modulus) == 1
    
    def is_nilpotent(self, r):
        if self.modulus == 0:
            return r == 0
        return self.reduce(r) % radical_of(self.modulus) == 0
    
    def describe(self):
        return 'Z' if self.modulus == 0 else 'Z{}'.format(self.modulus)
    
    def __eq__(self, other):
        return isinstance(other, BaseRing) and self.modulus == other.modulus
    
    def __hash__(self):
        return hash(('BaseRing', self.modulus))
    
    def __repr__(self):
        return 'BaseRing({})'.format(self.modulus)


class Ideal:
    
    """Principal ideal with canonical generator: |c| over Z, gcd(c, n)
    over Z_n (so the zero ideal of Z_n has generator n).
    """
    
    __slots__ = ('ring', 'generator')
    
    def __init__(self, ring, raw):
        self.ring = ring
        if ring.modulus == 0:
            self.generator = abs(raw)
        else:
            self.generator = gcd(raw, ring.modulus)
    
    def _same_ring(self, other):
        if self.ring != other.ring:
            raise ModuleMismatch('Ideals over {} and {}'.format(
                                 self.ring.describe(), other.ring.describe()))
    
    @property
    def is_zero(self):
        return self.generator == self.ring.modulus
    
    @property
    def is_unit(self):
        return self.generator == 1
    
    def __le__(self, other):
        """Containment self <= other, i.e. other's generator divides
        self's.
        """
        self._same_ring(other)
        if other.generator == 0:
            return self.generator == 0
        return self.generator % other.generator == 0
    
    def __lt__(self, other):
        return self <= other and self != other
    
    def contains(self, r):
        return Ideal(self.ring, r) <= self
    
    def __add__(self, other):
        self._same_ring(other)
        return Ideal(self.ring, gcd(self.generator, other.generator))
    
    def __mul__(self, other):
        self._same_ring(other)
        return Ideal(self.ring, self.generator * other.generator)
    
    def __and__(self, other):
        self._same_ring(other)
        return Ideal(self.ring, lcm(self.generator, other.generator))
    
    def radical(self):
        return Ideal(self.ring, radical_of(self.generator))
    
    def is_prime(self):
        if self.is_unit:
            return False
        if self.ring.modulus == 0 and self.generator == 0:
            return True
        return is_prime_number(self.generator)
    
    def is_maximal(self):
        return is_prime_number(self.generator)
    
    def describe(self):
        return '({})'.format(0 if self.is_zero else self.generator)
    
    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.ring == other.ring and
                self.generator == other.generator)
    
    def __hash__(self):
        return hash(('Ideal', self.ring.modulus, self.generator))
    
    def __repr__(self):
        return 'Ideal({}, {})'.format(self.ring.describe(), self.generator)


def ideal_radical(I):
    """Gr(I), the radical of I."""
    return I.radical()


class GradedModule:
    
    """Direct sum of cyclic factors Z (order 0) or Z_n (order n >= 2),
    each placed in one degree of the grading group.
    """
    
    def __init__(self, ring, group, factors):
        self.ring = ring
        self.group = group
        canon = []
        for order, degree in factors:
            order = int(order)
            if order == 1 or order < 0:
                raise ValueError('Factor order {} is not 0 or >= 2'.format(
                                 order))
            if ring.is_finite:
                if order == 0:
                    raise ValueError('Free factor over finite ring {}'.format(
                                     ring.describe()))
                if ring.modulus % order != 0:
                    raise ValueError('factor order {} does not divide ring '
                                     'modulus {}'.format(order, ring.modulus))
            canon.append((order, group.element(degree)))
        self.factors = tuple(canon)
        """Tuple of (order, degree) pairs."""
        
        self._degrees = tuple(sorted(set(d for _o, d in self.factors)))
        self._indices = {g: tuple(i for i, (_o, d) in enumerate(self.factors)
                                  if d == g)
                         for g in self._degrees}
    
    @property
    def rank(self):
        """Number of factors."""
        return len(self.factors)
    
    def degrees(self):
        """Sorted degrees that carry at least one factor."""
        return self._degrees
    
    def factor_indices(self, g):
        return self._indices.get(g, ())
    
    def orders_in(self, g):
        return tuple(self.factors[i][0] for i in self.factor_indices(g))
    
    @property
    def is_finite(self):
        return all(o != 0 for o, _d in self.factors)
    
    @property
    def size(self):
        assert self.is_finite
        size = 1
        for o, _d in self.factors:
            size *= o
        return size
    
    @property
    def exponent(self):
        """lcm of the factor orders; 0 if there is a free factor."""
        return lcm(*(o for o, _d in self.factors))
    
    def element(self, coords):
        return ModuleElement(self, coords)
    
    def zero_element(self):
        return ModuleElement(self, (0,) * self.rank)
    
    def basis_element(self, i):
        return ModuleElement(self, tuple(int(k == i)
                                         for k in range(self.rank)))
    
    def homogeneous_elements(self, g):
        """All elements of M_g, for a finite module."""
        idx = self.factor_indices(g)
        ranges = [range(self.factors[i][0]) for i in idx]
        result = []
        for local in itertools.product(*ranges):
            coords = [0] * self.rank
            for i, a in zip(idx, local):
                coords[i] = a
            result.append(ModuleElement(self, coords))
        return result
    
    def describe(self):
        if not self.factors:
            return '0'
        return ' x '.join('{}@{}'.format(
                          'Z' if o == 0 else 'Z{}'.format(o),
                          self.group.format_degree(d))
                          for o, d in self.factors)
    
    def __eq__(self, other):
        return (isinstance(other, GradedModule) and
                self.ring == other.ring and self.group == other.group and
                self.factors == other.factors)
    
    def __hash__(self):
        return hash(('GradedModule', self.ring, self.group, self.factors))
    
    def __repr__(self):
        return 'GradedModule({}, {})'.format(self.ring.describe(),
                                             self.describe())


class ModuleElement:
    
    """Coordinate vector, coordinate i reduced modulo the i-th factor
    order when that order is nonzero.
    """
    
    __slots__ = ('module', 'coords')
    
    def __init__(self, module, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != module.rank:
            raise ValueError('Element {} has {} coordinates, module has {} '
                             'factors'.format(coords, len(coords),
                                              module.rank))
        self.module = module
        self.coords = tuple(c % o if o else c
                            for c, (o, _d) in zip(coords, module.factors))
    
    def component(self, g):
        idx = set(self.module.factor_indices(g))
        return ModuleElement(self.module,
                             [c if i in idx else 0
                              for i, c in enumerate(self.coords)])
    
    def components(self):
        """Map from degree to the nonzero homogeneous components."""
        result = {}
        for g in self.module.degrees():
            x = self.component(g)
            if not x.is_zero:
                result[g] = x
        return result
    
    def local(self, g):
        """Coordinates of the degree-g factors only."""
        return tuple(self.coords[i] for i in self.module.factor_indices(g))
    
    @property
    def is_zero(self):
        return not any(self.coords)
    
    @property
    def is_homogeneous(self):
        return len(self.components()) <= 1
    
    def __add__(self, other):
        if self.module != other.module:
            raise ModuleMismatch('Elements of different modules')
        return ModuleElement(self.module,
                             [a + b for a, b in zip(self.coords,
                                                    other.coords)])
    
    def __neg__(self):
        return ModuleElement(self.module, [-a for a in self.coords])
    
    def __rmul__(self, r):
        return ModuleElement(self.module, [r * a for a in self.coords])
    
    def __eq__(self, other):
        return (isinstance(other, ModuleElement) and
                self.module == other.module and self.coords == other.coords)
    
    def __hash__(self):
        return hash(('ModuleElement', self.coords))
    
    def __repr__(self):
        return 'ModuleElement({!r})'.format(self.coords)


def _relation_rows(module, g):
    orders = module.orders_in(g)
    k = len(orders)
    return [tuple(o if j == i else 0 for j in range(k))
            for i, o in enumerate(orders) if o != 0]


def _same_module(a, b):
    if a.module != b.module:
        raise ModuleMismatch('Submodules of different modules: {} and {}'
                             .format(a.module.describe(), b.module.describe()))


class QuotientInvariants:
    
    """Smith invariants of one homogeneous component M_g/N_g."""
    
    def __init__(self, free_rank, torsion_factors):
        self.free_rank = free_rank
        self.torsion_factors = tuple(torsion_factors)
        for a, b in zip(self.torsion_factors, self.torsion_factors[1:]):
            assert b % a == 0, 'Divisibility chain broken'
    
    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion_factors
    
    @property
    def order(self):
        """Cardinality of the quotient, or 0 if infinite."""
        if self.free_rank:
            return 0
        order = 1
        for d in self.torsion_factors:
            order *= d
        return order
    
    def annihilators(self, ring):
        """Annihilator ideals of the nonzero quotient elements."""
        gens = set()
        for d in self.torsion_factors:
            gens.update(e for e in divisors_of(d) if e > 1)
        result = sorted(set(Ideal(ring, e) for e in gens),
                        key=lambda I: I.generator)
        if self.free_rank > 0:
            result.append(Ideal(ring, 0))
        return result
    
    def __eq__(self, other):
        return (isinstance(other, QuotientInvariants) and
                self.free_rank == other.free_rank and
                self.torsion_factors == other.torsion_factors)
    
    def __hash__(self):
        return hash((self.free_rank, self.torsion_factors))
    
    def __repr__(self):
        return 'QuotientInvariants({}, {})'.format(
               self.free_rank, list(self.torsion_factors))


class GradedSubmodule:
    
    """Graded submodule, stored as one canonical Hermite basis per
    degree of the ambient module. Equal submodules have equal blocks.
    """
    
    def __init__(self, module, blocks):
        """Build from a map degree -> generator rows (local coordinates).
        Rows are canonicalized here; missing degrees are zero.
        """
        self.module = module
        canon = []
        for g in module.degrees():
            k = len(module.factor_indices(g))
            rows = list(blocks.get(g, ())) + _relation_rows(module, g)
            canon.append((g, hermite_rows(rows, k)))
        self.blocks = tuple(canon)
        """Tuple of (degree, hermite rows) over module.degrees()."""
    
    @classmethod
    def _from_canonical(cls, module, blocks):
        obj = cls.__new__(cls)
        obj.module = module
        obj.blocks = tuple(blocks)
        return obj
    
    @classmethod
    def zero(cls, module):
        return cls(module, {})
    
    @classmethod
    def full(cls, module):
        blocks = {}
        for g in module.degrees():
            k = len(module.factor_indices(g))
            blocks[g] = [tuple(int(i == j) for j in range(k))
                         for i in range(k)]
        return cls(module, blocks)
    
    def block(self, g):
        for d, rows in self.blocks:
            if d == g:
                return rows
        return ()
    
    def contains_element(self, x):
        if x.module != self.module:
            raise ModuleMismatch('Element of a different module')
        for g, rows in self.blocks:
            if not is_member(rows, x.local(g)):
                return False
        return True
    
    def contains(self, other):
        """other <= self."""
        _same_module(self, other)
        for (g, mine), (_g, theirs) in zip(self.blocks, other.blocks):
            if not all(is_member(mine, r) for r in theirs):
                return False
        return True
    
    def __le__(self, other):
        return other.contains(self)
    
    def __add__(self, other):
        _same_module(self, other)
        return GradedSubmodule(self.module,
                               {g: a + b for (g, a), (_g, b)
                                in zip(self.blocks, other.blocks)})
    
    def __and__(self, other):
        _same_module(self, other)
        blocks = []
        for (g, a), (_g, b) in zip(self.blocks, other.blocks):
            k = len(self.module.factor_indices(g))
            blocks.append((g, intersect_rows(a, b, k)))
        return GradedSubmodule._from_canonical(self.module, blocks)
    
    def scale(self, ideal):
        """The submodule I N."""
        if ideal.ring != self.module.ring:
            raise ModuleMismatch('Ideal over a different ring')
        c = ideal.generator
        return GradedSubmodule(self.module,
                               {g: [tuple(c * a for a in r) for r in rows]
                                for g, rows in self.blocks})
    
    def is_proper(self):
        return self != GradedSubmodule.full(self.module)
    
    def is_zero(self):
        return self == GradedSubmodule.zero(self.module)
    
    def generators(self):
        """Full-length coordinate vectors generating N, one per
        canonical row that is nonzero modulo the factor orders.
        """
        gens = []
        for g, rows in self.blocks:
            idx = self.module.factor_indices(g)
            for r in rows:
                coords = [0] * self.module.rank
                for i, a in zip(idx, r):
                    coords[i] = a
                x = ModuleElement(self.module, coords)
                if not x.is_zero and x.coords not in gens:
                    gens.append(x.coords)
        return gens
    
    def generator_elements(self):
        return [ModuleElement(self.module, c) for c in self.generators()]
    
    def cardinality(self):
        assert self.module.is_finite
        size = 1
        for g, rows in self.blocks:
            local = 1
            for o in self.module.orders_in(g):
                local *= o
            size *= local // lattice_index(rows, len(self.module
                                                     .factor_indices(g)))
        return size
    
    def elements(self, g):
        """Elements of N_g, for a finite module."""
        return [x for x in self.module.homogeneous_elements(g)
                if is_member(self.block(g), x.local(g))]
    
    def quotient_invariants(self, g):
        g = self.module.group.element(g)
        k = len(self.module.factor_indices(g))
        free_rank, torsion = smith_invariants(self.block(g), k)
        return QuotientInvariants(free_rank, torsion)
    
    def sort_key(self):
        size = self.cardinality() if self.module.is_finite else -1
        return (size, self.blocks)
    
    def describe(self):
        """Short label such as 2Z, 3Z6, 0, M or <(4,0)>."""
        if self.is_zero():
            return '0'
        if not self.is_proper():
            if self.module.rank == 1:
                o = self.module.factors[0][0]
                return 'Z' if o == 0 else 'Z{}'.format(o)
            return 'M'
        gens = self.generators()
        if self.module.rank == 1 and len(gens) == 1:
            o = self.module.factors[0][0]
            return '{}Z{}'.format(gens[0][0], o if o else '')
        return '<' + ','.join('(' + ','.join(str(a) for a in v) + ')'
                              for v in gens) + '>'
    
    def __eq__(self, other):
        return (isinstance(other, GradedSubmodule) and
                self.module == other.module and self.blocks == other.blocks)
    
    def __hash__(self):
        return hash(('GradedSubmodule', self.blocks))
    
    def __repr__(self):
        return 'GradedSubmodule({})'.format(self.describe())


def submodule_from_generators(gens, M):
    """Smallest graded submodule of M containing gens. Generators are
    split into homogeneous components.
    """
    blocks = {g: [] for g in M.degrees()}
    for x in gens:
        if not isinstance(x, ModuleElement):
            x = ModuleElement(M, x)
        elif x.module != M:
            raise ModuleMismatch('Generator of a different module')
        for g in M.degrees():
            blocks[g].append(x.local(g))
    return GradedSubmodule(M, blocks)


def submodule_lattice(N, N2, op):
    """Lattice operations and predicates by name."""
    if op == 'contains_element':
        return N.contains_element(N2)
    if op == 'is_proper':
        return N.is_proper()
    _same_module(N, N2)
    if op == 'sum':
        return N + N2
    elif op == 'intersect':
        return N & N2
    elif op == 'contains_submodule':
        return N.contains(N2)
    elif op == 'equals':
        return N == N2
    else:
        raise ValueError('Unknown lattice operation ' + op)


def colon_ideal(N, M):
    """(N :_R M), intersected over the cyclic factors of M."""
    if N.module != M:
        raise ModuleMismatch('Submodule of a different module')
    result = M.ring.unit_ideal
    for g in M.degrees():
        k = len(M.factor_indices(g))
        rows = N.block(g)
        for j in range(k):
            c = line_generator(rows, j, k)
            result = result & Ideal(M.ring, c)
    return result


def annihilator(M):
    return colon_ideal(GradedSubmodule.zero(M), M)


def quotient_invariants(M, N, g):
    if N.module != M:
        raise ModuleMismatch('Submodule of a different module')
    return N.quotient_invariants(g)


def _subgroup_blocks(M, g):
    """All subgroups of M_g as canonical Hermite blocks."""
    k = len(M.factor_indices(g))
    relations = _relation_rows(M, g)
    ranges = [range(o) for o in M.orders_in(g)]
    cyclics = set()
    for v in itertools.product(*ranges):
        cyclics.add(hermite_rows(relations + [v], k))
    cyclics = sorted(cyclics)
    
    start = hermite_rows(relations, k)
    seen = {start}
    queue = [start]
    while queue:
        S = queue.pop()
        for C in cyclics:
            T = hermite_rows(list(S) + list(C), k)
            if T not in seen:
                seen.add(T)
                queue.append(T)
    return sorted(seen)


@lru_cache(maxsize=None)
def _enumerate_cached(M, bound):
    if not M.is_finite:
        raise InfiniteModule('Module {} is infinite'.format(M.describe()))
    if M.size > bound:
        raise EnumerationBound('Module of size {} exceeds enumeration '
                               'bound {}'.format(M.size, bound))
    degrees = M.degrees()
    per_degree = [_subgroup_blocks(M, g) for g in degrees]
    result = [GradedSubmodule._from_canonical(M, tuple(zip(degrees, choice)))
              for choice in itertools.product(*per_degree)]
    result.sort(key=GradedSubmodule.sort_key)
    return tuple(result)


def enumerate_graded_submodules(M, bound=DEFAULT_ENUM_BOUND):
    """All graded submodules of a finite M, in canonical order."""
    return list(_enumerate_cached(M, bound))


def is_graded_maximal(N, M):
    """N is maximal among proper graded submodules: exactly one degree
    differs from M there and the quotient is cyclic of prime order.
    """
    if N.module != M:
        raise ModuleMismatch('Submodule of a different module')
    full = GradedSubmodule.full(M)
    differing = [g for (g, a), (_g, b) in zip(N.blocks, full.blocks)
                 if a != b]
    if len(differing) != 1:
        return False
    inv = N.quotient_invariants(differing[0])
    return (inv.free_rank == 0 and len(inv.torsion_factors) == 1 and
            is_prime_number(inv.torsion_factors[0]))
