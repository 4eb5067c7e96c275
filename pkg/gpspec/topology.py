"""Varieties, base opens and the Zariski topologies on the graded
primary spectrum, the graded prime spectrum and the prime spectrum of
a finite ring, together with the usual topological analyses of the
resulting finite spaces.

Subsets of a space are bitmasks over its canonical point list.
"""


__all__ = [
    'PointSet',
    'FiniteSpace',
    'TopologyReport',
    'PRIMARY_SPECTRUM',
    'PRIME_SPECTRUM',
    'RING_SPECTRUM',
    'VARIETY_KINDS',
    'build_space',
    'build_ring_space',
    'variety',
    'point_in_variety',
    'base_representatives',
    'base_open_S',
    'ring_variety',
    'ring_basic_open',
    'eta',
    'gamma',
    'closure',
    'lattice_closure',
    'is_irreducible',
    'irreducible_components',
    'generic_points',
    'quasi_compact_subcover',
    'specialization_matrix',
    'analyze',
    'is_primary_G_top',
    'is_G_top',
    'point_index_map',
]


from functools import lru_cache, reduce

import numpy as np

from gpspec.errors import ModuleMismatch, NotMaterializable
from gpspec.algebra import (DEFAULT_ENUM_BOUND, Ideal, GradedSubmodule,
                            colon_ideal, enumerate_graded_submodules)
from gpspec.spectra import (Trilean, enumerate_points, is_graded_prime,
                            graded_radical_submodule, is_multiplication)
from gpspec.util import lcm, divisors_of


PRIMARY_SPECTRUM = 'primary_spectrum'
PRIME_SPECTRUM = 'prime_spectrum'
RING_SPECTRUM = 'ring_spectrum'

VARIETY_KINDS = {
    'nu': PRIMARY_SPECTRUM,
    'nu_star': PRIMARY_SPECTRUM,
    'V': PRIME_SPECTRUM,
    'V_star': PRIME_SPECTRUM,
}
"""Variety kind -> the space kind it is evaluated over."""


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class PointSet:
    
    """Subset of a FiniteSpace."""
    
    __slots__ = ('space', 'mask')
    
    def __init__(self, space, mask=0):
        assert 0 <= mask <= space.full_mask
        self.space = space
        self.mask = mask
    
    def _check(self, other):
        if self.space is not other.space:
            raise ModuleMismatch('Point sets of different spaces')
    
    def indices(self):
        return list(_bits(self.mask))
    
    def points(self):
        return [self.space.points[i] for i in _bits(self.mask)]
    
    def __contains__(self, i):
        return bool(self.mask >> i & 1)
    
    def __iter__(self):
        return _bits(self.mask)
    
    def __len__(self):
        return bin(self.mask).count('1')
    
    @property
    def is_empty(self):
        return self.mask == 0
    
    def __or__(self, other):
        self._check(other)
        return PointSet(self.space, self.mask | other.mask)
    
    def __and__(self, other):
        self._check(other)
        return PointSet(self.space, self.mask & other.mask)
    
    def __sub__(self, other):
        self._check(other)
        return PointSet(self.space, self.mask & ~other.mask)
    
    def complement(self):
        return PointSet(self.space, self.space.full_mask & ~self.mask)
    
    def __le__(self, other):
        self._check(other)
        return self.mask & ~other.mask == 0
    
    def __eq__(self, other):
        return (isinstance(other, PointSet) and self.space is other.space and
                self.mask == other.mask)
    
    def __hash__(self):
        return hash(self.mask)
    
    def __repr__(self):
        return 'PointSet({})'.format(self.indices())


class FiniteSpace:
    
    """Finite topological space given by its closed sets."""
    
    def __init__(self, kind, points, module=None, ring=None):
        self.kind = kind
        self.points = tuple(points)
        self.module = module
        self.ring = ring if ring is not None else module.ring
        self.index = {p: i for i, p in enumerate(self.points)}
        
        self.radicals = None
        """Gr_M of each point, for module spaces."""
        self.radical_colons = None
        """(Gr_M(Q) :_R M) of each point, for module spaces."""
        
        self.witnesses = {}
        """Map from closed mask to one submodule or ideal cutting it out."""
        self.closed_masks = []
        self.base = []
        """List of (r, PointSet) with distinct base opens."""
    
    @property
    def size(self):
        return len(self.points)
    
    @property
    def full_mask(self):
        return (1 << len(self.points)) - 1
    
    def empty(self):
        return PointSet(self, 0)
    
    def full(self):
        return PointSet(self, self.full_mask)
    
    def point_set(self, indices):
        mask = 0
        for i in indices:
            mask |= 1 << i
        return PointSet(self, mask)
    
    def singleton(self, i):
        return PointSet(self, 1 << i)
    
    @property
    def closed_sets(self):
        return [PointSet(self, c) for c in self.closed_masks]
    
    @property
    def open_sets(self):
        return [PointSet(self, self.full_mask & ~c)
                for c in self.closed_masks]
    
    def is_closed(self, Y):
        return Y.mask in self._closed_lookup
    
    def is_open(self, Y):
        return (self.full_mask & ~Y.mask) in self._closed_lookup
    
    def _finish(self):
        self.closed_masks = sorted(self.witnesses,
                                   key=lambda c: (bin(c).count('1'), c))
        self._closed_lookup = frozenset(self.closed_masks)
        full = self.full_mask
        assert 0 in self._closed_lookup and full in self._closed_lookup
        for a in self.closed_masks:
            for b in self.closed_masks:
                assert a | b in self._closed_lookup, \
                    'Closed sets not closed under union'
                assert a & b in self._closed_lookup, \
                    'Closed sets not closed under intersection'
    
    def label(self, i):
        return self.points[i].describe()
    
    def __repr__(self):
        return 'FiniteSpace({}, {} points)'.format(self.kind, self.size)


def _variety_mask(space, N, kind):
    mask = 0
    if kind in ('nu', 'V'):
        c = colon_ideal(N, space.module)
        for i, rc in enumerate(space.radical_colons):
            if c <= rc:
                mask |= 1 << i
    else:
        for i, rad in enumerate(space.radicals):
            if rad.contains(N):
                mask |= 1 << i
    return mask


def variety(N, M, kind, space):
    """nu_G(N), nu*_G(N), V_G(N) or V*_G(N) as a subset of space."""
    if kind not in VARIETY_KINDS:
        raise ValueError('Unknown variety kind ' + kind)
    if VARIETY_KINDS[kind] != space.kind:
        raise ModuleMismatch('Variety {} is not defined on a {} space'
                             .format(kind, space.kind))
    if N.module != M or space.module != M:
        raise ModuleMismatch('Submodule and space belong to different '
                             'modules')
    return PointSet(space, _variety_mask(space, N, kind))


def point_in_variety(N, Q, M, kind, bound=DEFAULT_ENUM_BOUND):
    """Membership of a single point Q in a variety of N, without
    building a space.
    """
    if kind in ('nu', 'nu_star'):
        rad = graded_radical_submodule(Q, M, bound).as_submodule(M)
    elif kind in ('V', 'V_star'):
        if not is_graded_prime(Q, M):
            raise ValueError('{} is not a graded prime'.format(
                             Q.describe()))
        rad = Q
    else:
        raise ValueError('Unknown variety kind ' + kind)
    if kind in ('nu', 'V'):
        return colon_ideal(N, M) <= colon_ideal(rad, M)
    return rad.contains(N)


def base_representatives(M):
    """Ring elements r whose S_r exhaust the base: 0, 1 and the
    divisors of the lcm of the finite factor orders and the ring
    modulus.
    """
    delta = lcm(*([o for o, _d in M.factors if o] +
                  [M.ring.modulus or 1]))
    return sorted(set([0, 1] + divisors_of(delta)))


def base_open_S(r, space):
    """S_r, the complement of nu_G(rM) (V_G(rM) on a prime space)."""
    M = space.module
    rM = GradedSubmodule.full(M).scale(Ideal(M.ring, r))
    kind = 'nu' if space.kind == PRIMARY_SPECTRUM else 'V'
    return variety(rM, M, kind, space).complement()


def ring_variety(I, ringspace):
    if ringspace.kind != RING_SPECTRUM:
        raise ModuleMismatch('Not a ring spectrum')
    mask = 0
    for i, p in enumerate(ringspace.points):
        if I <= p:
            mask |= 1 << i
    return PointSet(ringspace, mask)


def ring_basic_open(r, ringspace):
    """D_r, the complement of V^R(rR)."""
    return ring_variety(Ideal(ringspace.ring, r), ringspace).complement()


@lru_cache(maxsize=None)
def build_space(M, kind=PRIMARY_SPECTRUM, bound=DEFAULT_ENUM_BOUND):
    """The primary or prime spectrum of a finite M with its Zariski
    topology, built from the varieties of all graded submodules.
    """
    if kind == PRIMARY_SPECTRUM:
        points = enumerate_points(M, 'primary_spectrum', bound)
        radicals = [graded_radical_submodule(Q, M, bound).as_submodule(M)
                    for Q in points]
        vkind = 'nu'
    elif kind == PRIME_SPECTRUM:
        points = enumerate_points(M, 'prime', bound)
        radicals = list(points)
        vkind = 'V'
    else:
        raise ValueError('Unknown module space kind ' + kind)
    
    space = FiniteSpace(kind, points, module=M)
    space.radicals = radicals
    space.radical_colons = [colon_ideal(rad, M) for rad in radicals]
    for N in enumerate_graded_submodules(M, bound):
        space.witnesses.setdefault(_variety_mask(space, N, vkind), N)
    space._finish()
    
    seen = set()
    for r in base_representatives(M):
        S = base_open_S(r, space)
        if S.mask not in seen:
            seen.add(S.mask)
            space.base.append((r, S))
    return space


@lru_cache(maxsize=None)
def build_ring_space(ring):
    """Spec of a finite ring Z_m, whose primes are (p) for p | m."""
    if not ring.is_finite:
        raise NotMaterializable('Spectrum of {} is infinite'.format(
                                ring.describe()))
    space = FiniteSpace(RING_SPECTRUM, ring.primes(), ring=ring)
    for I in ring.ideals():
        space.witnesses.setdefault(ring_variety(I, space).mask, I)
    space._finish()
    
    seen = set()
    for r in sorted(set([0] + divisors_of(ring.modulus))):
        D = ring_basic_open(r, space)
        if D.mask not in seen:
            seen.add(D.mask)
            space.base.append((r, D))
    return space


def eta(Y):
    """Intersection of Gr_M(Q) over Q in Y; M for the empty set."""
    space = Y.space
    full = GradedSubmodule.full(space.module)
    return reduce(lambda a, b: a & b,
                  (space.radicals[i] for i in Y), full)


def gamma(Z):
    """Intersection of the ideals in a subset of a ring spectrum."""
    space = Z.space
    return reduce(lambda a, b: a & b,
                  (space.points[i] for i in Z), space.ring.unit_ideal)


def lattice_closure(Y):
    """Smallest closed superset of Y, from the closed family alone."""
    space = Y.space
    mask = space.full_mask
    for c in space.closed_masks:
        if Y.mask & ~c == 0:
            mask &= c
    return PointSet(space, mask)


def closure(Y):
    """Closure of Y as the variety of eta(Y) (of gamma(Y) on a ring
    spectrum), checked against the lattice closure.
    """
    space = Y.space
    if space.kind == RING_SPECTRUM:
        result = ring_variety(gamma(Y), space)
    else:
        kind = 'nu' if space.kind == PRIMARY_SPECTRUM else 'V'
        result = variety(eta(Y), space.module, kind, space)
    assert result == lattice_closure(Y), \
        'Closure formula disagrees with smallest closed superset'
    return result


def _is_irreducible_mask(space, y):
    if y == 0:
        return False
    for a in space.closed_masks:
        if y & ~a == 0:
            continue
        for b in space.closed_masks:
            if y & ~b == 0:
                continue
            if y & ~(a | b) == 0:
                return False
    return True


def is_irreducible(Y):
    """Y is nonempty and not covered by two closed sets unless one of
    them already contains it.
    """
    return _is_irreducible_mask(Y.space, Y.mask)


def irreducible_components(space):
    """Maximal irreducible closed sets."""
    irr = [c for c in space.closed_masks if _is_irreducible_mask(space, c)]
    comps = [c for c in irr
             if not any(c != d and c & ~d == 0 for d in irr)]
    return [PointSet(space, c) for c in comps]


def _point_closures(space):
    return [lattice_closure(space.singleton(i)).mask
            for i in range(space.size)]


def generic_points(F):
    """Points y of F with Cl({y}) = F."""
    closures = _point_closures(F.space)
    return [i for i in F if closures[i] == F.mask]


def quasi_compact_subcover(Y, cover):
    """A finite list of members of cover whose union contains Y, or
    None if cover does not cover Y.
    """
    remaining = Y.mask
    chosen = []
    while remaining:
        best = max(cover, key=lambda U: bin(U.mask & remaining).count('1'),
                   default=None)
        if best is None or best.mask & remaining == 0:
            return None
        chosen.append(best)
        remaining &= ~best.mask
    return chosen


def specialization_matrix(space):
    """Boolean matrix S with S[i, j] iff point j lies in Cl({i})."""
    n = space.size
    S = np.zeros((n, n), dtype=bool)
    for i, c in enumerate(_point_closures(space)):
        for j in _bits(c):
            S[i, j] = True
    return S


class TopologyReport:
    
    """Flags and components of a finite space."""
    
    def __init__(self, space):
        self.space = space
        full = space.full_mask
        closed = space.closed_masks
        lookup = set(closed)
        
        self.connected = not any(c not in (0, full) and
                                 (full & ~c) in lookup for c in closed)
        self.irreducible = _is_irreducible_mask(space, full)
        
        closures = _point_closures(space)
        self.T0 = len(set(closures)) == len(closures)
        self.T1 = all(closures[i] == 1 << i for i in range(space.size))
        
        self.components = []
        """List of (PointSet, generic point indices)."""
        for comp in irreducible_components(space):
            self.components.append((comp, generic_points(comp)))
        
        irr = [c for c in closed if _is_irreducible_mask(space, c)]
        self.sober = all(
            len([i for i in _bits(c) if closures[i] == c]) == 1
            for c in irr)
        
        base_sets = [U for _r, U in space.base]
        self.quasi_compact = quasi_compact_subcover(space.full(),
                                                    base_sets) is not None
        
        # Compact opens: opens with a finite subcover from the base
        # sets they contain.
        opens = [full & ~c for c in closed]
        def compact(o):
            inside = [U for U in base_sets if U.mask & ~o == 0]
            return quasi_compact_subcover(PointSet(space, o),
                                          inside) is not None
        compact_opens = [o for o in opens if compact(o)]
        compact_lookup = set(compact_opens)
        meets = all(a & b in compact_lookup
                    for a in compact_opens for b in compact_opens)
        forms_base = all(
            reduce(lambda x, y: x | y,
                   (u for u in compact_opens if u & ~o == 0), 0) == o
            for o in opens)
        self.compact_opens_base = meets and forms_base
        
        self.hochster = {
            'T0': self.T0,
            'quasi_compact': self.quasi_compact,
            'compact_opens_base': self.compact_opens_base,
            'sober': self.sober,
        }
        self.spectral = all(self.hochster.values())
        self.trivial_topology = set(closed) <= {0, full}
    
    def flags(self):
        return {
            'connected': self.connected,
            'irreducible': self.irreducible,
            'T0': self.T0,
            'T1': self.T1,
            'sober': self.sober,
            'spectral': self.spectral,
            'quasi_compact': self.quasi_compact,
            'trivial_topology': self.trivial_topology,
        }


def analyze(space):
    return TopologyReport(space)


def _union_closed(masks):
    lookup = set(masks)
    for a in masks:
        for b in masks:
            if a | b not in lookup:
                return a, b
    return None


def _top_family(M, space_kind, variety_kind, bound, conductor):
    if M.is_finite and M.size <= bound:
        space = build_space(M, space_kind, bound)
        family = {}
        for N in enumerate_graded_submodules(M, bound):
            family.setdefault(_variety_mask(space, N, variety_kind), N)
        bad = _union_closed(list(family))
        if bad is None:
            return Trilean.true('exhaustive')
        a, b = bad
        return Trilean.false({'N': family[a], 'N2': family[b]})
    if is_multiplication(M, bound, conductor).is_true:
        return Trilean.true('multiplication module')
    return Trilean.unknown('infinite and not known to be a multiplication '
                           'module')


def is_primary_G_top(M, bound=DEFAULT_ENUM_BOUND, conductor=4):
    """The family of nu*_G varieties is closed under finite union."""
    return _top_family(M, PRIMARY_SPECTRUM, 'nu_star', bound, conductor)


def is_G_top(M, bound=DEFAULT_ENUM_BOUND, conductor=4):
    """The family of V*_G varieties is closed under finite union."""
    return _top_family(M, PRIME_SPECTRUM, 'V_star', bound, conductor)


def point_index_map(src, dst):
    """Index in dst of each point of src (None when absent)."""
    return [dst.index.get(p) for p in src.points]
