"""Decision procedures for graded prime and primary submodules, graded
radicals, membership in the graded primary spectrum, and the
multiplication and cancellation properties.

Quantifiers over ring elements and homogeneous module elements are
removed by reading the achievable element annihilators off the Smith
invariants of each M_g/N_g.
"""


__all__ = [
    'RadicalResult',
    'Trilean',
    'is_graded_prime',
    'is_graded_primary',
    'graded_radical_submodule',
    'in_primary_spectrum',
    'enumerate_points',
    'is_multiplication',
    'is_cancellation',
    'POINT_KINDS',
]


from functools import lru_cache, reduce

from gpspec.errors import NotProper, NotSubmodule, RadicalUnknown
from gpspec.algebra import (DEFAULT_ENUM_BOUND, Ideal, GradedSubmodule,
                            ideal_radical, colon_ideal,
                            submodule_from_generators,
                            enumerate_graded_submodules, is_graded_maximal)
from gpspec.morphisms import quotient_module


POINT_KINDS = ('prime', 'primary_spectrum', 'maximal', 'all_graded')


class RadicalResult:
    
    """Outcome of a graded radical computation: a proper submodule, Top
    (no graded prime contains N, so Gr_M(N) = M), or Unknown.
    """
    
    SUBMODULE = 'submodule'
    TOP = 'top'
    UNKNOWN = 'unknown'
    
    def __init__(self, kind, submodule=None, strategy=None, reason=None,
                 attempted=()):
        self.kind = kind
        self.submodule = submodule
        self.strategy = strategy
        """Name of the strategy that produced the answer."""
        self.reason = reason
        self.attempted = tuple(attempted)
        """Strategies tried, in order."""
    
    @classmethod
    def of(cls, submodule, strategy, attempted=()):
        if not submodule.is_proper():
            return cls.top(strategy, attempted)
        return cls(cls.SUBMODULE, submodule=submodule, strategy=strategy,
                   attempted=attempted)
    
    @classmethod
    def top(cls, strategy, attempted=()):
        return cls(cls.TOP, strategy=strategy, attempted=attempted)
    
    @classmethod
    def unknown(cls, reason, attempted):
        return cls(cls.UNKNOWN, reason=reason, attempted=attempted)
    
    @property
    def is_submodule(self):
        return self.kind == self.SUBMODULE
    
    @property
    def is_top(self):
        return self.kind == self.TOP
    
    @property
    def is_unknown(self):
        return self.kind == self.UNKNOWN
    
    def as_submodule(self, M):
        """The radical as a submodule of M; raises RadicalUnknown."""
        if self.is_unknown:
            raise RadicalUnknown(self)
        if self.is_top:
            return GradedSubmodule.full(M)
        return self.submodule
    
    def same_value(self, other):
        return (self.kind == other.kind and
                self.submodule == other.submodule)
    
    def describe(self):
        if self.is_unknown:
            return 'unknown'
        if self.is_top:
            return 'M'
        return self.submodule.describe()
    
    def __repr__(self):
        if self.is_unknown:
            return 'RadicalResult.unknown({!r})'.format(self.reason)
        return 'RadicalResult({})'.format(self.describe())


class Trilean:
    
    """True, False with a witness, or Unknown with a reason."""
    
    TRUE = 'true'
    FALSE = 'false'
    UNKNOWN = 'unknown'
    
    def __init__(self, value, witness=None, reason=None):
        assert value in (self.TRUE, self.FALSE, self.UNKNOWN)
        self.value = value
        self.witness = witness
        self.reason = reason
    
    @classmethod
    def true(cls, reason=None):
        return cls(cls.TRUE, reason=reason)
    
    @classmethod
    def false(cls, witness, reason=None):
        return cls(cls.FALSE, witness=witness, reason=reason)
    
    @classmethod
    def unknown(cls, reason):
        return cls(cls.UNKNOWN, reason=reason)
    
    @classmethod
    def of(cls, flag, witness=None):
        return cls.true() if flag else cls.false(witness)
    
    @property
    def is_true(self):
        return self.value == self.TRUE
    
    @property
    def is_false(self):
        return self.value == self.FALSE
    
    @property
    def is_unknown(self):
        return self.value == self.UNKNOWN
    
    def __repr__(self):
        return 'Trilean({})'.format(self.value)


def _check_proper(N, M):
    if N.module != M:
        raise NotSubmodule('{} is not a submodule of {}'.format(
                           N.describe(), M.describe()))
    if not N.is_proper():
        raise NotProper('{} is not a proper submodule'.format(N.describe()))


def _annihilator_outside(N, M, target):
    """First (degree, annihilator) of a nonzero element of some M_g/N_g
    that is not contained in target, or None.
    """
    for g in M.degrees():
        inv = N.quotient_invariants(g)
        for ann in inv.annihilators(M.ring):
            if not ann <= target:
                return g, ann
    return None


def is_graded_prime(P, M):
    _check_proper(P, M)
    return _annihilator_outside(P, M, colon_ideal(P, M)) is None


def is_graded_primary(Q, M):
    _check_proper(Q, M)
    target = ideal_radical(colon_ideal(Q, M))
    return _annihilator_outside(Q, M, target) is None


def _quotient_size(N, M):
    """|M/N|, or 0 if the quotient is infinite."""
    size = 1
    for g in M.degrees():
        order = N.quotient_invariants(g).order
        if order == 0:
            return 0
        size *= order
    return size


@lru_cache(maxsize=None)
def graded_radical_submodule(N, M, bound=DEFAULT_ENUM_BOUND,
                             conductor=4):
    """Gr_M(N) by the first exact strategy: N itself when prime, then
    pulling back the primes of a finite M/N, then Gr((N:M))M on a
    multiplication module. When both of the latter apply their answers
    must agree.
    """
    _check_proper(N, M)
    attempted = ['prime']
    if is_graded_prime(N, M):
        return RadicalResult.of(N, 'prime', attempted)
    
    by_quotient = None
    size = _quotient_size(N, M)
    if size and size <= bound:
        attempted.append('quotient')
        Q, f = quotient_module(M, N)
        primes = [P for P in enumerate_graded_submodules(Q, bound)
                  if P.is_proper() and is_graded_prime(P, Q)]
        if not primes:
            by_quotient = RadicalResult.top('quotient', attempted)
        else:
            meet = reduce(lambda a, b: a & b,
                          (f.preimage(P) for P in primes))
            by_quotient = RadicalResult.of(meet, 'quotient', attempted)
    
    by_multiplication = None
    if is_multiplication(M, bound, conductor).is_true:
        attempted.append('multiplication')
        rad = ideal_radical(colon_ideal(N, M))
        by_multiplication = RadicalResult.of(
                            GradedSubmodule.full(M).scale(rad),
                            'multiplication', attempted)
    
    if by_quotient is not None and by_multiplication is not None:
        assert by_quotient.same_value(by_multiplication), \
            'Radical strategies disagree on {}: {} vs {}'.format(
            N.describe(), by_quotient.describe(),
            by_multiplication.describe())
    result = by_quotient or by_multiplication
    if result is None:
        return RadicalResult.unknown(
            'M/N is infinite or too large and M is not known to be a '
            'multiplication module', attempted)
    # Record strategies tried after the winning one as well.
    result.attempted = tuple(attempted)
    return result


def in_primary_spectrum(Q, M, bound=DEFAULT_ENUM_BOUND):
    if not is_graded_primary(Q, M):
        return False
    rad = graded_radical_submodule(Q, M, bound).as_submodule(M)
    left = colon_ideal(rad, M)
    right = ideal_radical(colon_ideal(Q, M))
    return left == right


@lru_cache(maxsize=None)
def _points_cached(M, kind, bound):
    subs = enumerate_graded_submodules(M, bound)
    if kind == 'all_graded':
        return tuple(subs)
    proper = [N for N in subs if N.is_proper()]
    if kind == 'prime':
        return tuple(N for N in proper if is_graded_prime(N, M))
    elif kind == 'primary_spectrum':
        return tuple(N for N in proper if in_primary_spectrum(N, M, bound))
    elif kind == 'maximal':
        return tuple(N for N in proper if is_graded_maximal(N, M))
    raise ValueError('Unknown point kind ' + kind)


def enumerate_points(M, kind, bound=DEFAULT_ENUM_BOUND):
    """Spec_G(M), PS_G(M), Max_G(M) or all graded submodules of a
    finite M, in canonical order.
    """
    if kind not in POINT_KINDS:
        raise ValueError('Unknown point kind ' + kind)
    return list(_points_cached(M, kind, bound))


def _multiplication_witness(N, M):
    colon = colon_ideal(N, M)
    product = GradedSubmodule.full(M).scale(colon)
    if product == N:
        return None
    return {'submodule': N, 'colon': colon, 'product': product}


@lru_cache(maxsize=None)
def is_multiplication(M, bound=DEFAULT_ENUM_BOUND, conductor=4):
    """Every graded submodule N equals (N:M)M. Exact on finite modules
    within the bound; otherwise a search over c e_i with c up to
    conductor, after which only single-factor modules are settled.
    """
    if M.is_finite and M.size <= bound:
        for N in enumerate_graded_submodules(M, bound):
            witness = _multiplication_witness(N, M)
            if witness is not None:
                return Trilean.false(witness)
        return Trilean.true('exhaustive')
    
    for i in range(M.rank):
        for c in range(conductor, 0, -1):
            x = M.basis_element(i)
            N = submodule_from_generators([c * x], M)
            witness = _multiplication_witness(N, M)
            if witness is not None:
                return Trilean.false(witness)
    if M.rank <= 1:
        return Trilean.true('single cyclic factor')
    return Trilean.unknown('no witness with conductor up to {}'.format(
                           conductor))


@lru_cache(maxsize=None)
def is_cancellation(M):
    """IM = JM forces I = J."""
    R = M.ring
    full = GradedSubmodule.full(M)
    if R.is_finite:
        images = {}
        for I in R.ideals():
            IM = full.scale(I)
            if IM in images:
                return Trilean.false({'I': images[IM], 'J': I,
                                      'product': IM})
            images[IM] = I
        return Trilean.true('all ideal pairs')
    if any(order == 0 for order, _d in M.factors):
        return Trilean.true('free factor')
    L = M.exponent
    I, J = Ideal(R, L), Ideal(R, 2 * L)
    return Trilean.false({'I': I, 'J': J, 'product': full.scale(I)})
