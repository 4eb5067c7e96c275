"""The reduced ring R/Ann(M), the natural maps rho and phi from the
module spectra to Spec of the reduced ring, and the maps between
primary spectra induced by graded epimorphisms.
"""


__all__ = [
    'ReducedRing',
    'MapAnalysis',
    'InducedMap',
    'rho',
    'phi',
    'analyze_map',
    'induced_pi',
]


from gpspec.errors import GpsError, ModuleMismatch, NotMaterializable
from gpspec.algebra import (DEFAULT_ENUM_BOUND, BaseRing, Ideal,
                            GradedSubmodule, annihilator, colon_ideal,
                            ideal_radical, enumerate_graded_submodules)
from gpspec.morphisms import check_supported
from gpspec.spectra import Trilean, is_graded_prime, graded_radical_submodule
from gpspec.topology import (PRIMARY_SPECTRUM, PRIME_SPECTRUM, PointSet,
                             build_space, build_ring_space, variety,
                             ring_variety)
from gpspec.util import divisors_of


class ReducedRing:
    
    """R/Ann(M) presented as Z_m, m the annihilator generator. When
    Ann(M) = (0) over Z the reduced ring is Z itself and only pointwise
    use is possible.
    """
    
    def __init__(self, module):
        self.module = module
        self.annihilator = annihilator(module)
        m = self.annihilator.generator
        self.ring = BaseRing(m)
        self.lazy = m == 0
        """True when the reduced ring is Z."""
    
    def project(self, I):
        """Image of an ideal I of R containing Ann(M)."""
        if not self.annihilator <= I:
            raise ValueError('{} does not contain the annihilator {}'.format(
                             I.describe(), self.annihilator.describe()))
        return Ideal(self.ring, I.generator)
    
    def lift(self, ideal):
        """Ideal of R containing Ann(M) with the given image."""
        return Ideal(self.module.ring, ideal.generator)
    
    def ideals_over_annihilator(self):
        """Ideals of R that contain Ann(M), for a finite reduced ring."""
        if self.lazy:
            raise NotMaterializable('Reduced ring is Z')
        return [Ideal(self.module.ring, d)
                for d in divisors_of(self.ring.modulus)]


def rho(Q, M, bound=DEFAULT_ENUM_BOUND, reduced=None):
    """(Gr_M(Q) :_R M)/Ann(M)."""
    reduced = reduced or ReducedRing(M)
    rad = graded_radical_submodule(Q, M, bound).as_submodule(M)
    image = reduced.project(colon_ideal(rad, M))
    assert image.is_prime(), \
        'rho({}) = {} is not prime'.format(Q.describe(), image.describe())
    return image


def phi(P, M, reduced=None):
    """(P :_R M)/Ann(M) for a graded prime P."""
    if not is_graded_prime(P, M):
        raise GpsError('{} is not a graded prime submodule'.format(
                       P.describe()))
    reduced = reduced or ReducedRing(M)
    image = reduced.project(colon_ideal(P, M))
    assert image.is_prime()
    return image


class MapAnalysis:
    
    """Properties of a map between two finite spaces, established
    extensionally.
    """
    
    def __init__(self, kind, domain, codomain, image_indices):
        self.kind = kind
        """rho, phi or pi."""
        self.domain = domain
        self.codomain = codomain
        self.image_indices = list(image_indices)
        """Codomain index of the image of each domain point."""
        
        self.injective = None
        self.surjective = None
        self.continuous = None
        self.continuity_witnesses = []
        """(target closed set witness, preimage PointSet) pairs."""
        self.open_closed = None
        self.image_identities = Trilean.unknown('not evaluated')
        self.homeomorphism = None
        self.fibers = {}
        """Codomain point -> PointSet of the domain."""
    
    @property
    def images(self):
        return [self.codomain.points[j] for j in self.image_indices]
    
    def image_of(self, Y):
        mask = 0
        for i in Y:
            mask |= 1 << self.image_indices[i]
        return PointSet(self.codomain, mask)
    
    def preimage_of(self, Z):
        return self.domain.point_set(
               i for i, j in enumerate(self.image_indices) if j in Z)
    
    def _finish(self):
        seen = {}
        self.injective = Trilean.true()
        for i, j in enumerate(self.image_indices):
            if j in seen:
                self.injective = Trilean.false(
                    {'points': (self.domain.points[seen[j]],
                                self.domain.points[i])})
                break
            seen[j] = i
        missing = [p for j, p in enumerate(self.codomain.points)
                   if j not in seen]
        self.surjective = (Trilean.true() if not missing else
                           Trilean.false({'point': missing[0]}))
        
        for j, p in enumerate(self.codomain.points):
            self.fibers[p] = self.preimage_of(self.codomain.singleton(j))
        
        bad = None
        for c in self.domain.closed_sets:
            if not self.codomain.is_closed(self.image_of(c)):
                bad = {'closed': c}
                break
        if bad is None:
            for o in self.domain.open_sets:
                if not self.codomain.is_open(self.image_of(o)):
                    bad = {'open': o}
                    break
        self.open_closed = Trilean.true() if bad is None else \
                           Trilean.false(bad)
        closed_map = all(self.codomain.is_closed(self.image_of(c))
                         for c in self.domain.closed_sets)
        self.homeomorphism = (self.injective.is_true and
                              self.surjective.is_true and
                              self.continuous and closed_map)


def analyze_map(M, kind='rho', bound=DEFAULT_ENUM_BOUND):
    """Analyze rho on PS_G(M) or phi on Spec_G(M)."""
    reduced = ReducedRing(M)
    if reduced.lazy:
        raise NotMaterializable('R/Ann(M) is Z; only pointwise rho and phi '
                                'are available')
    if kind == 'rho':
        domain = build_space(M, PRIMARY_SPECTRUM, bound)
        images = [rho(Q, M, bound, reduced) for Q in domain.points]
        vkind = 'nu'
    elif kind == 'phi':
        domain = build_space(M, PRIME_SPECTRUM, bound)
        images = [phi(P, M, reduced) for P in domain.points]
        vkind = 'V'
    else:
        raise ValueError('Unknown map kind ' + kind)
    codomain = build_ring_space(reduced.ring)
    analysis = MapAnalysis(kind, domain, codomain,
                           [codomain.index[p] for p in images])
    
    full = GradedSubmodule.full(M)
    analysis.continuous = True
    for ideal in reduced.ring.ideals():
        pre = analysis.preimage_of(ring_variety(ideal, codomain))
        expected = variety(full.scale(reduced.lift(ideal)), M, vkind,
                           domain)
        analysis.continuity_witnesses.append((ideal, pre))
        if pre != expected:
            analysis.continuous = False
    analysis._finish()
    
    if analysis.surjective.is_true:
        bad = None
        for N in enumerate_graded_submodules(M, bound):
            closed = variety(N, M, vkind, domain)
            target = ring_variety(reduced.project(colon_ideal(N, M)),
                                  codomain)
            if analysis.image_of(closed) != target:
                bad = {'submodule': N, 'image': analysis.image_of(closed),
                       'expected': target}
                break
            if analysis.image_of(closed.complement()) != target.complement():
                bad = {'submodule': N,
                       'image': analysis.image_of(closed.complement()),
                       'expected': target.complement()}
                break
        analysis.image_identities = Trilean.true() if bad is None else \
                                    Trilean.false(bad)
    else:
        analysis.image_identities = Trilean.unknown('map is not surjective')
    return analysis


class InducedMap:
    
    """pi: PS_G(M') -> PS_G(M), Q' -> f^{-1}(Q'), for a graded
    epimorphism f: M -> M'.
    """
    
    def __init__(self, morphism):
        check_supported(morphism)
        self.morphism = morphism
    
    @property
    def source(self):
        """M', where pi is defined."""
        return self.morphism.target
    
    @property
    def target(self):
        return self.morphism.source
    
    def __call__(self, Qp):
        return self.morphism.preimage(Qp)
    
    def image(self, Q):
        """f(Q) for a point Q of PS_G(M) containing ker f."""
        if Q.module != self.morphism.source:
            raise ModuleMismatch('Not a submodule of the morphism source')
        if not Q.contains(self.morphism.kernel()):
            raise ValueError('{} does not contain the kernel'.format(
                             Q.describe()))
        return self.morphism.image(Q)
    
    def analyze(self, bound=DEFAULT_ENUM_BOUND):
        """Extensional analysis over the two finite primary spectra."""
        Mp, M = self.source, self.target
        domain = build_space(Mp, PRIMARY_SPECTRUM, bound)
        codomain = build_space(M, PRIMARY_SPECTRUM, bound)
        images = [self(Qp) for Qp in domain.points]
        for Qp, Q in zip(domain.points, images):
            assert Q in codomain.index, \
                'Preimage of {} is not a point'.format(Qp.describe())
        analysis = MapAnalysis('pi', domain, codomain,
                               [codomain.index[Q] for Q in images])
        
        fullp = GradedSubmodule.full(Mp)
        analysis.continuous = True
        for N in enumerate_graded_submodules(M, bound):
            closed = variety(N, M, 'nu', codomain)
            pre = analysis.preimage_of(closed)
            expected = variety(fullp.scale(ideal_radical(colon_ideal(N, M))),
                               Mp, 'nu', domain)
            analysis.continuity_witnesses.append((N, pre))
            if pre != expected:
                analysis.continuous = False
        analysis._finish()
        assert analysis.injective.is_true, 'Induced map is not injective'
        return analysis


def induced_pi(f):
    return InducedMap(f)
