"""Graded epimorphisms between modules over the same ring: canonical
projections onto quotients, factor permutations, and composites.
"""


__all__ = [
    'GradedMorphism',
    'Projection',
    'FactorPermutation',
    'Composite',
    'quotient_module',
    'identity_morphism',
    'check_supported',
]


from gpspec.errors import ModuleMismatch, UnsupportedMorphism
from gpspec.algebra import (GradedModule, ModuleElement, GradedSubmodule,
                            submodule_from_generators)
from gpspec.lattice import smith_form, row_times


class GradedMorphism:
    
    """Degree-preserving epimorphism source -> target."""
    
    source = None
    target = None
    
    def image_element(self, x):
        raise NotImplementedError
    
    def preimage(self, N):
        """f^{-1}(N) for a graded submodule N of the target."""
        raise NotImplementedError
    
    def __call__(self, x):
        return self.image_element(x)
    
    def _check_source(self, x):
        if x.module != self.source:
            raise ModuleMismatch('Argument is not in the morphism source')
    
    def _check_target(self, N):
        if N.module != self.target:
            raise ModuleMismatch('Argument is not in the morphism target')
    
    def image(self, N):
        """f(N) for a graded submodule N of the source."""
        self._check_source(N)
        return submodule_from_generators(
               [self.image_element(x) for x in N.generator_elements()],
               self.target)
    
    def kernel(self):
        return self.preimage(GradedSubmodule.zero(self.target))
    
    def then(self, other):
        return Composite(self, other)


class Projection(GradedMorphism):
    
    """Canonical projection M -> M/K. The quotient is presented degree
    by degree through the Smith form of K_g, keeping only the
    nontrivial cyclic factors.
    """
    
    def __init__(self, source, kernel):
        if kernel.module != source:
            raise ModuleMismatch('Kernel is not a submodule of the source')
        self.source = source
        self.kernel_submodule = kernel
        
        self._charts = {}
        factors = []
        for g in source.degrees():
            k = len(source.factor_indices(g))
            diag, V, Vinv = smith_form(kernel.block(g), k)
            moduli = [diag[j] if j < len(diag) else 0 for j in range(k)]
            kept = [j for j in range(k) if moduli[j] != 1]
            self._charts[g] = (diag, V, Vinv, moduli, kept)
            factors.extend((moduli[j], g) for j in kept)
        self.target = GradedModule(source.ring, source.group, factors)
    
    def image_element(self, x):
        self._check_source(x)
        coords = [0] * self.target.rank
        for g in self.source.degrees():
            _diag, V, _Vinv, moduli, kept = self._charts[g]
            w = row_times(list(x.local(g)), V)
            idx = self.target.factor_indices(g)
            for i, j in zip(idx, kept):
                coords[i] = w[j]
        return ModuleElement(self.target, coords)
    
    def preimage(self, N):
        self._check_target(N)
        blocks = {}
        for g in self.source.degrees():
            diag, _V, Vinv, moduli, kept = self._charts[g]
            k = len(moduli)
            rows = []
            for r in N.block(g):
                y = [0] * k
                for a, j in zip(r, kept):
                    y[j] = a
                rows.append(y)
            for j, d in enumerate(diag):
                rows.append([d if t == j else 0 for t in range(k)])
            blocks[g] = [tuple(row_times(y, Vinv)) for y in rows]
        return GradedSubmodule(self.source, blocks)
    
    def kernel(self):
        return self.kernel_submodule
    
    def __repr__(self):
        return 'Projection({} -> {})'.format(self.source.describe(),
                                             self.target.describe())


class FactorPermutation(GradedMorphism):
    
    """Isomorphism that moves source factor i to target position
    perm[i]; each factor keeps its order and degree.
    """
    
    def __init__(self, source, perm):
        perm = tuple(perm)
        if sorted(perm) != list(range(source.rank)):
            raise UnsupportedMorphism('{} is not a permutation of {} factors'
                                      .format(perm, source.rank))
        self.source = source
        self.perm = perm
        factors = [None] * source.rank
        for i, p in enumerate(perm):
            factors[p] = source.factors[i]
        self.target = GradedModule(source.ring, source.group, factors)
    
    def image_element(self, x):
        self._check_source(x)
        coords = [0] * self.source.rank
        for i, p in enumerate(self.perm):
            coords[p] = x.coords[i]
        return ModuleElement(self.target, coords)
    
    def preimage(self, N):
        self._check_target(N)
        gens = []
        for y in N.generators():
            gens.append(tuple(y[p] for p in self.perm))
        return submodule_from_generators(gens, self.source)
    
    def kernel(self):
        return GradedSubmodule.zero(self.source)
    
    def __repr__(self):
        return 'FactorPermutation({})'.format(self.perm)


class Composite(GradedMorphism):
    
    """first, then second."""
    
    def __init__(self, first, second):
        if first.target != second.source:
            raise ModuleMismatch('Morphisms do not compose')
        self.first = first
        self.second = second
        self.source = first.source
        self.target = second.target
    
    def image_element(self, x):
        return self.second.image_element(self.first.image_element(x))
    
    def preimage(self, N):
        return self.first.preimage(self.second.preimage(N))
    
    def __repr__(self):
        return 'Composite({!r}, {!r})'.format(self.first, self.second)


def quotient_module(M, K):
    """Return (M/K, projection)."""
    f = Projection(M, K)
    return f.target, f


def identity_morphism(M):
    return FactorPermutation(M, range(M.rank))


def check_supported(f):
    """Raise UnsupportedMorphism unless f is built from supported
    epimorphisms.
    """
    if isinstance(f, Composite):
        check_supported(f.first)
        check_supported(f.second)
    elif not isinstance(f, (Projection, FactorPermutation)):
        raise UnsupportedMorphism('Unsupported morphism {!r}'.format(f))
