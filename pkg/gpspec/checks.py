"""The check catalog. Each check states one result about graded primary
spectra, guards the hypotheses it needs, and instantiates the statement
over a finite instance (or pointwise on an infinite one). A failing
check carries a counterexample naming the inputs and both sides of the
violated identity.

Implications whose hypothesis never holds on an instance pass
vacuously; those passes are counted separately.
"""


__all__ = [
    'CheckResult',
    'CheckContext',
    'Check',
    'CATALOG',
    'CHECK_IDS',
    'resolve_selection',
]


import itertools
import random
from functools import cached_property, reduce

from gpspec.errors import (RadicalUnknown, NotMaterializable, InfiniteModule,
                           EnumerationBound, UnknownCheck)
from gpspec.algebra import (Ideal, GradedSubmodule, colon_ideal,
                            ideal_radical, enumerate_graded_submodules,
                            submodule_from_generators)
from gpspec.morphisms import Projection, FactorPermutation
from gpspec.spectra import (is_graded_prime, is_graded_primary,
                            graded_radical_submodule, in_primary_spectrum,
                            enumerate_points, is_multiplication,
                            is_cancellation)
from gpspec.topology import (PRIMARY_SPECTRUM, PRIME_SPECTRUM, PointSet,
                             build_space, build_ring_space, variety,
                             point_in_variety, base_representatives,
                             base_open_S, ring_variety, ring_basic_open,
                             eta, gamma, lattice_closure, is_irreducible,
                             irreducible_components, generic_points,
                             quasi_compact_subcover, analyze,
                             is_primary_G_top, is_G_top, point_index_map)
from gpspec.structure import ReducedRing, InducedMap, rho, analyze_map
from gpspec.util import StopWatch, is_prime_number
from gpspec.workflow import Settings


class CheckResult:
    
    """Outcome of one check on one instance."""
    
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'
    
    def __init__(self, check_id, status, vacuous=False, counterexample=None,
                 reason=None, instance=None, elapsed=0.0, notes=()):
        assert status in (self.PASS, self.FAIL, self.SKIPPED)
        self.check_id = check_id
        self.status = status
        self.vacuous = vacuous
        """True for a pass whose hypothesis held nowhere."""
        self.counterexample = counterexample
        """For a failure: the inputs and both sides of the identity."""
        self.reason = reason
        self.instance = instance
        self.elapsed = elapsed
        self.notes = list(notes)
    
    @property
    def passed(self):
        return self.status == self.PASS
    
    @property
    def failed(self):
        return self.status == self.FAIL
    
    @property
    def skipped(self):
        return self.status == self.SKIPPED
    
    def __repr__(self):
        return 'CheckResult({}, {}, {})'.format(self.check_id, self.instance,
                                                self.status)


class CheckContext:
    
    """Everything the checks need to know about one instance. Values
    are computed on first use and shared by all checks.
    """
    
    def __init__(self, model, settings=None):
        self.model = model
        self.settings = settings if settings is not None else Settings()
        self.module = model.module
        self.ring = model.ring
        self.bound = self.settings.enum_bound
        self.conductor = self.settings.witness_conductor
        self.notes = []
        """Notes for the check currently running."""
        self._varieties = {}
    
    @property
    def instance(self):
        return self.model.name or self.module.describe()
    
    def note(self, text):
        if text not in self.notes:
            self.notes.append(text)
    
    @cached_property
    def finite_reason(self):
        """None when M can be enumerated, else the reason it cannot."""
        M = self.module
        if not M.is_finite:
            return 'module {} is infinite'.format(M.describe())
        if M.size > self.bound:
            return ('module of size {} exceeds enumeration bound {}'
                    .format(M.size, self.bound))
        return None
    
    @cached_property
    def full(self):
        return GradedSubmodule.full(self.module)
    
    @cached_property
    def zero(self):
        return GradedSubmodule.zero(self.module)
    
    @cached_property
    def submodules(self):
        return enumerate_graded_submodules(self.module, self.bound)
    
    @cached_property
    def proper(self):
        return [N for N in self.submodules if N.is_proper()]
    
    @cached_property
    def ps(self):
        return build_space(self.module, PRIMARY_SPECTRUM, self.bound)
    
    @cached_property
    def spec(self):
        return build_space(self.module, PRIME_SPECTRUM, self.bound)
    
    @cached_property
    def reduced(self):
        return ReducedRing(self.module)
    
    @cached_property
    def ring_space(self):
        return build_ring_space(self.reduced.ring)
    
    @cached_property
    def rho_map(self):
        return analyze_map(self.module, 'rho', self.bound)
    
    @cached_property
    def phi_map(self):
        return analyze_map(self.module, 'phi', self.bound)
    
    @cached_property
    def ps_report(self):
        return analyze(self.ps)
    
    @cached_property
    def spec_report(self):
        return analyze(self.spec)
    
    @cached_property
    def ring_report(self):
        return analyze(self.ring_space)
    
    @cached_property
    def multiplication(self):
        return is_multiplication(self.module, self.bound, self.conductor)
    
    @cached_property
    def cancellation(self):
        return is_cancellation(self.module)
    
    @cached_property
    def ideals(self):
        """Ideals of R, up to their action on M. Over Z these are (0)
        and (d) for d dividing the exponent of M, or d up to
        pointwise_bound when M has a free factor.
        """
        R = self.ring
        if R.is_finite:
            return R.ideals()
        e = self.module.exponent
        if e:
            values = [d for d in range(1, e + 1) if e % d == 0]
        else:
            values = range(1, self.settings.pointwise_bound + 1)
        return [Ideal(R, 0)] + [Ideal(R, d) for d in values]
    
    @cached_property
    def ring_elements(self):
        """Homogeneous ring elements r for the S_r identities."""
        R = self.ring
        if R.is_finite:
            return list(R.elements())
        return sorted(set(base_representatives(self.module)) |
                      set(range(self.settings.pointwise_bound + 1)))
    
    @cached_property
    def fibers(self):
        """Indices of PS_G(M) grouped by (Gr_M(Q) :_R M), read off the
        space data without going through rho.
        """
        groups = {}
        for i, p in enumerate(self.ps.radical_colons):
            groups.setdefault(p, []).append(i)
        return groups
    
    @cached_property
    def projections(self):
        """Canonical projections M -> M/K for proper K, smallest K
        first, at most max_morphisms of them.
        """
        cap = self.settings.max_morphisms
        if len(self.proper) > cap:
            self.note('{} of {} projections exercised'.format(
                      cap, len(self.proper)))
        return [Projection(self.module, K) for K in self.proper[:cap]]
    
    @cached_property
    def isomorphisms(self):
        """The presentation change M -> M/0 and the factor permutations."""
        M = self.module
        result = [Projection(M, self.zero)]
        for perm in itertools.permutations(range(M.rank)):
            result.append(FactorPermutation(M, perm))
        return result[:self.settings.max_morphisms]
    
    def _variety(self, N, kind):
        key = (N, kind)
        if key not in self._varieties:
            space = self.ps if kind in ('nu', 'nu_star') else self.spec
            self._varieties[key] = variety(N, self.module, kind, space)
        return self._varieties[key]
    
    def nu(self, N):
        return self._variety(N, 'nu')
    
    def nu_star(self, N):
        return self._variety(N, 'nu_star')
    
    def V(self, N):
        return self._variety(N, 'V')
    
    def V_star(self, N):
        return self._variety(N, 'V_star')
    
    def radical(self, N):
        """Gr_M(N) as a submodule; M when no graded prime contains N."""
        return graded_radical_submodule(N, self.module, self.bound,
                                        self.conductor).as_submodule(
                                        self.module)
    
    def pairs(self, items):
        """Unordered pairs (with repetition) of items, sampled down to
        pair_cutoff with the configured seed.
        """
        items = list(items)
        pairs = list(itertools.combinations_with_replacement(items, 2))
        cutoff = self.settings.pair_cutoff
        if len(pairs) <= cutoff:
            return pairs
        self.note('{} of {} pairs sampled'.format(cutoff, len(pairs)))
        return random.Random(self.settings.seed).sample(pairs, cutoff)
    
    def triples(self, items):
        items = list(items)
        samples = self.settings.subset_samples
        if len(items) ** 3 <= samples:
            return list(itertools.product(items, repeat=3))
        self.note('{} triples sampled'.format(samples))
        rng = random.Random(self.settings.seed)
        return [tuple(rng.choice(items) for _ in range(3))
                for _ in range(samples)]
    
    def subsets(self, space):
        """Every subset of a space with at most subset_cutoff points;
        otherwise the empty set, the whole space and subset_samples
        seeded random subsets.
        """
        if space.size <= self.settings.subset_cutoff:
            return [PointSet(space, m) for m in range(space.full_mask + 1)]
        self.note('{} subsets sampled from {} points'.format(
                  self.settings.subset_samples, space.size))
        rng = random.Random(self.settings.seed)
        masks = {0, space.full_mask}
        while len(masks) < self.settings.subset_samples + 2:
            masks.add(rng.getrandbits(space.size))
        return [PointSet(space, m) for m in sorted(masks)]


def _need_finite(ctx):
    return ctx.finite_reason


def _need_points(ctx):
    return None if ctx.ps.size else 'primary spectrum is empty'


def _need_prime_points(ctx):
    return None if ctx.spec.size else 'prime spectrum is empty'


def _need_rho_onto(ctx):
    return None if ctx.rho_map.surjective.is_true else 'rho is not surjective'


def _need_multiplication(ctx):
    m = ctx.multiplication
    if m.is_true:
        return None
    if m.is_false:
        return 'module is not a multiplication module'
    return 'multiplication property unknown: ' + m.reason


def _need_pid(ctx):
    R = ctx.ring
    if R.is_finite and not is_prime_number(R.modulus):
        return 'ring {} is not a principal ideal domain'.format(R.describe())
    return None


_REQUIREMENTS = {
    'finite': _need_finite,
    'points': _need_points,
    'prime_points': _need_prime_points,
    'rho_onto': _need_rho_onto,
    'multiplication': _need_multiplication,
    'pid': _need_pid,
}


class Check:
    
    """One statement. Subclasses set check_id and statement, list the
    standing hypotheses in requires, and implement run().
    """
    
    check_id = None
    statement = None
    requires = ('finite', 'points')
    
    def guard(self, ctx):
        """Reason to skip this check on ctx, or None."""
        for name in self.requires:
            reason = _REQUIREMENTS[name](ctx)
            if reason is not None:
                return reason
        return None
    
    def run(self, ctx):
        raise NotImplementedError
    
    def passed(self, vacuous=False, reason=None):
        return CheckResult(self.check_id, CheckResult.PASS, vacuous=vacuous,
                           reason=reason)
    
    def failed(self, counterexample, reason=None):
        return CheckResult(self.check_id, CheckResult.FAIL,
                           counterexample=counterexample, reason=reason)
    
    def skipped(self, reason):
        return CheckResult(self.check_id, CheckResult.SKIPPED, reason=reason)
    
    def evaluate(self, ctx):
        """Guard, then run; timing and notes are attached here."""
        ctx.notes = []
        with StopWatch() as w:
            try:
                reason = self.guard(ctx)
                result = (self.skipped(reason) if reason is not None
                          else self.run(ctx))
            except RadicalUnknown as e:
                result = self.skipped(str(e))
            except (NotMaterializable, InfiniteModule, EnumerationBound) as e:
                result = self.skipped(str(e))
            except AssertionError as e:
                result = self.failed(None, 'internal consistency: {}'.format(
                                     e))
        result.instance = ctx.instance
        result.elapsed = w.elapsed
        result.notes = list(ctx.notes)
        return result
    
    def __repr__(self):
        return '<check {}>'.format(self.check_id)


def _union(sets, empty):
    return reduce(lambda a, b: a | b, sets, empty)


# ---- Varieties ----


class StarVarietyLaws(Check):
    
    check_id = 'T2.1'
    statement = ('nu* sends 0 to the whole space and M to the empty set, '
                 'reverses inclusion, turns sums into intersections, maps '
                 'a union into the variety of the intersection and does not '
                 'see radicals')
    
    def run(self, ctx):
        if (ctx.nu_star(ctx.zero) != ctx.ps.full() or
                not ctx.nu_star(ctx.full).is_empty):
            return self.failed({'part': 1,
                                'nu_star_zero': ctx.nu_star(ctx.zero),
                                'nu_star_full': ctx.nu_star(ctx.full)})
        for N, N2 in ctx.pairs(ctx.submodules):
            a, b = ctx.nu_star(N), ctx.nu_star(N2)
            if (N2.contains(N) and not b <= a or
                    N.contains(N2) and not a <= b):
                return self.failed({'part': 2, 'N': N, 'N2': N2,
                                    'nu_star_N': a, 'nu_star_N2': b})
            total = ctx.nu_star(N + N2)
            if a & b != total:
                return self.failed({'part': 3, 'N': N, 'N2': N2,
                                    'intersection': a & b,
                                    'nu_star_sum': total})
            meet = ctx.nu_star(N & N2)
            if not (a | b) <= meet:
                return self.failed({'part': 4, 'N': N, 'N2': N2,
                                    'union': a | b,
                                    'nu_star_intersection': meet})
        for A, B, C in ctx.triples(ctx.submodules):
            left = ctx.nu_star(A) & ctx.nu_star(B) & ctx.nu_star(C)
            right = ctx.nu_star(A + B + C)
            if left != right:
                return self.failed({'part': 3, 'family': [A, B, C],
                                    'intersection': left,
                                    'nu_star_sum': right})
        for N in ctx.proper:
            rad = ctx.radical(N)
            if ctx.nu_star(N) != ctx.nu_star(rad):
                return self.failed({'part': 5, 'N': N, 'radical': rad,
                                    'nu_star_N': ctx.nu_star(N),
                                    'nu_star_radical': ctx.nu_star(rad)})
        return self.passed()


class MultiplicationIsPrimaryTop(Check):
    
    check_id = 'T2.2'
    statement = 'a multiplication module is a primary G-top module'
    
    def run(self, ctx):
        if not ctx.multiplication.is_true:
            return self.passed(vacuous=True,
                               reason='module is not a multiplication module')
        top = is_primary_G_top(ctx.module, ctx.bound, ctx.conductor)
        if top.is_true:
            return self.passed()
        return self.failed({'union_not_a_variety': top.witness})


class StarVarietiesOfProducts(Check):
    
    check_id = 'P2.3'
    statement = ('on a multiplication module nu*(N) u nu*(IM) = nu*(IN) '
                 'and nu*(IM) u nu*(JM) = nu*((IJ)M)')
    requires = ('finite', 'points', 'multiplication')
    
    def run(self, ctx):
        full = ctx.full
        for N in ctx.submodules:
            for I in ctx.ideals:
                left = ctx.nu_star(N) | ctx.nu_star(full.scale(I))
                right = ctx.nu_star(N.scale(I))
                if left != right:
                    return self.failed({'part': 1, 'N': N, 'I': I,
                                        'union': left,
                                        'nu_star_IN': right})
        for I, J in ctx.pairs(ctx.ideals):
            left = ctx.nu_star(full.scale(I)) | ctx.nu_star(full.scale(J))
            right = ctx.nu_star(full.scale(I * J))
            if left != right:
                return self.failed({'part': 2, 'I': I, 'J': J,
                                    'union': left, 'nu_star_IJM': right})
        return self.passed()


class VarietyLaws(Check):
    
    check_id = 'T2.4'
    statement = ('nu sends 0 to the whole space and M to the empty set, '
                 'intersections to sums of (N_i:M)M, unions to '
                 'intersections, and reverses inclusion')
    
    def _colon_sum(self, ctx, family):
        return reduce(lambda a, b: a + b,
                      (ctx.full.scale(colon_ideal(N, ctx.module))
                       for N in family))
    
    def run(self, ctx):
        if (ctx.nu(ctx.zero) != ctx.ps.full() or
                not ctx.nu(ctx.full).is_empty):
            return self.failed({'part': 1, 'nu_zero': ctx.nu(ctx.zero),
                                'nu_full': ctx.nu(ctx.full)})
        for N, N2 in ctx.pairs(ctx.submodules):
            a, b = ctx.nu(N), ctx.nu(N2)
            right = ctx.nu(self._colon_sum(ctx, [N, N2]))
            if a & b != right:
                return self.failed({'part': 2, 'family': [N, N2],
                                    'intersection': a & b,
                                    'nu_of_colon_sum': right})
            meet = ctx.nu(N & N2)
            if a | b != meet:
                return self.failed({'part': 3, 'N': N, 'N2': N2,
                                    'union': a | b,
                                    'nu_intersection': meet})
            if (N2.contains(N) and not b <= a or
                    N.contains(N2) and not a <= b):
                return self.failed({'part': 4, 'N': N, 'N2': N2,
                                    'nu_N': a, 'nu_N2': b})
        for family in ctx.triples(ctx.submodules):
            left = reduce(lambda x, y: x & y,
                          (ctx.nu(N) for N in family))
            right = ctx.nu(self._colon_sum(ctx, family))
            if left != right:
                return self.failed({'part': 2, 'family': list(family),
                                    'intersection': left,
                                    'nu_of_colon_sum': right})
        return self.passed()


class VarietyOfRadical(Check):
    
    check_id = 'P2.5'
    statement = ('nu(N) = nu(Gr_M(N)) when N is a point of PS_G(M) or M '
                 'is a multiplication module')
    
    def run(self, ctx):
        multiplication = ctx.multiplication.is_true
        applied = 0
        outside = []
        for N in ctx.proper:
            is_point = N in ctx.ps.index
            if not (is_point or multiplication):
                outside.append(N)
                continue
            applied += 1
            rad = ctx.radical(N)
            if ctx.nu(N) != ctx.nu(rad):
                return self.failed({
                    'N': N, 'radical': rad,
                    'hypothesis': 'point' if is_point else 'multiplication',
                    'nu_N': ctx.nu(N), 'nu_radical': ctx.nu(rad)})
        # Not asserted: outside both hypotheses the identity is only logged.
        holds = sum(1 for N in outside if ctx.nu(N) == ctx.nu(ctx.radical(N)))
        if holds:
            ctx.note('identity also holds for {} of {} submodules outside '
                     'both hypotheses'.format(holds, len(outside)))
        if not applied:
            return self.passed(vacuous=True,
                               reason='no proper submodule meets either '
                                      'hypothesis')
        if not multiplication:
            ctx.note('only points of PS_G(M) exercised')
        return self.passed()


class PrimeSubspace(Check):
    
    check_id = 'L2.6'
    statement = ('V and V* are the traces of nu and nu* on Spec_G(M); nu(N) '
                 'depends only on Gr((N:M)); nu(N) = nu((N:M)M) = '
                 'nu*((N:M)M) = nu*(Gr((N:M))M)')
    requires = ('finite', 'points', 'prime_points')
    
    def run(self, ctx):
        ps, spec, M = ctx.ps, ctx.spec, ctx.module
        where = point_index_map(spec, ps)
        if None in where:
            return self.failed({'part': 1,
                                'prime_not_a_point':
                                    spec.points[where.index(None)]})
        
        def trace(Y):
            return spec.point_set(i for i, j in enumerate(where) if j in Y)
        
        for N in ctx.submodules:
            if ctx.V(N) != trace(ctx.nu(N)):
                return self.failed({'part': 1, 'N': N, 'V': ctx.V(N),
                                    'trace_of_nu': trace(ctx.nu(N))})
            if ctx.V_star(N) != trace(ctx.nu_star(N)):
                return self.failed({'part': 2, 'N': N,
                                    'V_star': ctx.V_star(N),
                                    'trace_of_nu_star':
                                        trace(ctx.nu_star(N))})
            c = colon_ideal(N, M)
            cM = ctx.full.scale(c)
            sides = [('nu((N:M)M)', ctx.nu(cM)),
                     ('nu*((N:M)M)', ctx.nu_star(cM)),
                     ('nu*(Gr((N:M))M)',
                      ctx.nu_star(ctx.full.scale(ideal_radical(c))))]
            for label, Y in sides:
                if ctx.nu(N) != Y:
                    return self.failed({'part': 4, 'N': N,
                                        'nu_N': ctx.nu(N), label: Y})
        for I in ctx.ideals:
            IM = ctx.full.scale(I)
            if ctx.nu(IM) != ctx.nu_star(IM):
                return self.failed({'part': 4, 'I': I, 'nu_IM': ctx.nu(IM),
                                    'nu_star_IM': ctx.nu_star(IM)})
        for N, N2 in ctx.pairs(ctx.submodules):
            same = (ideal_radical(colon_ideal(N, M)) ==
                    ideal_radical(colon_ideal(N2, M)))
            if same and ctx.nu(N) != ctx.nu(N2):
                return self.failed({'part': 3, 'N': N, 'N2': N2,
                                    'nu_N': ctx.nu(N),
                                    'nu_N2': ctx.nu(N2)})
        for Q, Q2 in ctx.pairs(ps.points):
            same = (ideal_radical(colon_ideal(Q, M)) ==
                    ideal_radical(colon_ideal(Q2, M)))
            if ctx.nu(Q) == ctx.nu(Q2) and not same:
                return self.failed({'part': 3, 'converse': True,
                                    'Q': Q, 'Q2': Q2})
        return self.passed()


class PrimaryTopIsTop(Check):
    
    check_id = 'C2.7'
    statement = 'a primary G-top module is a G-top module'
    requires = ('finite',)
    
    def run(self, ctx):
        primary = is_primary_G_top(ctx.module, ctx.bound, ctx.conductor)
        if not primary.is_true:
            return self.passed(vacuous=True,
                               reason='module is not primary G-top')
        top = is_G_top(ctx.module, ctx.bound, ctx.conductor)
        if top.is_true:
            return self.passed()
        return self.failed({'union_not_a_variety': top.witness})


# ---- The natural map rho ----


def _separates_points(ctx):
    """nu(Q) = nu(Q') only for Q = Q'."""
    closures = [ctx.nu(Q) for Q in ctx.ps.points]
    return len(set(closures)) == len(closures)


def _fibers_at_most_one(ctx):
    return all(len(v) <= 1 for v in ctx.fibers.values())


def _direct_T0(space):
    closures = [lattice_closure(space.singleton(i)).mask
                for i in range(space.size)]
    return len(set(closures)) == len(closures)


class InjectivityCriteria(Check):
    
    check_id = 'P2.8'
    statement = ('nu separates points iff every fiber PS_G^p(M) has at '
                 'most one point iff rho is injective')
    
    def run(self, ctx):
        values = {
            'nu_separates_points': _separates_points(ctx),
            'fibers_at_most_one': _fibers_at_most_one(ctx),
            'rho_injective': ctx.rho_map.injective.is_true,
        }
        if len(set(values.values())) == 1:
            return self.passed()
        return self.failed(values)


class SingletonFibers(Check):
    
    check_id = 'C2.9'
    statement = 'if every fiber PS_G^p(M) is a single point, rho is bijective'
    
    def run(self, ctx):
        sizes = {p.describe(): len(ctx.fibers.get(ctx.reduced.lift(p), ()))
                 for p in ctx.ring_space.points}
        if any(s != 1 for s in sizes.values()):
            return self.passed(vacuous=True,
                               reason='some fiber is not a single point')
        m = ctx.rho_map
        if m.injective.is_true and m.surjective.is_true:
            return self.passed()
        return self.failed({'fiber_sizes': sizes, 'injective': m.injective,
                            'surjective': m.surjective})


class RhoPreimages(Check):
    
    check_id = 'P2.10'
    statement = 'rho^-1(V(I/Ann(M))) = nu(IM) for every ideal I'
    
    def run(self, ctx):
        M, ps, reduced = ctx.module, ctx.ps, ctx.reduced
        images = [rho(Q, M, ctx.bound, reduced) for Q in ps.points]
        for I in ctx.ideals:
            image = reduced.project(I + reduced.annihilator)
            pre = ps.point_set(i for i, p in enumerate(images) if image <= p)
            nuIM = ctx.nu(ctx.full.scale(I))
            if pre != nuIM:
                return self.failed({'I': I, 'preimage': pre, 'nu_IM': nuIM})
        return self.passed()


class RhoOpenAndClosed(Check):
    
    check_id = 'P2.11'
    statement = ('a surjective rho sends nu(N) to V((N:M)/Ann(M)) and its '
                 'complement to the complement, so rho is open and closed')
    requires = ('finite', 'points', 'rho_onto')
    
    def run(self, ctx):
        a, rs = ctx.rho_map, ctx.ring_space
        for N in ctx.submodules:
            closed = ctx.nu(N)
            target = ring_variety(
                     ctx.reduced.project(colon_ideal(N, ctx.module)), rs)
            image = a.image_of(closed)
            co_image = a.image_of(closed.complement())
            if image != target or co_image != target.complement():
                return self.failed({'N': N, 'image': image,
                                    'expected': target,
                                    'image_of_complement': co_image})
            if not rs.is_closed(image) or not rs.is_open(co_image):
                return self.failed({'N': N, 'image': image,
                                    'image_of_complement': co_image},
                                   'image is not closed or not open')
        if not (a.open_closed.is_true and a.image_identities.is_true):
            return self.failed({'open_closed': a.open_closed,
                                'image_identities': a.image_identities},
                               'map analysis disagrees')
        return self.passed()


class BijectiveIsHomeomorphism(Check):
    
    check_id = 'C2.12'
    statement = 'rho is bijective iff rho is a homeomorphism'
    
    def run(self, ctx):
        a = ctx.rho_map
        dom, cod = a.domain, a.codomain
        bijective = a.injective.is_true and a.surjective.is_true
        continuous = all(dom.is_closed(a.preimage_of(C))
                         for C in cod.closed_sets)
        closed_map = all(cod.is_closed(a.image_of(C))
                         for C in dom.closed_sets)
        homeomorphism = bijective and continuous and closed_map
        if bijective != homeomorphism or homeomorphism != a.homeomorphism:
            return self.failed({'bijective': bijective,
                                'continuous': continuous,
                                'closed_map': closed_map,
                                'analysis_homeomorphism': a.homeomorphism})
        return self.passed()


class Connectedness(Check):
    
    check_id = 'T2.13'
    statement = ('with rho onto, Spec_G(M) connected implies PS_G(M) '
                 'connected, which is equivalent to Spec_G(R/Ann(M)) '
                 'connected; with phi onto all three are equivalent')
    requires = ('finite', 'points', 'prime_points')
    
    def run(self, ctx):
        values = {'spec_connected': ctx.spec_report.connected,
                  'ps_connected': ctx.ps_report.connected,
                  'ring_connected': ctx.ring_report.connected}
        c1, c2, c3 = values.values()
        applied = False
        if ctx.rho_map.surjective.is_true:
            applied = True
            if (c1 and not c2) or c2 != c3:
                return self.failed(dict(values, part='i'))
        if ctx.phi_map.surjective.is_true:
            applied = True
            if not c1 == c2 == c3:
                return self.failed(dict(values, part='ii'))
        if not applied:
            return self.passed(vacuous=True,
                               reason='neither rho nor phi is surjective')
        return self.passed()


# ---- Morphisms ----


class PullbackAndPushforward(Check):
    
    check_id = 'L2.14'
    statement = ('for an epimorphism f: M -> M\', f^-1 of a point of '
                 'PS_G(M\') is a point of PS_G(M), and f(Q) is a point of '
                 'PS_G(M\') for points Q containing ker f')
    
    def run(self, ctx):
        M, bound = ctx.module, ctx.bound
        for f in ctx.projections + ctx.isomorphisms:
            Mp = f.target
            for Qp in enumerate_points(Mp, 'primary_spectrum', bound):
                Q = f.preimage(Qp)
                if Q not in ctx.ps.index:
                    return self.failed({'part': 1, 'morphism': repr(f),
                                        'point': Qp, 'preimage': Q})
            K = f.kernel()
            for Q in ctx.ps.points:
                if not Q.contains(K):
                    continue
                image = f.image(Q)
                if not (image.is_proper() and
                        in_primary_spectrum(image, Mp, bound)):
                    return self.failed({'part': 2, 'morphism': repr(f),
                                        'point': Q, 'image': image})
        return self.passed()


def _map_properties(a):
    dom, cod = a.domain, a.codomain
    return {
        'injective': len(set(a.image_indices)) == len(a.image_indices),
        'surjective': len(set(a.image_indices)) == cod.size,
        'continuous': all(dom.is_closed(a.preimage_of(C))
                          for C in cod.closed_sets),
        'closed_map': all(cod.is_closed(a.image_of(C))
                          for C in dom.closed_sets),
    }


class InducedMapEmbedding(Check):
    
    check_id = 'T2.15'
    statement = ('pi(Q\') = f^-1(Q\') is injective and continuous, and a '
                 'homeomorphism when surjective')
    
    def run(self, ctx):
        for f in ctx.projections:
            a = InducedMap(f).analyze(ctx.bound)
            props = _map_properties(a)
            if not (props['injective'] and props['continuous']):
                return self.failed(dict(props, morphism=repr(f)))
            if props['surjective'] and not props['closed_map']:
                return self.failed(dict(props, morphism=repr(f)),
                                   'surjective but not a homeomorphism')
        return self.passed()


class IsomorphismHomeomorphism(Check):
    
    check_id = 'C2.16'
    statement = 'an isomorphism M ~ M\' makes PS_G(M\') and PS_G(M) homeomorphic'
    
    def run(self, ctx):
        for f in ctx.isomorphisms:
            a = InducedMap(f).analyze(ctx.bound)
            props = _map_properties(a)
            if not all(props.values()):
                return self.failed(dict(props, morphism=repr(f)))
        return self.passed()


class RadicalPrimeCriterion(Check):
    
    check_id = 'T2.17'
    statement = ('over a principal ideal domain, for a cancellation '
                 'multiplication module, N is in PS_G(M) iff Gr_M(N) is in '
                 'Spec_G(M)')
    requires = ('pid', 'multiplication')
    
    def guard(self, ctx):
        reason = super().guard(ctx)
        if reason is None and not ctx.cancellation.is_true:
            reason = 'module is not a cancellation module'
        return reason
    
    def _candidates(self, ctx):
        if ctx.finite_reason is None:
            return ctx.proper
        ctx.note('pointwise over dM for d up to {}'.format(
                 ctx.settings.pointwise_bound))
        result = []
        for d in range(ctx.settings.pointwise_bound + 1):
            N = ctx.full.scale(Ideal(ctx.ring, d))
            if N.is_proper() and N not in result:
                result.append(N)
        return result
    
    def run(self, ctx):
        M = ctx.module
        for N in self._candidates(ctx):
            in_ps = in_primary_spectrum(N, M, ctx.bound)
            rad = ctx.radical(N)
            rad_prime = rad.is_proper() and is_graded_prime(rad, M)
            if in_ps != rad_prime:
                return self.failed({'N': N, 'radical': rad,
                                    'in_primary_spectrum': in_ps,
                                    'radical_is_prime': rad_prime})
        return self.passed()


# ---- The base S_r ----


class BaseOpens(Check):
    
    check_id = 'P3.1'
    statement = 'the sets S_r form a base for the Zariski topology'
    
    def run(self, ctx):
        ps = ctx.ps
        base = [U for _r, U in ps.base]
        for B in base:
            if not ps.is_open(B):
                return self.failed({'base_set': B}, 'base set is not open')
        for U in ps.open_sets:
            union = _union([B for B in base if B <= U], ps.empty())
            if union != U:
                return self.failed({'open': U, 'union_of_base': union})
        return self.passed()


class BaseOpenIdentities(Check):
    
    check_id = 'P3.2'
    statement = ('rho^-1(D_r) = S_r, rho(S_r) is contained in D_r (equal '
                 'when rho is onto), S_r n S_t = S_rt, S_r is empty for '
                 'nilpotent r and everything for a unit r')
    
    def run(self, ctx):
        ps, rs, a, R = ctx.ps, ctx.ring_space, ctx.rho_map, ctx.ring
        onto = a.surjective.is_true
        S = {r: base_open_S(r, ps) for r in ctx.ring_elements}
        for r, Sr in S.items():
            D = ring_basic_open(r, rs)
            if a.preimage_of(D) != Sr:
                return self.failed({'part': 1, 'r': r, 'S_r': Sr,
                                    'preimage_of_D_r': a.preimage_of(D)})
            image = a.image_of(Sr)
            if not image <= D or (onto and image != D):
                return self.failed({'part': 2, 'r': r, 'image': image,
                                    'D_r': D, 'rho_onto': onto})
            if R.is_nilpotent(r) and not Sr.is_empty:
                return self.failed({'part': 4, 'r': r, 'S_r': Sr})
            if R.is_unit(r) and Sr != ps.full():
                return self.failed({'part': 5, 'r': r, 'S_r': Sr})
        for r, t in ctx.pairs(ctx.ring_elements):
            Srt = base_open_S(r * t, ps)
            if S[r] & S[t] != Srt:
                return self.failed({'part': 3, 'r': r, 't': t,
                                    'intersection': S[r] & S[t],
                                    'S_rt': Srt})
        return self.passed()


class FieldTrivialTopology(Check):
    
    check_id = 'E3.3a'
    statement = 'over a field the base is {PS_G(M), empty} and the topology is trivial'
    
    def guard(self, ctx):
        R = ctx.ring
        if not (R.is_finite and is_prime_number(R.modulus)):
            return 'ring {} is not a field'.format(R.describe())
        return super().guard(ctx)
    
    def run(self, ctx):
        ps = ctx.ps
        masks = {U.mask for _r, U in ps.base}
        if not masks <= {0, ps.full_mask}:
            return self.failed({'base': [U for _r, U in ps.base]})
        p = ctx.ring.modulus
        for r in ctx.ring_elements:
            expected = ps.empty() if r % p == 0 else ps.full()
            if base_open_S(r, ps) != expected:
                return self.failed({'r': r, 'S_r': base_open_S(r, ps),
                                    'expected': expected})
        if not ctx.ps_report.trivial_topology:
            return self.failed({'closed_sets': ps.closed_sets})
        return self.passed()


class Z8TrivialTopology(Check):
    
    check_id = 'E3.3b'
    statement = ('on Z8 over Z8, S_r is everything for odd r and empty for '
                 'even r, so the topology is trivial though Z8 is no field')
    
    def guard(self, ctx):
        M = ctx.module
        if not (ctx.ring.modulus == 8 and M.rank == 1 and
                M.factors[0][0] == 8):
            return 'module is not Z8 over Z8'
        return super().guard(ctx)
    
    def run(self, ctx):
        ps, M = ctx.ps, ctx.module
        expected_points = {submodule_from_generators([(k,)], M)
                           for k in (0, 4, 2)}
        if set(ps.points) != expected_points:
            return self.failed({'points': list(ps.points),
                                'expected': sorted(expected_points,
                                                   key=lambda N:
                                                   N.sort_key())})
        for r in range(8):
            expected = ps.full() if r % 2 else ps.empty()
            if base_open_S(r, ps) != expected:
                return self.failed({'r': r, 'S_r': base_open_S(r, ps),
                                    'expected': expected})
        if not ctx.ps_report.trivial_topology:
            return self.failed({'closed_sets': ps.closed_sets})
        if is_prime_number(ctx.ring.modulus):
            return self.failed({'ring': ctx.ring.describe()},
                               'ring is a field')
        return self.passed()


class QuasiCompactness(Check):
    
    check_id = 'T3.4'
    statement = 'with rho onto every S_r and PS_G(M) itself are quasi compact'
    requires = ('finite', 'points', 'rho_onto')
    
    def run(self, ctx):
        ps = ctx.ps
        base = [U for _r, U in ps.base]
        for r, U in [(None, ps.full())] + list(ps.base):
            cover = quasi_compact_subcover(U, [B for B in base if B <= U])
            if cover is None or not U <= _union(cover, ps.empty()):
                return self.failed({'r': r, 'open': U,
                                    'subcover': cover})
        if not ctx.ps_report.quasi_compact:
            return self.failed({'quasi_compact': False},
                               'topology report disagrees')
        return self.passed()


class CompactOpenBase(Check):
    
    check_id = 'T3.5'
    statement = ('with rho onto the quasi compact opens are closed under '
                 'finite intersection and form a base')
    requires = ('finite', 'points', 'rho_onto')
    
    def run(self, ctx):
        ps = ctx.ps
        base = [U for _r, U in ps.base]
        compact = [U for U in ps.open_sets
                   if quasi_compact_subcover(
                      U, [B for B in base if B <= U]) is not None]
        masks = {U.mask for U in compact}
        for U, V in ctx.pairs(compact):
            if (U & V).mask not in masks:
                return self.failed({'U': U, 'V': V, 'intersection': U & V})
        for U in ps.open_sets:
            if _union([C for C in compact if C <= U], ps.empty()) != U:
                return self.failed({'open': U},
                                   'not a union of compact opens')
        if not ctx.ps_report.compact_opens_base:
            return self.failed({'compact_opens_base': False},
                               'topology report disagrees')
        return self.passed()


# ---- Closures and irreducibility ----


class ClosureFormula(Check):
    
    check_id = 'P4.1'
    statement = 'Cl(Y) = nu(eta(Y)); Y is closed iff nu(eta(Y)) = Y'
    
    def run(self, ctx):
        ps = ctx.ps
        for Y in ctx.subsets(ps):
            smallest = lattice_closure(Y)
            formula = ctx.nu(eta(Y))
            if smallest != formula:
                return self.failed({'Y': Y, 'smallest_closed_superset':
                                    smallest, 'nu_eta': formula})
            if ps.is_closed(Y) != (formula == Y):
                return self.failed({'Y': Y, 'closed': ps.is_closed(Y),
                                    'nu_eta': formula})
        return self.passed()


class PointClosuresIrreducible(Check):
    
    check_id = 'T4.2'
    statement = ('nu(Q) is an irreducible closed set for every point Q; if 0 '
                 'is a point the whole space is irreducible')
    
    def run(self, ctx):
        ps = ctx.ps
        for i, Q in enumerate(ps.points):
            Y = ctx.nu(Q)
            if not is_irreducible(Y):
                return self.failed({'Q': Q, 'nu_Q': Y}, 'not irreducible')
            if Y != lattice_closure(ps.singleton(i)):
                return self.failed({'Q': Q, 'nu_Q': Y,
                                    'closure': lattice_closure(
                                        ps.singleton(i))})
        if ctx.zero in ps.index and not is_irreducible(ps.full()):
            return self.failed({'zero_is_point': True},
                               'space is not irreducible')
        return self.passed()


class RingIrreducibility(Check):
    
    check_id = 'L4.3'
    statement = ('Y in Spec(R/Ann(M)) is irreducible iff the intersection of '
                 'its members is prime')
    
    def run(self, ctx):
        for Z in ctx.subsets(ctx.ring_space):
            irreducible = is_irreducible(Z)
            prime = gamma(Z).is_prime()
            if irreducible != prime:
                return self.failed({'Y': Z, 'irreducible': irreducible,
                                    'gamma': gamma(Z), 'prime': prime})
        return self.passed()


class IrreducibleSets(Check):
    
    check_id = 'T4.4'
    statement = ('eta(Y) primary implies Y irreducible; Y irreducible '
                 'implies the intersection of the (Gr_M(Q):M) over Y equals '
                 '(eta(Y):M) and is prime')
    
    def run(self, ctx):
        ps, M = ctx.ps, ctx.module
        for Y in ctx.subsets(ps):
            if Y.is_empty:
                continue
            e = eta(Y)
            irreducible = is_irreducible(Y)
            if not irreducible and is_graded_primary(e, M):
                return self.failed({'part': 1, 'Y': Y, 'eta': e})
            if not irreducible:
                continue
            direct = reduce(lambda a, b: a & b,
                            (ps.radical_colons[i] for i in Y))
            via_rho = ctx.reduced.lift(gamma(ctx.rho_map.image_of(Y)))
            colon = colon_ideal(e, M)
            if not (direct == colon == via_rho and colon.is_prime()):
                return self.failed({'part': 2, 'Y': Y, 'gamma': direct,
                                    'gamma_through_rho': via_rho,
                                    'colon_of_eta': colon})
        return self.passed()


class GenericPoints(Check):
    
    check_id = 'T4.5'
    statement = ('with rho onto the irreducible closed sets are exactly the '
                 'nu(Q), so each has a generic point')
    requires = ('finite', 'points', 'rho_onto')
    
    def run(self, ctx):
        ps = ctx.ps
        point_closures = {ctx.nu(Q) for Q in ps.points}
        for C in ps.closed_sets:
            irreducible = is_irreducible(C)
            if irreducible != (C in point_closures):
                return self.failed({'closed': C, 'irreducible': irreducible,
                                    'is_nu_of_point':
                                        C in point_closures})
            if irreducible and not generic_points(C):
                return self.failed({'closed': C}, 'no generic point')
        return self.passed()


def _minimal_primes(ring_space):
    return [p for p in ring_space.points
            if not any(q < p for q in ring_space.points)]


class ComponentsFromMinimalPrimes(Check):
    
    check_id = 'T4.6'
    statement = ('rho(Q) minimal implies nu(Q) is an irreducible component; '
                 'the converse holds when rho is onto')
    
    def run(self, ctx):
        ps, a, rs = ctx.ps, ctx.rho_map, ctx.ring_space
        components = set(irreducible_components(ps))
        minimal = set(_minimal_primes(rs))
        onto = a.surjective.is_true
        for i, Q in enumerate(ps.points):
            p = rs.points[a.image_indices[i]]
            is_component = ctx.nu(Q) in components
            if p in minimal and not is_component:
                return self.failed({'Q': Q, 'rho_Q': p, 'nu_Q': ctx.nu(Q)},
                                   'minimal image but not a component')
            if onto and is_component and p not in minimal:
                return self.failed({'Q': Q, 'rho_Q': p, 'nu_Q': ctx.nu(Q)},
                                   'component but image not minimal')
        return self.passed()


class ComponentDecomposition(Check):
    
    check_id = 'C4.7'
    statement = ('with rho onto and K the points over minimal primes, the '
                 'nu(Q) for Q in K are the components and cover PS_G(M), '
                 'their images cover Spec(R/Ann(M)), the V(Q) cover '
                 'Spec_G(M), and a prime 0 leaves one component')
    requires = ('finite', 'points', 'rho_onto')
    
    def run(self, ctx):
        ps, spec, rs, a = ctx.ps, ctx.spec, ctx.ring_space, ctx.rho_map
        minimal = set(_minimal_primes(rs))
        K = [Q for i, Q in enumerate(ps.points)
             if rs.points[a.image_indices[i]] in minimal]
        components = set(irreducible_components(ps))
        from_K = {ctx.nu(Q) for Q in K}
        if from_K != components:
            return self.failed({'part': 1, 'K': K,
                                'components': sorted(components,
                                                     key=lambda c: c.mask),
                                'nu_of_K': sorted(from_K,
                                                  key=lambda c: c.mask)})
        cover = _union([ctx.nu(Q) for Q in K], ps.empty())
        if cover != ps.full():
            return self.failed({'part': 2, 'K': K, 'union': cover})
        ring_cover = _union(
            [ring_variety(ctx.reduced.project(colon_ideal(Q, ctx.module)),
                          rs) for Q in K], rs.empty())
        if ring_cover != rs.full():
            return self.failed({'part': 3, 'K': K, 'union': ring_cover})
        prime_cover = _union([ctx.V(Q) for Q in K], spec.empty())
        if prime_cover != spec.full():
            return self.failed({'part': 4, 'K': K, 'union': prime_cover})
        if ctx.zero in spec.index and components != {ps.full()}:
            return self.failed({'part': 5, 'components': list(components)})
        return self.passed()


class PrimaryIntersection(Check):
    
    check_id = 'P4.8'
    statement = ('over a principal ideal domain, on a multiplication module, '
                 'a nonzero primary eta(Y) puts Y inside one fiber over a '
                 'maximal ideal')
    requires = ('pid', 'finite', 'points', 'multiplication')
    
    def run(self, ctx):
        ps, M = ctx.ps, ctx.module
        applied = 0
        for Y in ctx.subsets(ps):
            if Y.is_empty:
                continue
            e = eta(Y)
            if e.is_zero() or not is_graded_primary(e, M):
                continue
            applied += 1
            colons = {ps.radical_colons[i] for i in Y}
            if len(colons) != 1 or not next(iter(colons)).is_maximal():
                return self.failed({'Y': Y, 'eta': e,
                                    'fibers': sorted(colons,
                                                     key=lambda p:
                                                     p.generator)})
        if not applied:
            return self.passed(vacuous=True,
                               reason='no subset has a nonzero primary eta')
        return self.passed()


class T1Collapse(Check):
    
    check_id = 'P4.9'
    statement = 'if PS_G(M) is T1 then PS_G(M) = Max_G(M) = Spec_G(M)'
    
    def run(self, ctx):
        ps = ctx.ps
        t1 = all(lattice_closure(ps.singleton(i)) == ps.singleton(i)
                 for i in range(ps.size))
        if not t1:
            return self.passed(vacuous=True, reason='space is not T1')
        points = set(ps.points)
        maximal = set(enumerate_points(ctx.module, 'maximal', ctx.bound))
        primes = set(ctx.spec.points)
        if not points == maximal == primes:
            key = GradedSubmodule.sort_key
            return self.failed({'points': sorted(points, key=key),
                                'maximal': sorted(maximal, key=key),
                                'prime': sorted(primes, key=key)})
        return self.passed()


class SpectralIffT0(Check):
    
    check_id = 'T4.10'
    statement = 'with rho onto PS_G(M) is spectral iff it is T0'
    requires = ('finite', 'points', 'rho_onto')
    
    def run(self, ctx):
        t0 = _direct_T0(ctx.ps)
        spectral = ctx.ps_report.spectral
        if t0 != spectral:
            return self.failed({'T0': t0, 'spectral': spectral,
                                'hochster': ctx.ps_report.hochster})
        return self.passed()


class SpectralEquivalences(Check):
    
    check_id = 'T4.11'
    statement = ('with rho onto: T0, nu separates points, rho injective, '
                 'fibers of size at most one, and spectral are equivalent')
    requires = ('finite', 'points', 'rho_onto')
    
    def run(self, ctx):
        values = {
            'T0': _direct_T0(ctx.ps),
            'nu_separates_points': _separates_points(ctx),
            'rho_injective': ctx.rho_map.injective.is_true,
            'fibers_at_most_one': _fibers_at_most_one(ctx),
            'spectral': ctx.ps_report.spectral,
        }
        if len(set(values.values())) == 1:
            if not values['T0']:
                ctx.note('all five statements are false')
            return self.passed()
        return self.failed(values)


# ---- Worked examples ----


class PrimaryNotPrime(Check):
    
    check_id = 'E1'
    statement = '4Z is a point of PS_G(Z) but not a graded prime of Z'
    requires = ()
    
    def guard(self, ctx):
        M = ctx.module
        if not (ctx.ring.modulus == 0 and M.rank == 1 and
                M.factors[0][0] == 0):
            return 'module is not Z over Z'
        return None
    
    def run(self, ctx):
        M = ctx.module
        Q = ctx.full.scale(Ideal(ctx.ring, 4))
        in_ps = in_primary_spectrum(Q, M, ctx.bound)
        prime = is_graded_prime(Q, M)
        if in_ps and not prime:
            return self.passed()
        return self.failed({'Q': Q, 'in_primary_spectrum': in_ps,
                            'prime': prime})


class StarUnionCounterexample(Check):
    
    check_id = 'CE2.1'
    statement = ('on Z x Z, P = 0 lies in nu*(N n N\') but in neither '
                 'nu*(N) nor nu*(N\') for N = 4Z x 0 and N\' = 0 x 4Z')
    requires = ()
    
    def guard(self, ctx):
        M = ctx.module
        if not (ctx.ring.modulus == 0 and M.rank == 2 and
                all(o == 0 for o, _d in M.factors)):
            return 'module is not Z x Z over Z'
        return None
    
    def run(self, ctx):
        M, bound = ctx.module, ctx.bound
        N = submodule_from_generators([4 * M.basis_element(0)], M)
        N2 = submodule_from_generators([4 * M.basis_element(1)], M)
        P = ctx.zero
        if not is_graded_prime(P, M):
            return self.failed({'P': P}, '0 is not a graded prime')
        meet = N & N2
        values = {
            'in_nu_star_intersection': point_in_variety(meet, P, M,
                                                        'nu_star', bound),
            'in_nu_star_N': point_in_variety(N, P, M, 'nu_star', bound),
            'in_nu_star_N2': point_in_variety(N2, P, M, 'nu_star', bound),
        }
        if (values['in_nu_star_intersection'] and
                not values['in_nu_star_N'] and not values['in_nu_star_N2']):
            if ctx.multiplication.is_false:
                ctx.note('module is not a multiplication module')
            return self.passed()
        return self.failed(dict(values, N=N, N2=N2, P=P))


class ReducibleSpectrum(Check):
    
    check_id = 'E4.2'
    statement = ('PS_G(Z6) = {3Z6, 2Z6} = nu(0) is the union of the two '
                 'singletons nu(3Z6), nu(2Z6) and is not irreducible')
    
    def guard(self, ctx):
        M = ctx.module
        if not (ctx.ring.modulus == 6 and M.rank == 1 and
                M.factors[0][0] == 6):
            return 'module is not Z6 over Z6'
        return super().guard(ctx)
    
    def run(self, ctx):
        ps, M = ctx.ps, ctx.module
        A = submodule_from_generators([(3,)], M)
        B = submodule_from_generators([(2,)], M)
        if set(ps.points) != {A, B}:
            return self.failed({'points': list(ps.points),
                                'expected': [A, B]})
        for Q in (A, B):
            if ctx.nu(Q) != ps.singleton(ps.index[Q]):
                return self.failed({'Q': Q, 'nu_Q': ctx.nu(Q)})
        if ctx.nu(ctx.zero) != ps.full() or \
                ctx.nu(A) | ctx.nu(B) != ps.full():
            return self.failed({'nu_zero': ctx.nu(ctx.zero),
                                'union': ctx.nu(A) | ctx.nu(B)})
        if is_irreducible(ps.full()):
            return self.failed({'space': ps.full()}, 'space is irreducible')
        return self.passed()


CATALOG = [cls() for cls in (
    StarVarietyLaws,
    MultiplicationIsPrimaryTop,
    StarVarietiesOfProducts,
    VarietyLaws,
    VarietyOfRadical,
    PrimeSubspace,
    PrimaryTopIsTop,
    InjectivityCriteria,
    SingletonFibers,
    RhoPreimages,
    RhoOpenAndClosed,
    BijectiveIsHomeomorphism,
    Connectedness,
    PullbackAndPushforward,
    InducedMapEmbedding,
    IsomorphismHomeomorphism,
    RadicalPrimeCriterion,
    BaseOpens,
    BaseOpenIdentities,
    FieldTrivialTopology,
    Z8TrivialTopology,
    QuasiCompactness,
    CompactOpenBase,
    ClosureFormula,
    PointClosuresIrreducible,
    RingIrreducibility,
    IrreducibleSets,
    GenericPoints,
    ComponentsFromMinimalPrimes,
    ComponentDecomposition,
    PrimaryIntersection,
    T1Collapse,
    SpectralIffT0,
    SpectralEquivalences,
    PrimaryNotPrime,
    StarUnionCounterexample,
    ReducibleSpectrum,
)]
"""All checks, in report order."""

CHECK_IDS = tuple(c.check_id for c in CATALOG)


def resolve_selection(selection='all'):
    """Checks named by selection, in catalog order. A sub-statement id
    such as T2.4.3 selects its parent; unknown ids raise UnknownCheck.
    """
    if selection is None or selection == 'all':
        return list(CATALOG)
    if isinstance(selection, str):
        selection = [selection]
    by_id = {c.check_id: c for c in CATALOG}
    chosen = set()
    for raw in selection:
        key = raw
        while key not in by_id and '.' in key:
            head, _, tail = key.rpartition('.')
            if not tail.isalnum():
                break
            key = head
        if key not in by_id:
            raise UnknownCheck('Unknown check id ' + raw)
        chosen.add(key)
    return [c for c in CATALOG if c.check_id in chosen]
