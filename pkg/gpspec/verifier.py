"""Ensure that the lattice-based procedures agree with the brute-force
definitions on every finite instance of the corpus.
"""


__all__ = [
    'OracleVerifier',
]


from gpspec.algebra import (BaseRing, colon_ideal, ideal_radical,
                            enumerate_graded_submodules)
from gpspec.oracles import (colon_exhaustive, radical_exhaustive,
                            is_prime_exhaustive, is_primary_exhaustive,
                            graded_subgroups_exhaustive, submodule_elements)
from gpspec.spectra import is_graded_prime, is_graded_primary
from gpspec.workflow import Task


class OracleVerifier(Task):
    
    """Compare colon ideals, primality and primariness of every graded
    submodule, and radicals of ideals of small rings, against the
    exhaustive definitions. Stops at the first disagreement.
    """
    
    radical_moduli = range(2, 61)
    """Rings Z_n whose ideal radicals are compared."""
    
    lattice_size_limit = 64
    """Modules up to this size also have their submodule lattice
    compared against a subgroup search.
    """
    
    def __init__(self, workflow, models):
        super().__init__(workflow)
        self.models = list(models)
    
    def verify_model(self, model):
        """Return None on agreement, or a description of the first
        disagreement.
        """
        M = model.module
        bound = self.settings.enum_bound
        subs = enumerate_graded_submodules(M, bound)
        if M.size <= self.lattice_size_limit:
            found = {submodule_elements(N) for N in subs}
            expected = set(graded_subgroups_exhaustive(M))
            if found != expected:
                return 'graded submodule lattice ({} found, {} expected)' \
                       .format(len(found), len(expected))
        for N in subs:
            if colon_ideal(N, M) != colon_exhaustive(N, M):
                return 'colon of ' + N.describe()
            if not N.is_proper():
                continue
            if is_graded_prime(N, M) != is_prime_exhaustive(N, M):
                return 'primality of ' + N.describe()
            if is_graded_primary(N, M) != is_primary_exhaustive(N, M):
                return 'primariness of ' + N.describe()
        return None
    
    def verify_radicals(self):
        for n in self.radical_moduli:
            R = BaseRing(n)
            for I in R.ideals():
                if ideal_radical(I) != radical_exhaustive(I):
                    return 'radical of {} in {}'.format(I.describe(),
                                                        R.describe())
        return None
    
    def run(self):
        """Return True when everything agrees."""
        finite = [m for m in self.models if m.module.is_finite]
        for i, model in enumerate(finite, 1):
            self.progress('Verifying instance {:<24} ({}/{})'.format(
                          model.name + ' ...', i, len(finite)))
            bad = self.verify_model(model)
            if bad is not None:
                self.print('Output disagrees for instance ' + model.name)
                self.print('  ' + bad)
                return False
        bad = self.verify_radicals()
        if bad is not None:
            self.print('Output disagrees for ' + bad)
            return False
        self.print('Output agrees on all instances.')
        return True
