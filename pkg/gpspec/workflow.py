"""Workflow management: settings, tasks and their output streams."""


__all__ = [
    'Settings',
    'Task',
    'Workflow',
]


import builtins
import os
import sys

from gpspec.algebra import DEFAULT_ENUM_BOUND


class Settings:
    
    """Tunable parameters. Class attributes give the defaults; any of
    them can be overridden by keyword in the constructor.
    """
    
    enum_bound = DEFAULT_ENUM_BOUND
    """Largest module cardinality that may be enumerated."""
    
    subset_cutoff = 12
    """Spaces with at most this many points have every subset checked."""
    
    subset_samples = 256
    """Number of random subsets checked on larger spaces."""
    
    seed = 0
    """Seed for all sampling."""
    
    witness_conductor = 4
    """Largest c tried for c e_i witnesses on infinite modules."""
    
    pointwise_bound = 36
    """Largest d tried when sampling submodules dZ of an infinite module."""
    
    max_morphisms = 24
    """Largest number of canonical projections exercised per instance."""
    
    pair_cutoff = 4096
    """Pair quantifiers above this many pairs are sampled instead."""
    
    env_enum_bound = 'GPS_ENUM_BOUND'
    """Environment variable mirroring enum_bound."""
    
    def __init__(self, **kargs):
        for key, value in kargs.items():
            if not hasattr(type(self), key):
                raise ValueError('Unknown setting ' + key)
            setattr(self, key, value)
    
    @classmethod
    def from_env(cls, environ=None, **kargs):
        """Settings with enum_bound taken from the environment when
        present. Explicit keywords win.
        """
        environ = os.environ if environ is None else environ
        raw = environ.get(cls.env_enum_bound)
        if raw is not None and 'enum_bound' not in kargs:
            try:
                kargs['enum_bound'] = int(raw)
            except ValueError:
                raise ValueError('{} must be an integer, got {!r}'.format(
                                 cls.env_enum_bound, raw)) from None
        return cls(**kargs)


class Task:
    
    """Individual steps of a workflow."""
    
    def __init__(self, workflow):
        self.workflow = workflow
        self.settings = workflow.settings
        self.print = workflow.print
        self.diag = workflow.diag
    
    def run(self):
        """Execute this step."""
        raise NotImplementedError
    
    def progress(self, *args, **kargs):
        """Diagnostic line shown only in verbose mode."""
        if self.workflow.verbose:
            self.diag(*args, **kargs)


class Workflow:
    
    """Settings and output streams shared by the tasks of one run."""
    
    def __init__(self, settings=None, fout=sys.stdout, ferr=sys.stderr,
                 verbose=False):
        self.settings = settings if settings is not None else Settings()
        
        self.fout = fout
        """Output stream for results."""
        self.ferr = ferr
        """Stream for progress and error text."""
        self.verbose = verbose
        """Whether Task.progress lines are shown."""
    
    def print(self, *args, file=None, **kargs):
        """Print, defaulting to stream self.fout with flushing."""
        if file is None:
            file = self.fout
        builtins.print(*args, file=file, flush=True, **kargs)
    
    def diag(self, *args, **kargs):
        """Print to the diagnostic stream."""
        self.print(*args, file=self.ferr, **kargs)
