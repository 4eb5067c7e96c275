"""Graded primary spectra: an exact engine for the primary spectrum of a
finitely generated graded module, its Zariski topology, and a harness
that checks the structure results on concrete instances.
"""

__version__ = '0.1.0'


# Exports.
from .util import *
from .errors import *
from .algebra import *
from .morphisms import *
from .spectra import *
from .topology import *
from .structure import *
from .dsl import *
from .corpus import *
from .checks import *
from .report import *
from .runner import *
from .verifier import *
from .render import *
