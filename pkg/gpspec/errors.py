"""Exceptions raised by the library and mapped to exit codes by the
command line front end.
"""


__all__ = [
    'GpsError',
    'ModuleMismatch',
    'NotProper',
    'NotSubmodule',
    'InfiniteModule',
    'EnumerationBound',
    'RadicalUnknown',
    'UnsupportedMorphism',
    'NotMaterializable',
    'ParseError',
    'UnknownCheck',
]


class GpsError(Exception):
    """Root of all library errors."""


class ModuleMismatch(GpsError):
    """Operands do not live in the same module (or ring)."""


class NotProper(GpsError):
    """Operation is only defined on proper submodules."""


class NotSubmodule(GpsError):
    """A submodule argument is not contained in the module."""


class InfiniteModule(GpsError):
    """Enumeration was requested over an infinite set."""


class EnumerationBound(GpsError):
    """The module is finite but larger than the enumeration bound."""


class RadicalUnknown(GpsError):
    
    """An exact graded radical was required but no strategy applied."""
    
    def __init__(self, result):
        super().__init__('graded radical unknown: ' + result.reason)
        self.result = result


class UnsupportedMorphism(GpsError):
    """Morphism shape is not one of the supported epimorphisms."""


class NotMaterializable(GpsError):
    """A ring spectrum is infinite and cannot be built as a space."""


class ParseError(GpsError):
    
    """Syntax or semantic error in a model description. Positions are
    1-based and point into the source text.
    """
    
    def __init__(self, line, column, message, token=None):
        self.line = line
        self.column = column
        self.message = message
        self.token = token
        super().__init__(str(self))
    
    def __str__(self):
        s = 'line {}, column {}: {}'.format(self.line, self.column,
                                           self.message)
        if self.token is not None:
            s += ' (at {!r})'.format(self.token)
        return s


class UnknownCheck(GpsError):
    """A check selection named an id that is not in the catalog."""
