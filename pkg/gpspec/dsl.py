"""Reading and writing model descriptions (.gps files).

A model is one statement per line, in the order group, ring, module,
then any number of submodule and subset statements:
    
    group = Z2
    ring = Z
    module = Z@0 x Z@1
    submodule N = (4,0)
    submodule P = 0
    subset Y = {N, P}

Text after `#` is a comment. See gps_format.md for the full grammar.
"""


__all__ = [
    'Model',
    'parse_model',
    'read_model',
    'model_text',
    'format_vector',
]


import re

from gpspec.errors import ParseError
from gpspec.algebra import (GradingGroup, BaseRing, GradedModule,
                            GradedSubmodule, submodule_from_generators)


class Model:
    
    """A grading group, base ring and module, with named submodules and
    named subsets of those names.
    """
    
    def __init__(self, group, ring, module, submodules=None, subsets=None,
                 name=None):
        self.group = group
        self.ring = ring
        self.module = module
        self.submodules = dict(submodules or {})
        """Ordered map from name to GradedSubmodule."""
        self.subsets = dict(subsets or {})
        """Ordered map from name to a list of submodule names."""
        self.name = name
        """Instance id, if any."""
    
    @classmethod
    def build(cls, group_orders, ring_modulus, factors, submodules=None,
              subsets=None, name=None):
        """Convenience constructor from plain values; submodules are
        given as lists of generator vectors.
        """
        group = GradingGroup(group_orders)
        ring = BaseRing(ring_modulus)
        module = GradedModule(ring, group, factors)
        subs = {k: submodule_from_generators(v, module)
                for k, v in (submodules or {}).items()}
        return cls(group, ring, module, subs, subsets, name)
    
    def submodule(self, name):
        try:
            return self.submodules[name]
        except KeyError:
            raise KeyError('No submodule named {!r}'.format(name)) from None
    
    def __eq__(self, other):
        return (isinstance(other, Model) and
                self.module == other.module and
                list(self.submodules.items()) ==
                    list(other.submodules.items()) and
                list(self.subsets.items()) == list(other.subsets.items()))
    
    def __repr__(self):
        return 'Model({})'.format(self.name or self.module.describe())


_TOKEN_RE = re.compile(r'''
    (?P<space>\s+)
  | (?P<int>-?\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<punct>[@(),{}=])
''', re.VERBOSE)

_CYCLIC_RE = re.compile(r'^Z(\d*)$')

INT_LIMIT = 2 ** 31
"""Moduli, orders, degrees and coordinates must have absolute value
below this.
"""


class _Token:
    
    __slots__ = ('kind', 'text', 'column')
    
    def __init__(self, kind, text, column):
        self.kind = kind
        self.text = text
        self.column = column


class _LineParser:
    
    """Recursive descent over the tokens of one statement."""
    
    def __init__(self, text, lineno):
        self.lineno = lineno
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                raise ParseError(lineno, pos + 1, 'unexpected character',
                                 text[pos])
            if m.lastgroup != 'space':
                self.tokens.append(_Token(m.lastgroup, m.group(), pos + 1))
            pos = m.end()
        self.end_column = len(text) + 1
        self.pos = 0
    
    def error(self, message, token=None):
        if token is None:
            token = self.peek()
        if token is None:
            raise ParseError(self.lineno, self.end_column, message)
        raise ParseError(self.lineno, token.column, message, token.text)
    
    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None
    
    def next(self, what):
        tok = self.peek()
        if tok is None:
            self.error('expected {} but the line ended'.format(what))
        self.pos += 1
        return tok
    
    def accept(self, text):
        tok = self.peek()
        if tok is not None and tok.text == text:
            self.pos += 1
            return tok
        return None
    
    def expect(self, text):
        tok = self.peek()
        if tok is None or tok.text != text:
            self.error('expected {!r}'.format(text))
        self.pos += 1
        return tok
    
    def name(self):
        tok = self.next('a name')
        if tok.kind != 'name':
            self.error('expected a name', tok)
        return tok
    
    def bounded(self, value, tok):
        if abs(value) >= INT_LIMIT:
            self.error('integer exceeds 2^31', tok)
        return value
    
    def integer(self):
        tok = self.next('an integer')
        if tok.kind != 'int':
            self.error('expected an integer', tok)
        return self.bounded(int(tok.text), tok), tok
    
    def end(self):
        tok = self.peek()
        if tok is not None:
            self.error('unexpected trailing input')
    
    def cyclic(self):
        """Z or Z<n>; returns (n or 0, token)."""
        tok = self.name()
        m = _CYCLIC_RE.match(tok.text)
        if m is None:
            self.error('expected Z or Z<n>', tok)
        return self.bounded(int(m.group(1) or 0), tok), tok
    
    def tuple_(self):
        start = self.expect('(')
        values = []
        if self.accept(')') is None:
            values.append(self.integer()[0])
            while self.accept(',') is not None:
                values.append(self.integer()[0])
            self.expect(')')
        return tuple(values), start


def _parse_group(p):
    orders = []
    while True:
        k, tok = p.cyclic()
        if k < 1:
            p.error('group factors need an explicit order', tok)
        orders.append(k)
        if p.accept('x') is None:
            break
    p.end()
    return GradingGroup(orders)


def _parse_ring(p):
    n, tok = p.cyclic()
    if n == 1:
        p.error('ring Z1 is the zero ring', tok)
    p.end()
    return BaseRing(n)


def _parse_degree(p, group):
    tok = p.peek()
    if tok is not None and tok.text == '(':
        value, tok = p.tuple_()
    else:
        value, tok = p.integer()
        value = (value,)
    if len(value) != len(group.cyclic_orders):
        p.error('degree {} does not match group {}'.format(
                group.format_degree(value), group.describe()), tok)
    for a, k in zip(value, group.cyclic_orders):
        if not 0 <= a < k:
            p.error('degree {} is out of range for group {}'.format(
                    group.format_degree(value), group.describe()), tok)
    return value


def _parse_module(p, group, ring):
    factors = []
    while True:
        order, tok = p.cyclic()
        if order == 1:
            p.error('factor Z1 is trivial', tok)
        if ring.is_finite:
            if order == 0:
                p.error('free factor Z over finite ring {}'.format(
                        ring.describe()), tok)
            if ring.modulus % order != 0:
                p.error('factor order {} does not divide ring modulus {}'
                        .format(order, ring.modulus), tok)
        p.expect('@')
        factors.append((order, _parse_degree(p, group)))
        if p.accept('x') is None:
            break
    p.end()
    return GradedModule(ring, group, factors)


def _parse_submodule(p, module):
    tok = p.peek()
    if tok is not None and tok.text == '0' and len(p.tokens) == p.pos + 1:
        p.pos += 1
        return GradedSubmodule.zero(module)
    gens = []
    while True:
        vec, tok = p.tuple_()
        if len(vec) != module.rank:
            p.error('vector has {} coordinates, module has {} factors'
                    .format(len(vec), module.rank), tok)
        gens.append(vec)
        if p.accept(',') is None:
            break
    p.end()
    return submodule_from_generators(gens, module)


def _parse_subset(p, submodules):
    p.expect('{')
    names = []
    if p.accept('}') is None:
        while True:
            tok = p.name()
            if tok.text not in submodules:
                p.error('unknown submodule name {}'.format(tok.text), tok)
            if tok.text not in names:
                names.append(tok.text)
            if p.accept(',') is None:
                break
        p.expect('}')
    p.end()
    return names


_ORDER = ('group', 'ring', 'module')


def parse_model(text, name=None):
    """Parse model text; raises ParseError with a position on any
    syntax or semantic error.
    """
    group = ring = module = None
    submodules = {}
    subsets = {}
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].rstrip()
        if not line.strip():
            continue
        p = _LineParser(line, lineno)
        head = p.name()
        key = head.text
        
        if key in _ORDER:
            p.expect('=')
            have = {'group': group, 'ring': ring, 'module': module}
            if have[key] is not None:
                p.error('{} is already declared'.format(key), head)
            pos = _ORDER.index(key)
            if pos > 0 and have[_ORDER[pos - 1]] is None:
                p.error('{} must precede {}'.format(_ORDER[pos - 1], key),
                        head)
            if key == 'group':
                group = _parse_group(p)
            elif key == 'ring':
                ring = _parse_ring(p)
            else:
                module = _parse_module(p, group, ring)
        
        elif key in ('submodule', 'subset'):
            if module is None:
                p.error('module must precede {}'.format(key), head)
            ident = p.name()
            if ident.text in submodules or ident.text in subsets:
                p.error('duplicate name {}'.format(ident.text), ident)
            p.expect('=')
            if key == 'submodule':
                submodules[ident.text] = _parse_submodule(p, module)
            else:
                subsets[ident.text] = _parse_subset(p, submodules)
        
        else:
            p.error('unknown statement', head)
    
    for key, value in (('group', group), ('ring', ring), ('module', module)):
        if value is None:
            raise ParseError(lineno + 1, 1, 'missing {} statement'.format(key))
    return Model(group, ring, module, submodules, subsets, name)


def read_model(path):
    """Parse a model file; the instance id is the file name."""
    with open(path, encoding='utf-8') as f:
        text = f.read()
    name = path.replace('\\', '/').rsplit('/', 1)[-1]
    if name.endswith('.gps'):
        name = name[:-len('.gps')]
    return parse_model(text, name)


def format_vector(v):
    """Coordinate vector as written in model text, e.g. (4,0)."""
    return '(' + ','.join(str(a) for a in v) + ')'


def model_text(model):
    """Canonical text of a model. Submodules are written with their
    canonical generators, so parsing the text gives back an equal model.
    """
    group = model.group
    lines = [
        'group = ' + group.describe(),
        'ring = ' + model.ring.describe(),
        'module = ' + model.module.describe(),
    ]
    for key, N in model.submodules.items():
        gens = N.generators()
        rhs = ', '.join(format_vector(v) for v in gens) if gens else '0'
        lines.append('submodule {} = {}'.format(key, rhs))
    for key, names in model.subsets.items():
        lines.append('subset {} = {{{}}}'.format(key, ', '.join(names)))
    return '\n'.join(lines) + '\n'
