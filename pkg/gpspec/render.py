"""Rendering of models, point lists, spaces, reports and map analyses
as text tables, JSON, or Graphviz DOT.

JSON documents carry a top-level "schema": 1 and keep a fixed key
order, so equal inputs render to identical bytes.
"""


__all__ = [
    'FORMATS',
    'SCHEMA_VERSION',
    'Points',
    'render',
    'to_data',
    'submodule_data',
    'trilean_data',
    'specialization_dot',
]


import json

import numpy as np
from tabulate import tabulate

from gpspec.algebra import Ideal, GradedSubmodule, ModuleElement
from gpspec.dsl import Model, model_text, format_vector
from gpspec.spectra import RadicalResult, Trilean
from gpspec.topology import (PointSet, FiniteSpace, TopologyReport,
                             specialization_matrix)
from gpspec.structure import MapAnalysis
from gpspec.report import CheckReport


FORMATS = ('text', 'json', 'dot')

SCHEMA_VERSION = 1


class Points:
    
    """A named list of points (submodules) of a module, for output."""
    
    def __init__(self, kind, module, points):
        self.kind = kind
        self.module = module
        self.points = list(points)


def submodule_data(N):
    degrees = []
    M = N.module
    for g, rows in N.blocks:
        idx = M.factor_indices(g)
        gens = []
        for r in rows:
            coords = [0] * M.rank
            for i, a in zip(idx, r):
                coords[i] = a
            x = ModuleElement(M, coords)
            if not x.is_zero and list(x.coords) not in gens:
                gens.append(list(x.coords))
        degrees.append({'degree': list(g), 'generators': gens})
    return {'label': N.describe(), 'degrees': degrees}


def trilean_data(t):
    return {'value': t.value,
            'witness': _jsonable(t.witness),
            'reason': t.reason}


def _point_key(p):
    if isinstance(p, Ideal):
        return str(p.generator)
    return p.describe()


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, GradedSubmodule):
        return submodule_data(x)
    if isinstance(x, Ideal):
        return x.generator
    if isinstance(x, PointSet):
        return x.indices()
    if isinstance(x, Trilean):
        return trilean_data(x)
    if isinstance(x, RadicalResult):
        return _radical_data(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return repr(x)


def _radical_data(r):
    return {'kind': r.kind,
            'label': r.describe(),
            'submodule': (submodule_data(r.submodule)
                          if r.is_submodule else None),
            'strategy': r.strategy,
            'reason': r.reason,
            'attempted': list(r.attempted)}


def _model_data(m):
    return {
        'object': 'model',
        'group': list(m.group.cyclic_orders),
        'ring': m.ring.modulus,
        'module': [{'order': o, 'degree': list(d)}
                   for o, d in m.module.factors],
        'submodules': {k: submodule_data(N)
                       for k, N in m.submodules.items()},
        'subsets': {k: list(v) for k, v in m.subsets.items()},
    }


def _points_data(p):
    return {'object': 'points',
            'kind': p.kind,
            'points': [submodule_data(N) for N in p.points]}


def _space_points(space):
    return [_jsonable(p) for p in space.points]


def _space_data(s):
    return {
        'object': 'space',
        'kind': s.kind,
        'points': _space_points(s),
        'closed_sets': sorted(PointSet(s, c).indices()
                              for c in s.closed_masks),
        'base': [{'r': r, 'open': U.indices()} for r, U in s.base],
    }


def _report_data(t):
    data = {'object': 'topology',
            'space': _space_data(t.space)}
    data.update(t.flags())
    data['hochster'] = dict(t.hochster)
    data['components'] = [{'points': c.indices(), 'generic_points': g}
                          for c, g in t.components]
    return data


def _map_data(a):
    return {
        'object': 'map',
        'kind': a.kind,
        'domain': _space_points(a.domain),
        'codomain': _space_points(a.codomain),
        'images': a.image_indices,
        'injective': trilean_data(a.injective),
        'surjective': trilean_data(a.surjective),
        'continuous': a.continuous,
        'open_closed': trilean_data(a.open_closed),
        'image_identities': trilean_data(a.image_identities),
        'homeomorphism': a.homeomorphism,
        'fibers': {_point_key(p): F.indices()
                   for p, F in a.fibers.items()},
    }


def _check_report_data(r, timings=False):
    results = []
    for res in r.results:
        item = {
            'check': res.check_id,
            'instance': res.instance,
            'status': res.status,
            'vacuous': res.vacuous,
            'reason': res.reason,
            'counterexample': _jsonable(res.counterexample),
            'notes': list(res.notes),
        }
        if timings:
            item['elapsed'] = res.elapsed
        results.append(item)
    return {'object': 'check_report',
            'results': results,
            'summary': r.summary()}


def to_data(obj, timings=False):
    """JSON-ready data for obj, with the schema version first."""
    data = {'schema': SCHEMA_VERSION}
    if isinstance(obj, Model):
        data.update(_model_data(obj))
    elif isinstance(obj, Points):
        data.update(_points_data(obj))
    elif isinstance(obj, FiniteSpace):
        data.update(_space_data(obj))
    elif isinstance(obj, TopologyReport):
        data.update(_report_data(obj))
    elif isinstance(obj, MapAnalysis):
        data.update(_map_data(obj))
    elif isinstance(obj, CheckReport):
        data.update(_check_report_data(obj, timings))
    elif isinstance(obj, RadicalResult):
        data['object'] = 'radical'
        data.update(_radical_data(obj))
    elif isinstance(obj, PointSet):
        data['object'] = 'point_set'
        data['kind'] = obj.space.kind
        data['points'] = [_jsonable(p) for p in obj.points()]
        data['indices'] = obj.indices()
    else:
        raise ValueError('Cannot render {} as json'.format(
                         type(obj).__name__))
    return data


def _flag(v):
    if isinstance(v, Trilean):
        return v.value
    return 'true' if v else 'false'


def _set_text(space, indices):
    return '{' + ', '.join(space.label(i) for i in indices) + '}'


def _points_text(points):
    rows = [[i, N.describe(),
             ' '.join(format_vector(v) for v in N.generators())
             or '0'] for i, N in enumerate(points)]
    return tabulate(rows, headers=['#', 'point', 'generators'])


def _space_text(s):
    lines = ['{} ({} points)'.format(s.kind, s.size)]
    rows = [[i, s.label(i)] for i in range(s.size)]
    lines.append(tabulate(rows, headers=['#', 'point']))
    lines.append('')
    lines.append('closed sets:')
    for c in s.closed_masks:
        lines.append('  ' + _set_text(s, PointSet(s, c).indices()))
    lines.append('base:')
    for r, U in s.base:
        lines.append('  {}: {}'.format(r, _set_text(s, U.indices())))
    return '\n'.join(lines)


def _report_text(t):
    lines = [_space_text(t.space), '']
    rows = [[k, _flag(v)] for k, v in t.flags().items()]
    lines.append(tabulate(rows, headers=['property', 'value']))
    lines.append('')
    lines.append('components:')
    for comp, gens in t.components:
        lines.append('  {}  generic: {}'.format(
                     _set_text(t.space, comp.indices()),
                     _set_text(t.space, gens)))
    return '\n'.join(lines)


def _map_text(a):
    lines = ['map ' + a.kind]
    rows = [[a.domain.label(i), a.codomain.label(j)]
            for i, j in enumerate(a.image_indices)]
    lines.append(tabulate(rows, headers=['point', 'image']))
    lines.append('')
    props = [
        ['injective', _flag(a.injective)],
        ['surjective', _flag(a.surjective)],
        ['continuous', _flag(a.continuous)],
        ['open_closed', _flag(a.open_closed)],
        ['image_identities', _flag(a.image_identities)],
        ['homeomorphism', _flag(a.homeomorphism)],
    ]
    lines.append(tabulate(props, headers=['property', 'value']))
    lines.append('')
    lines.append('fibers:')
    for p, F in a.fibers.items():
        lines.append('  {}: {}'.format(_point_key(p),
                                       _set_text(a.domain, F.indices())))
    return '\n'.join(lines)


def _check_report_text(r, timings=False):
    rows = []
    for res in r.results:
        status = res.status
        if res.vacuous:
            status += ' (vacuous)'
        detail = res.reason or ''
        if res.counterexample is not None:
            detail = json.dumps(_jsonable(res.counterexample))
        row = [res.check_id, res.instance, status, detail]
        if timings:
            row.append('{:.3f}'.format(res.elapsed))
        rows.append(row)
    headers = ['check', 'instance', 'status', 'detail']
    if timings:
        headers.append('seconds')
    s = r.summary()
    summary = ('{passed} passed ({vacuous} vacuous), {failed} failed, '
               '{skipped} skipped'.format(**s))
    return tabulate(rows, headers=headers) + '\n\n' + summary


def _text(obj, timings=False):
    if isinstance(obj, Model):
        return model_text(obj).rstrip('\n')
    if isinstance(obj, Points):
        return _points_text(obj.points)
    if isinstance(obj, FiniteSpace):
        return _space_text(obj)
    if isinstance(obj, TopologyReport):
        return _report_text(obj)
    if isinstance(obj, MapAnalysis):
        return _map_text(obj)
    if isinstance(obj, CheckReport):
        return _check_report_text(obj, timings)
    if isinstance(obj, RadicalResult):
        if obj.is_unknown:
            return 'unknown: ' + obj.reason
        return obj.describe()
    if isinstance(obj, PointSet):
        return _set_text(obj.space, obj.indices())
    raise ValueError('Cannot render {} as text'.format(type(obj).__name__))


def specialization_dot(space):
    """DOT graph of the specialization order: an edge Q -> Q' when Q'
    lies in the closure of Q, with points of equal closure grouped into
    one cluster and transitive edges removed.
    """
    S = specialization_matrix(space)
    n = space.size
    equiv = S & S.T
    classes = []
    rep = [None] * n
    for i in range(n):
        if rep[i] is None:
            members = [j for j in range(n) if equiv[i, j]]
            for j in members:
                rep[j] = len(classes)
            classes.append(members)
    
    k = len(classes)
    R = np.zeros((k, k), dtype=bool)
    for a, ma in enumerate(classes):
        for b, mb in enumerate(classes):
            if a != b and S[ma[0], mb[0]]:
                R[a, b] = True
    Ri = R.astype(int)
    reduced = R & ~((Ri @ Ri) > 0)
    
    lines = ['digraph specialization {']
    for a, members in enumerate(classes):
        if len(members) > 1:
            lines.append('  subgraph cluster_{} {{'.format(a))
            lines.append('    label="closure class {}";'.format(a))
            for i in members:
                lines.append('    n{} [label={}];'.format(
                             i, json.dumps(space.label(i))))
            lines.append('  }')
        else:
            i = members[0]
            lines.append('  n{} [label={}];'.format(
                         i, json.dumps(space.label(i))))
    for a in range(k):
        for b in range(k):
            if reduced[a, b]:
                lines.append('  n{} -> n{};'.format(classes[a][0],
                                                    classes[b][0]))
    lines.append('}')
    return '\n'.join(lines)


def render(obj, fmt='text', timings=False):
    """Render obj in one of FORMATS; the result ends with a newline."""
    if fmt == 'json':
        return json.dumps(to_data(obj, timings), indent=2) + '\n'
    elif fmt == 'text':
        return _text(obj, timings) + '\n'
    elif fmt == 'dot':
        if isinstance(obj, TopologyReport):
            obj = obj.space
        if not isinstance(obj, FiniteSpace):
            raise ValueError('DOT output is only available for spaces')
        return specialization_dot(obj) + '\n'
    raise ValueError('Unknown format ' + fmt)
