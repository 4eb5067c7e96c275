"""The instance corpus that the harness and the oracle verifier run on."""


__all__ = [
    'Corpus',
    'named_instance',
    'NAMED_INSTANCES',
]


from itertools import combinations_with_replacement

from gpspec.dsl import Model, model_text
from gpspec.util import StopWatch
from gpspec.workflow import Task


NAMED_INSTANCES = {
    'z': dict(group_orders=[2], ring_modulus=0, factors=[(0, 0)],
              submodules={'Q': [(4,)]}),
    'zxz': dict(group_orders=[2], ring_modulus=0,
                factors=[(0, 0), (0, 1)],
                submodules={'N': [(4, 0)], 'N2': [(0, 4)], 'P': []}),
    'z6': dict(group_orders=[2], ring_modulus=6, factors=[(6, 0)],
               submodules={'A': [(3,)], 'B': [(2,)]}),
    'z8': dict(group_orders=[2], ring_modulus=8, factors=[(8, 0)],
               submodules={'Z': [], 'F': [(4,)], 'T': [(2,)]}),
}
"""Instances taken from the worked examples."""


CYCLIC_RANGE = range(2, 37)

PAIR_ORDERS = (2, 3, 4, 8, 9)

PAIR_DEGREES = [
    ([2], [(0,), (0,)]),
    ([2], [(0,), (1,)]),
    ([2, 2], [(0, 0), (0, 0)]),
    ([2, 2], [(0, 0), (1, 1)]),
]
"""Grading groups and degree assignments used for product instances."""


def named_instance(iid):
    return Model.build(name=iid, **NAMED_INSTANCES[iid])


class Corpus(Task):
    
    """Generates the corpus as (instance id, Model) pairs."""
    
    def get_params_list(self):
        """Return a list of instance params objects."""
        params = [dict(iid=iid, kind='named') for iid in NAMED_INSTANCES]
        for n in CYCLIC_RANGE:
            params.append(dict(iid='zmod{}'.format(n), kind='cyclic', n=n))
        for p, q in combinations_with_replacement(PAIR_ORDERS, 2):
            for group, (dp, dq) in PAIR_DEGREES:
                gtag = 'x'.join(str(k) for k in group)
                tag = ''.join(str(a) for a in dp + dq)
                params.append(dict(
                    iid='z{}xz{}-g{}-d{}'.format(p, q, gtag, tag),
                    kind='pair', group=group, orders=(p, q),
                    degrees=(dp, dq)))
        return params
    
    def generate(self, params):
        """Given an instance params object, return a Model."""
        kind = params['kind']
        if kind == 'named':
            return named_instance(params['iid'])
        elif kind == 'cyclic':
            n = params['n']
            return Model.build([2], n, [(n, (0,))], name=params['iid'])
        elif kind == 'pair':
            (p, q), (dp, dq) = params['orders'], params['degrees']
            return Model.build(params['group'], 0, [(p, dp), (q, dq)],
                               name=params['iid'])
        raise ValueError('Unknown instance kind ' + kind)
    
    def models(self):
        """All instances, in corpus order."""
        result = []
        seen = set()
        for params in self.get_params_list():
            if params['iid'] in seen:
                raise AssertionError('Duplicate instance id: ' +
                                     params['iid'])
            seen.add(params['iid'])
            result.append(self.generate(params))
        return result
    
    def run(self):
        with StopWatch() as w:
            models = self.models()
            for m in models:
                self.print('# instance ' + m.name)
                self.print(model_text(m))
        self.progress('({} instances, generation time: {:.3f} seconds)'
                      .format(len(models), w.elapsed))
        return models
