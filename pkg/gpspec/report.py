"""Aggregation of check results."""


__all__ = [
    'CheckReport',
]


from itertools import groupby
from operator import attrgetter

import numpy as np


class CheckReport:
    
    """Results of a run of the harness, in run order, with the
    summary counts and timing statistics derived from them.
    """
    
    def __init__(self, results=()):
        self.results = list(results)
    
    def extend(self, results):
        self.results.extend(results)
    
    def summary(self):
        """Counts by outcome. Vacuous passes are included in passed and
        also counted on their own.
        """
        passed = [r for r in self.results if r.passed]
        return {
            'passed': len(passed),
            'vacuous': sum(1 for r in passed if r.vacuous),
            'failed': sum(1 for r in self.results if r.failed),
            'skipped': sum(1 for r in self.results if r.skipped),
        }
    
    @property
    def ok(self):
        return not any(r.failed for r in self.results)
    
    def failures(self):
        return [r for r in self.results if r.failed]
    
    def substantive(self):
        """Check ids with at least one non-vacuous pass."""
        return {r.check_id for r in self.results
                if r.passed and not r.vacuous}
    
    def missing_substantive(self, roster):
        """Ids of roster that never passed non-vacuously, in roster
        order.
        """
        seen = self.substantive()
        return [cid for cid in roster if cid not in seen]
    
    def timing_stats(self):
        """Map from check id to (runs, mean seconds, std seconds, total
        seconds), over the results that were not skipped.
        """
        ran = sorted((r for r in self.results if not r.skipped),
                     key=attrgetter('check_id'))
        stats = {}
        for cid, group in groupby(ran, key=attrgetter('check_id')):
            times = [r.elapsed for r in group]
            stats[cid] = (len(times), float(np.mean(times)),
                          float(np.std(times)), float(np.sum(times)))
        return stats
    
    def slowest(self, n=5):
        """The n slowest results."""
        return sorted(self.results, key=attrgetter('elapsed'),
                      reverse=True)[:n]
    
    def __len__(self):
        return len(self.results)
