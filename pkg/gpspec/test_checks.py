"""Unit tests for the check catalog, the runner and the report."""


import unittest

from gpspec.errors import UnknownCheck
from gpspec.corpus import Corpus, named_instance, NAMED_INSTANCES
from gpspec.dsl import Model
from gpspec.checks import *
from gpspec.report import CheckReport
from gpspec.runner import run_checks, CheckRunner
from gpspec.workflow import Settings, Workflow


ROSTER = '''
    T2.1 T2.2 P2.3 T2.4 P2.5 L2.6 C2.7 P2.8 C2.9 P2.10 P2.11 C2.12 T2.13
    L2.14 T2.15 C2.16 T2.17 P3.1 P3.2 E3.3a E3.3b T3.4 T3.5 P4.1 T4.2 L4.3
    T4.4 T4.5 T4.6 C4.7 P4.8 P4.9 T4.10 T4.11 E1 CE2.1 E4.2
'''.split()


def cyclic_model(n):
    return Model.build([2], n, [(n, 0)], name='zmod{}'.format(n))


def by_id(results):
    return {r.check_id: r for r in results}


class CatalogCase(unittest.TestCase):
    
    def test_roster(self):
        self.assertEqual(list(CHECK_IDS), ROSTER)
        for check in CATALOG:
            self.assertTrue(check.statement)
    
    def test_selection(self):
        self.assertEqual(len(resolve_selection('all')), len(ROSTER))
        ids = [c.check_id for c in resolve_selection(['T4.11', 'T2.4.3',
                                                      'T2.1', 'T2.4'])]
        self.assertEqual(ids, ['T2.1', 'T2.4', 'T4.11'])
        self.assertEqual([c.check_id for c in resolve_selection('E3.3b')],
                         ['E3.3b'])
        with self.assertRaises(UnknownCheck):
            resolve_selection(['T9.9'])
        with self.assertRaises(UnknownCheck):
            run_checks(cyclic_model(6), ['bogus'])


class NamedInstanceCase(unittest.TestCase):
    
    def test_z6(self):
        results = run_checks(named_instance('z6'))
        self.assertEqual([r for r in results if r.failed], [])
        r = by_id(results)
        self.assertTrue(r['E4.2'].passed)
        self.assertFalse(r['E4.2'].vacuous)
        self.assertTrue(r['P4.9'].passed)
        self.assertFalse(r['P4.9'].vacuous)
        self.assertTrue(r['E1'].skipped)
        self.assertEqual(r['E1'].instance, 'z6')
    
    def test_zxz_counterexample(self):
        (result,) = run_checks(named_instance('zxz'), ['CE2.1'])
        self.assertTrue(result.passed)
        self.assertFalse(result.vacuous)
        self.assertIn('module is not a multiplication module', result.notes)
    
    def test_z8(self):
        r = by_id(run_checks(named_instance('z8'),
                             ['T4.11', 'E3.3b', 'P4.9', 'T2.13']))
        self.assertTrue(r['T4.11'].passed)
        self.assertIn('all five statements are false', r['T4.11'].notes)
        self.assertTrue(r['E3.3b'].passed)
        self.assertTrue(r['P4.9'].vacuous)
        self.assertTrue(r['T2.13'].passed)
    
    def test_z(self):
        r = by_id(run_checks(named_instance('z')))
        self.assertTrue(r['E1'].passed)
        self.assertTrue(r['T2.17'].passed)
        self.assertFalse(r['T2.17'].vacuous)
        self.assertTrue(r['T2.1'].skipped)
        self.assertIn('infinite', r['T2.1'].reason)
        self.assertEqual([x for x in r.values() if x.failed], [])
    
    def test_field(self):
        r = by_id(run_checks(cyclic_model(5), ['E3.3a', 'C2.9', 'T4.10']))
        for cid in ('E3.3a', 'C2.9', 'T4.10'):
            self.assertTrue(r[cid].passed, cid)
            self.assertFalse(r[cid].vacuous, cid)
    
    def test_guard_reasons(self):
        r = by_id(run_checks(named_instance('z6'),
                             ['E3.3a', 'E3.3b', 'CE2.1']))
        self.assertTrue(all(x.skipped for x in r.values()))
        self.assertIn('not a field', r['E3.3a'].reason)
        self.assertEqual(r['E3.3b'].reason, 'module is not Z8 over Z8')
        self.assertEqual(r['CE2.1'].reason, 'module is not Z x Z over Z')
    
    def test_sampling_notes(self):
        settings = Settings(subset_cutoff=1, subset_samples=4)
        (result,) = run_checks(cyclic_model(30), ['P4.1'], settings)
        self.assertTrue(result.passed)
        self.assertTrue(any('sampled' in n for n in result.notes))


class HarnessCase(unittest.TestCase):
    
    def test_named_corpus(self):
        models = [named_instance(iid) for iid in NAMED_INSTANCES]
        models += [cyclic_model(n) for n in (2, 4, 6, 12, 30)]
        models.append(Model.build([2], 0, [(2, (0,)), (3, (1,))],
                                  name='z2xz3'))
        report = CheckRunner(Workflow(), models).run()
        self.assertTrue(report.ok, report.failures())
        summary = report.summary()
        self.assertEqual(summary['failed'], 0)
        self.assertEqual(sum(summary.values()) - summary['vacuous'],
                         len(models) * len(CHECK_IDS))
        stats = report.timing_stats()
        self.assertIn('T2.1', stats)
        self.assertGreaterEqual(stats['T2.1'][0], 1)
    
    def test_full_corpus(self):
        report = CheckRunner(Workflow(), Corpus(Workflow()).models()).run()
        self.assertEqual(report.failures(), [])
        self.assertEqual(report.missing_substantive(CHECK_IDS), [])
    
    def test_report_helpers(self):
        report = CheckReport([
            CheckResult('E1', CheckResult.PASS, elapsed=0.5),
            CheckResult('E1', CheckResult.SKIPPED, reason='x'),
            CheckResult('T2.1', CheckResult.PASS, vacuous=True,
                        elapsed=0.25),
        ])
        self.assertEqual(report.missing_substantive(['E1', 'T2.1']),
                         ['T2.1'])
        self.assertEqual(report.timing_stats()['E1'][:2], (1, 0.5))
        self.assertEqual(report.slowest(1)[0].elapsed, 0.5)
        self.assertTrue(report.ok)


if __name__ == '__main__':
    unittest.main()
