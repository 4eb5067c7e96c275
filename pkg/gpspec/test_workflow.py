"""Unit tests for workflow.py and corpus.py."""


import io
import unittest

from gpspec.corpus import Corpus, NAMED_INSTANCES
from gpspec.workflow import *


class SettingsCase(unittest.TestCase):
    
    def test_from_env(self):
        s = Settings.from_env({'GPS_ENUM_BOUND': '64'})
        self.assertEqual(s.enum_bound, 64)
        s = Settings.from_env({'GPS_ENUM_BOUND': '64'}, enum_bound=8)
        self.assertEqual(s.enum_bound, 8)
        s = Settings.from_env({})
        self.assertEqual(s.enum_bound, Settings.enum_bound)
        with self.assertRaises(ValueError):
            Settings.from_env({'GPS_ENUM_BOUND': 'many'})
    
    def test_unknown_setting(self):
        with self.assertRaises(ValueError):
            Settings(enum_bund=4)


class CorpusCase(unittest.TestCase):
    
    def test_models(self):
        models = Corpus(Workflow()).models()
        names = [m.name for m in models]
        self.assertEqual(len(names), len(set(names)))
        self.assertEqual(names[:len(NAMED_INSTANCES)], list(NAMED_INSTANCES))
        self.assertIn('zmod36', names)
    
    def test_progress_is_quiet(self):
        out, err = io.StringIO(), io.StringIO()
        Corpus(Workflow(fout=out, ferr=err)).run()
        self.assertIn('# instance z6', out.getvalue())
        self.assertEqual(err.getvalue(), '')
        
        err = io.StringIO()
        Corpus(Workflow(fout=io.StringIO(), ferr=err, verbose=True)).run()
        self.assertIn('instances, generation time', err.getvalue())


if __name__ == '__main__':
    unittest.main()
