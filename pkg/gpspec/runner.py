"""Run the check catalog over one instance or over a list of them."""


__all__ = [
    'CheckResult',
    'CheckRunner',
    'run_checks',
]


from gpspec.checks import CheckResult, CheckContext, resolve_selection
from gpspec.report import CheckReport
from gpspec.workflow import Task


def run_checks(model, selection='all', settings=None):
    """Evaluate the selected checks on model, in catalog order. Raises
    UnknownCheck for an unknown id before anything runs.
    """
    checks = resolve_selection(selection)
    ctx = CheckContext(model, settings)
    return [check.evaluate(ctx) for check in checks]


class CheckRunner(Task):
    
    """Harness task: every selected check on every model."""
    
    def __init__(self, workflow, models, selection='all'):
        super().__init__(workflow)
        self.models = list(models)
        self.checks = resolve_selection(selection)
    
    def run_instance(self, model):
        ctx = CheckContext(model, self.settings)
        return [check.evaluate(ctx) for check in self.checks]
    
    def run(self):
        report = CheckReport()
        for i, model in enumerate(self.models, 1):
            self.progress('Running instance {} of {} ... {}'.format(
                          i, len(self.models), model.name or
                          model.module.describe()))
            results = self.run_instance(model)
            report.extend(results)
            bad = [r.check_id for r in results if r.failed]
            if bad:
                self.progress('  failed: ' + ' '.join(bad))
        self.progress('Done.')
        return report

