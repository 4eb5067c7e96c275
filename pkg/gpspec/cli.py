"""Command line front end, installed as `gps`.

Results go to the output stream and everything else to the diagnostic
stream. Exit codes: 0 success, 1 a check failed or the oracles
disagreed, 2 bad input, 3 an exact graded radical was needed but could
not be computed.
"""


__all__ = [
    'main',
    'build_parser',
    'EXIT_OK',
    'EXIT_FAILED',
    'EXIT_INPUT',
    'EXIT_UNKNOWN',
]


import argparse
import sys

from gpspec.errors import GpsError, RadicalUnknown
from gpspec.checks import CHECK_IDS
from gpspec.corpus import Corpus
from gpspec.dsl import read_model
from gpspec.render import FORMATS, Points, render
from gpspec.runner import CheckRunner
from gpspec.spectra import graded_radical_submodule, enumerate_points
from gpspec.structure import analyze_map
from gpspec.topology import (PRIMARY_SPECTRUM, PRIME_SPECTRUM, build_space,
                             variety, analyze)
from gpspec.verifier import OracleVerifier
from gpspec.workflow import Settings, Workflow


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_UNKNOWN = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    
    """ArgumentParser that raises instead of exiting, so that usage
    errors follow the exit code contract and the chosen streams.
    """
    
    def error(self, message):
        raise UsageError('{}: error: {}'.format(self.prog, message))


_POINT_COMMANDS = {
    'spec': 'prime',
    'pspec': 'primary_spectrum',
    'max': 'maximal',
}


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='text',
                        help='output format (default: text)')
    common.add_argument('--enum-bound', type=int, default=None,
                        help='largest module size that may be enumerated '
                             '(also read from GPS_ENUM_BOUND)')
    common.add_argument('--seed', type=int, default=None,
                        help='seed for sampled quantifiers')
    common.add_argument('--verbose', action='store_true',
                        help='progress lines on the diagnostic stream')
    
    parser = _Parser(prog='gps',
                     description='Graded primary spectra of finitely '
                                 'generated graded modules.')
    sub = parser.add_subparsers(dest='command', metavar='command',
                                parser_class=_Parser)
    sub.required = True
    
    p = sub.add_parser('parse', parents=[common],
                       help='validate a model and echo it canonically')
    p.add_argument('file')
    
    for name, kind in _POINT_COMMANDS.items():
        p = sub.add_parser(name, parents=[common],
                           help='list the {} points'.format(
                                kind.replace('_', ' ')))
        p.add_argument('file')
    
    p = sub.add_parser('radical', parents=[common],
                       help='graded radical of a named submodule')
    p.add_argument('file')
    p.add_argument('--submodule', required=True)
    
    p = sub.add_parser('variety', parents=[common],
                       help='variety of a named submodule')
    p.add_argument('file')
    p.add_argument('--submodule', required=True)
    p.add_argument('--star', action='store_true',
                   help='nu* (V* on the prime spectrum) instead of nu')
    p.add_argument('--space', choices=('spec', 'pspec'), default='pspec')
    
    p = sub.add_parser('topology', parents=[common],
                       help='a spectrum with its Zariski topology')
    p.add_argument('file')
    p.add_argument('--space', choices=('spec', 'pspec'), default='pspec')
    
    p = sub.add_parser('rho', parents=[common],
                       help='analysis of rho (phi with --space spec)')
    p.add_argument('file')
    p.add_argument('--space', choices=('spec', 'pspec'), default='pspec')
    
    p = sub.add_parser('check', parents=[common],
                       help='run the check catalog')
    p.add_argument('file', nargs='?')
    p.add_argument('--theorem', action='append', metavar='ID',
                   help='check id to run; repeatable (default: all of '
                        '{})'.format(len(CHECK_IDS)))
    p.add_argument('--corpus', action='store_true',
                   help='run over the whole instance corpus')
    p.add_argument('--timings', action='store_true',
                   help='include per-check timings')
    
    sub.add_parser('verify', parents=[common],
                   help='compare the procedures with brute force over the '
                        'corpus')
    sub.add_parser('corpus', parents=[common],
                   help='print the corpus as model text')
    return parser


def _settings(args):
    kargs = {}
    if args.enum_bound is not None:
        kargs['enum_bound'] = args.enum_bound
    if args.seed is not None:
        kargs['seed'] = args.seed
    return Settings.from_env(**kargs)


def _space_kind(args):
    return PRIME_SPECTRUM if args.space == 'spec' else PRIMARY_SPECTRUM


def _emit(workflow, obj, args, timings=False):
    workflow.print(render(obj, args.format, timings), end='')


def dispatch(args, workflow):
    """Run the parsed command; returns an exit code."""
    settings = workflow.settings
    bound = settings.enum_bound
    cmd = args.command
    
    if cmd == 'corpus':
        Corpus(workflow).run()
        return EXIT_OK
    if cmd == 'verify':
        ok = OracleVerifier(workflow, Corpus(workflow).models()).run()
        return EXIT_OK if ok else EXIT_FAILED
    
    if cmd == 'check':
        if args.corpus:
            models = Corpus(workflow).models()
        elif args.file is not None:
            models = [read_model(args.file)]
        else:
            raise UsageError('gps check: give a model file or --corpus')
        selection = args.theorem or 'all'
        report = CheckRunner(workflow, models, selection).run()
        _emit(workflow, report, args, args.timings)
        return EXIT_OK if report.ok else EXIT_FAILED
    
    model = read_model(args.file)
    M = model.module
    
    if cmd == 'parse':
        _emit(workflow, model, args)
    elif cmd in _POINT_COMMANDS:
        kind = _POINT_COMMANDS[cmd]
        _emit(workflow, Points(kind, M, enumerate_points(M, kind, bound)),
              args)
    elif cmd == 'radical':
        N = model.submodule(args.submodule)
        result = graded_radical_submodule(N, M, bound,
                                          settings.witness_conductor)
        if result.is_unknown:
            raise RadicalUnknown(result)
        _emit(workflow, result, args)
    elif cmd == 'variety':
        N = model.submodule(args.submodule)
        space = build_space(M, _space_kind(args), bound)
        if args.space == 'spec':
            kind = 'V_star' if args.star else 'V'
        else:
            kind = 'nu_star' if args.star else 'nu'
        _emit(workflow, variety(N, M, kind, space), args)
    elif cmd == 'topology':
        _emit(workflow, analyze(build_space(M, _space_kind(args), bound)),
              args)
    elif cmd == 'rho':
        kind = 'phi' if args.space == 'spec' else 'rho'
        _emit(workflow, analyze_map(M, kind, bound), args)
    return EXIT_OK


def main(argv=None, fout=None, ferr=None):
    """Entry point; returns the exit code."""
    fout = sys.stdout if fout is None else fout
    ferr = sys.stderr if ferr is None else ferr
    if argv is None:
        argv = sys.argv[1:]
    
    def fail(code, message):
        print(message, file=ferr, flush=True)
        return code
    
    try:
        args = build_parser().parse_args(argv)
        settings = _settings(args)
        workflow = Workflow(settings, fout=fout, ferr=ferr,
                            verbose=args.verbose)
        return dispatch(args, workflow)
    except UsageError as e:
        return fail(EXIT_INPUT, str(e))
    except RadicalUnknown as e:
        return fail(EXIT_UNKNOWN, 'gps: ' + str(e))
    except GpsError as e:
        return fail(EXIT_INPUT, 'gps: ' + str(e))
    except OSError as e:
        return fail(EXIT_INPUT, 'gps: ' + str(e))
    except (KeyError, ValueError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        return fail(EXIT_INPUT, 'gps: {}'.format(message))
