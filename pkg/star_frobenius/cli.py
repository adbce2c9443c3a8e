""" The ``star-frobenius`` command.

Standard output carries exactly one envelope per run::

    {"command": ..., "input_echo": ..., "result": ..., "schema_version": "1",
     "timing_ms": 0}

Logging and error messages go to standard error.  Exit codes: 0 success,
1 internal failure or selftest violation, 2 input error (including
unreadable files and bad configuration), 3 semantic error, 4 budget
exceeded.
"""
import argparse
import json
import logging
import os
import random
import sys
import time

from star_frobenius.automata import parse_nfa
from star_frobenius.config import ConfigurationError
from star_frobenius.config import SuiteRegistry
from star_frobenius.config import budget_from_environ
from star_frobenius.config import load_config
from star_frobenius.exceptions import InvalidArgument
from star_frobenius.exceptions import StarFrobeniusError
from star_frobenius.frobenius import decide_cofinite
from star_frobenius.frobenius import frobenius_of_finite_set
from star_frobenius.frobenius import numeric_frobenius
from star_frobenius.oracle import adjudicate
from star_frobenius.oracle import bruteforce_cofinite
from star_frobenius.reduction import REDUCTION_ALPHABET
from star_frobenius.reduction import cnf_to_regex
from star_frobenius.reduction import format_dimacs
from star_frobenius.reduction import parse_dimacs
from star_frobenius.reduction import random_cnf
from star_frobenius.reduction import reduction_symbol_count
from star_frobenius.reduction import sat_bruteforce
from star_frobenius.regex import Alphabet
from star_frobenius.regex import alphabet_of
from star_frobenius.regex import parse_regex
from star_frobenius.regex import symbol_length
from star_frobenius.regex import to_text
from star_frobenius.selftest import run_suites

log = logging.getLogger(__name__)

SCHEMA_VERSION = '1'
PROG = 'star-frobenius'

# ASCII spelling of the empty word on the ``frobenius`` command line
EMPTY_WORD = 'EPS'


def _read(path, stdin):
    if path == '-':
        return stdin.read()
    with open(path) as f:
        return f.read()


def _regex(args, stdin):
    if args.file is not None:
        text = _read(args.file, stdin).strip()
    elif args.regex is not None:
        text = args.regex
    else:
        raise InvalidArgument('give a regex argument or -f FILE')
    return parse_regex(text)


def _alphabet(args):
    if args.alphabet is None:
        return None
    return Alphabet.parse(args.alphabet)


def _regex_echo(ast, alphabet):
    return {'regex': to_text(ast, ascii=True),
            'alphabet': (alphabet or alphabet_of(ast)).text,
            't': symbol_length(ast)}


def _nfa_echo(nfa):
    return {'nfa': {
        'states': nfa.state_count,
        'alphabet': nfa.alphabet.text,
        'initial': sorted(nfa.initial),
        'accepting': sorted(nfa.accepting),
        'transitions': sorted([state, symbol, target]
                              for (state, symbol), targets
                              in nfa.transitions.items()
                              for target in targets),
        }}


def cmd_decide(args, settings, stdin):
    alphabet = _alphabet(args)
    if args.nfa is not None:
        if args.regex is not None or args.file is not None:
            raise InvalidArgument('give either --nfa or a regex, not both')
        input = parse_nfa(_read(args.nfa, stdin))
        echo = _nfa_echo(input)
    else:
        input = _regex(args, stdin)
        echo = _regex_echo(input, alphabet)
    result = decide_cofinite(input, alphabet)
    body = result.as_dict()
    body['verdict'] = result.verdict
    return echo, body


def cmd_frobenius(args, settings, stdin):
    words = [u'' if word == EMPTY_WORD else word for word in args.words]
    if args.alphabet is not None:
        alphabet = Alphabet.parse(args.alphabet)
    else:
        alphabet = Alphabet.of(''.join(words))
    result = frobenius_of_finite_set(words, alphabet)
    body = result.as_dict()
    body['verdict'] = result.verdict
    echo = {'words': sorted(set(words), key=lambda w: (len(w), w)),
            'alphabet': alphabet.text}
    return echo, body


def _cnf(args, settings, stdin):
    if getattr(args, 'random', None):
        variables, clauses = args.random
        seed = settings['seed'] if args.seed is None else args.seed
        cnf = random_cnf(variables, clauses, random.Random(seed))
        return cnf, {'random': [variables, clauses], 'seed': seed,
                     'dimacs': format_dimacs(cnf)}
    cnf = parse_dimacs(_read(args.cnf, stdin))
    return cnf, {'dimacs': format_dimacs(cnf)}


def cmd_reduce(args, settings, stdin):
    cnf, echo = _cnf(args, settings, stdin)
    ast = cnf_to_regex(cnf)
    body = {
        'regex': to_text(ast),
        'n': cnf.variable_count,
        'm': cnf.clause_count,
        'symbol_count': reduction_symbol_count(cnf.variable_count,
                                               cnf.clause_count),
        }
    if args.decide:
        result = decide_cofinite(ast, REDUCTION_ALPHABET)
        decision = result.as_dict()
        decision['verdict'] = result.verdict
        body['decision'] = decision
    return echo, body


def cmd_sat(args, settings, stdin):
    cnf, echo = _cnf(args, settings, stdin)
    assignment = sat_bruteforce(cnf)
    literals = None
    if assignment is not None:
        literals = [index if value else -index
                    for index, value in enumerate(assignment, 1)]
    return echo, {'satisfiable': assignment is not None,
                  'assignment': literals}


def cmd_oracle(args, settings, stdin):
    ast = _regex(args, stdin)
    alphabet = _alphabet(args) or alphabet_of(ast)
    budget = settings['budget']
    if args.horizon is None and (args.bound is not None or args.worst_case):
        report = adjudicate(ast, alphabet, args.bound, budget)
    else:
        horizon = settings['horizon'] if args.horizon is None else args.horizon
        report = bruteforce_cofinite(ast, alphabet, horizon, args.bound,
                                     budget)
    return _regex_echo(ast, alphabet), report.as_dict()


def cmd_numeric(args, settings, stdin):
    result = numeric_frobenius(args.xs)
    return {'xs': list(args.xs)}, {'inputs': list(result.inputs),
                                   'g': result.g}


def cmd_selftest(args, settings, stdin):
    outcomes = run_suites(args.registry, settings['seed'], args.cases)
    return (
        {'seed': settings['seed'], 'cases': args.cases or settings['cases'],
         'suites': [outcome.name for outcome in outcomes]},
        {'suites': [outcome.as_dict() for outcome in outcomes],
         'passed': sum(outcome.passed for outcome in outcomes),
         'failed': sum(outcome.failed for outcome in outcomes)},
        )


def _add_common(parser):
    parser.add_argument('--format', choices=('json', 'text'), default='json')
    parser.add_argument('--timing', action='store_true',
                        help='report the elapsed time instead of 0')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='log pipeline stages to standard error')
    parser.add_argument('--config', metavar='FILE.zcml', default=None,
                        help='ZCML configuration (settings and suites)')


def _add_regex(parser):
    parser.add_argument('regex', nargs='?', default=None)
    parser.add_argument('-f', '--file', default=None,
                        help="read the regex from FILE ('-' for stdin)")
    parser.add_argument('--alphabet', default=None,
                        help='declared alphabet, e.g. "ab"')


def _add_cnf(parser):
    parser.add_argument('cnf', nargs='?', default='-',
                        help="DIMACS CNF file ('-' for stdin)")
    parser.add_argument('--random', nargs=2, type=int, metavar=('N', 'M'),
                        default=None,
                        help='generate a random instance with N variables '
                             'and M clauses')
    parser.add_argument('--seed', type=int, default=None)


def make_parser():
    parser = argparse.ArgumentParser(
        prog=PROG,
        description='Co-finiteness and Frobenius lengths of Kleene stars.')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    sub = commands.add_parser('decide', help='decide whether E* is '
                              'co-finite')
    _add_regex(sub)
    sub.add_argument('--nfa', default=None,
                     help='read an NFA in the line format instead')
    sub.set_defaults(handler=cmd_decide)

    sub = commands.add_parser('frobenius', help='Frobenius length of a '
                              'finite word set (EPS is the empty word)')
    sub.add_argument('words', nargs='+')
    sub.add_argument('--alphabet', default=None)
    sub.set_defaults(handler=cmd_frobenius)

    sub = commands.add_parser('reduce', help='3SAT instance to a star-free '
                              'regex over {F, T}')
    _add_cnf(sub)
    sub.add_argument('--decide', action='store_true',
                     help='also decide co-finiteness of the result')
    sub.set_defaults(handler=cmd_reduce)

    sub = commands.add_parser('sat', help='brute-force satisfiability')
    _add_cnf(sub)
    sub.set_defaults(handler=cmd_sat)

    sub = commands.add_parser('oracle', help='brute-force missing-word '
                              'table')
    _add_regex(sub)
    sub.add_argument('--horizon', type=int, default=None)
    sub.add_argument('--bound', type=int, default=None,
                     help='sound state bound for a conclusive verdict')
    sub.add_argument('--worst-case', action='store_true',
                     help='use the 2^(t+1) bound')
    sub.add_argument('--budget', type=int, default=None)
    sub.set_defaults(handler=cmd_oracle)

    sub = commands.add_parser('numeric', help='numeric Frobenius number')
    sub.add_argument('xs', nargs='+', type=int)
    sub.set_defaults(handler=cmd_numeric)

    sub = commands.add_parser('selftest', help='run the property suites')
    sub.add_argument('--seed', type=int, default=None)
    sub.add_argument('--cases', type=int, default=None)
    sub.add_argument('--budget', type=int, default=None)
    sub.set_defaults(handler=cmd_selftest)

    for sub in commands.choices.values():
        _add_common(sub)
    return parser


def load_settings(args, environ=None):
    """ Defaults, then ZCML, then the environment budget, then flags """
    if args.config is not None:
        spec = args.config
        if os.path.exists(spec):
            spec = os.path.abspath(spec)
        registry = load_config(spec)
    elif args.command == 'selftest':
        registry = load_config()
    else:
        registry = SuiteRegistry()
    registry.update_settings(budget=budget_from_environ(
        environ, default=registry.settings['budget']))
    flags = {}
    for name in ('budget', 'seed', 'cases'):
        value = getattr(args, name, None)
        if value is not None:
            flags[name] = value
    registry.update_settings(**flags)
    args.registry = registry
    return registry.settings


def _text_value(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    if value is None:
        return '-'
    return str(value)


def render_text(envelope):
    result = envelope['result']
    lines = ['command: %s' % envelope['command']]
    if envelope['command'] == 'selftest':
        for suite in result['suites']:
            status = 'ok' if not suite['failed'] else 'FAILED'
            lines.append('%s: %s (passed %d, failed %d)' % (
                suite['name'], status, suite['passed'], suite['failed']))
            for failure in suite['failures']:
                lines.append('    %s' % _text_value(failure))
        lines.append('total: passed %d, failed %d' % (result['passed'],
                                                      result['failed']))
    else:
        for key in sorted(result):
            lines.append('%s: %s' % (key, _text_value(result[key])))
    if envelope['timing_ms']:
        lines.append('timing_ms: %d' % envelope['timing_ms'])
    return '\n'.join(lines) + '\n'


def render(envelope, format):
    if format == 'text':
        return render_text(envelope)
    return json.dumps(envelope, sort_keys=True, ensure_ascii=False) + '\n'


def main(argv=None, stdin=None, stdout=None, stderr=None, environ=None):
    if stdin is None:
        stdin = sys.stdin
    if stdout is None:
        stdout = sys.stdout
    if stderr is None:
        stderr = sys.stderr
    args = make_parser().parse_args(argv)
    logging.basicConfig(
        stream=stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        force=True)
    try:
        settings = load_settings(args, environ)
        started = time.perf_counter()
        echo, body = args.handler(args, settings, stdin)
        elapsed = int((time.perf_counter() - started) * 1000)
    except StarFrobeniusError as why:
        stderr.write('%s: error: %s: %s\n' % (PROG, why.__class__.__name__,
                                               why))
        return why.exit_code
    except (ConfigurationError, EnvironmentError) as why:
        stderr.write('%s: error: %s\n' % (PROG, why))
        return 2
    except Exception:
        log.exception('internal failure')
        return 1
    envelope = {
        'schema_version': SCHEMA_VERSION,
        'command': args.command,
        'input_echo': echo,
        'result': body,
        'timing_ms': elapsed if args.timing else 0,
        }
    stdout.write(render(envelope, args.format))
    if args.command == 'selftest' and body['failed']:
        return 1
    return 0


if __name__ == '__main__': # pragma: no cover
    sys.exit(main())
