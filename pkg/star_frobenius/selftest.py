""" Seeded cross-module property suites, run by ``star-frobenius selftest``.

Every suite is registered with :class:`star_frobenius.config.property_suite`
and found by the ``<scan>`` directive in ``configure.zcml``.  A suite is
called as ``handler(rng, cases, settings)`` and returns a
:class:`SuiteOutcome`.
"""
import itertools
import logging
import math
import random
from functools import reduce

from star_frobenius.automata import Nfa
from star_frobenius.automata import complement
from star_frobenius.automata import count_accepted
from star_frobenius.automata import glushkov
from star_frobenius.automata import glushkov_star
from star_frobenius.automata import is_infinite
from star_frobenius.automata import pumping_decomposition
from star_frobenius.automata import reachability
from star_frobenius.automata import subset_construct
from star_frobenius.automata import trim_useful
from star_frobenius.automata import verify_rejected
from star_frobenius.automata import window_accepts
from star_frobenius.config import property_suite
from star_frobenius.frobenius import decide_cofinite
from star_frobenius.frobenius import length_spectrum
from star_frobenius.frobenius import numeric_frobenius
from star_frobenius.oracle import affordable_horizon
from star_frobenius.oracle import bruteforce_cofinite
from star_frobenius.oracle import enumeration_size
from star_frobenius.oracle import member_star_dp
from star_frobenius.oracle import regex_match
from star_frobenius.reduction import CnfInstance
from star_frobenius.reduction import REDUCTION_ALPHABET
from star_frobenius.reduction import check_lemma
from star_frobenius.reduction import cnf_to_regex
from star_frobenius.reduction import random_cnf
from star_frobenius.reduction import reduction_symbol_count
from star_frobenius.reduction import sat_bruteforce
from star_frobenius.regex import Alphabet
from star_frobenius.regex import Concat
from star_frobenius.regex import EmptySet
from star_frobenius.regex import Epsilon
from star_frobenius.regex import Star
from star_frobenius.regex import Symbol
from star_frobenius.regex import Union
from star_frobenius.regex import is_star_free
from star_frobenius.regex import parse_regex
from star_frobenius.regex import symbol_length
from star_frobenius.regex import to_text

log = logging.getLogger(__name__)

MAX_SYMBOLS = 6
WORD_LENGTH = 7
WORDS_PER_CASE = 12
# largest enumeration the oracle suites run per case
ORACLE_CAP = 2048
UNARY_HORIZON = 64


class SuiteOutcome(object):
    max_reported = 5

    def __init__(self, name=None):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.failures = []

    def check(self, ok, detail):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < self.max_reported:
                self.failures.append(detail)
        return ok

    def error(self, detail):
        self.check(False, detail)

    @property
    def ok(self):
        return not self.failed

    def as_dict(self):
        return {'name': self.name, 'passed': self.passed,
                'failed': self.failed, 'failures': list(self.failures)}

    def __repr__(self):
        return '<SuiteOutcome %s passed=%d failed=%d>' % (
            self.name, self.passed, self.failed)


def random_regex(rng, symbols, max_symbols=MAX_SYMBOLS):
    """ A random syntax tree with at most ``max_symbols`` symbol leaves """
    return _grow(rng, symbols, rng.randint(1, max_symbols))


def _grow(rng, symbols, budget):
    if budget <= 1:
        roll = rng.random()
        if roll < 0.05:
            return Epsilon()
        if roll < 0.08:
            return EmptySet()
        return Symbol(rng.choice(symbols))
    roll = rng.random()
    if roll < 0.25:
        return Star(_grow(rng, symbols, budget))
    split = rng.randint(1, budget - 1)
    left = _grow(rng, symbols, split)
    right = _grow(rng, symbols, budget - split)
    if roll < 0.6:
        return Union(left, right)
    return Concat(left, right)


def random_word(rng, alphabet, max_length=WORD_LENGTH):
    length = rng.randint(0, max_length)
    return ''.join(rng.choice(alphabet.symbols) for _ in range(length))


def all_words(alphabet, max_length):
    for length in range(max_length + 1):
        for letters in itertools.product(alphabet.symbols, repeat=length):
            yield ''.join(letters)


def _pool(rng):
    return Alphabet(rng.choice(('a', 'ab')))


def _widen(nfa, alphabet):
    return Nfa(nfa.state_count, alphabet, nfa.initial, nfa.accepting,
               nfa.transitions)


def _complement_dfa(ast, alphabet):
    return complement(subset_construct(glushkov_star(ast), alphabet))


@property_suite(name='regex_roundtrip')
def regex_roundtrip(rng, cases, settings):
    outcome = SuiteOutcome()
    for _ in range(cases):
        ast = random_regex(rng, 'abEPS')
        for ascii in (False, True):
            text = to_text(ast, ascii=ascii)
            outcome.check(parse_regex(text) == ast, text)
        children = ast.children()
        expected = (sum(symbol_length(child) for child in children)
                    if children else symbol_length(ast))
        outcome.check(symbol_length(ast) == expected, to_text(ast))
    return outcome


@property_suite(name='state_bound')
def state_bound(rng, cases, settings):
    outcome = SuiteOutcome()
    for _ in range(cases):
        ast = random_regex(rng, 'ab', 8)
        t = symbol_length(ast)
        outcome.check(glushkov_star(ast).state_count == t + 1, to_text(ast))
        outcome.check(glushkov(ast).state_count == t + 1, to_text(ast))
    return outcome


@property_suite(name='language_agreement')
def language_agreement(rng, cases, settings):
    outcome = SuiteOutcome()
    for _ in range(cases):
        alphabet = _pool(rng)
        ast = random_regex(rng, alphabet.symbols)
        star = _widen(glushkov_star(ast), alphabet)
        starred = subset_construct(star, alphabet)
        plain = subset_construct(glushkov(ast), alphabet)
        for _ in range(WORDS_PER_CASE):
            word = random_word(rng, alphabet)
            member = member_star_dp(ast, word)
            detail = '%s on %r' % (to_text(ast), word)
            outcome.check(starred.accepts(word) == member, detail)
            outcome.check(star.accepts(word) == member, detail)
            outcome.check(verify_rejected(star, word) == (not member), detail)
            outcome.check(plain.accepts(word) == regex_match(ast, word),
                          detail)
    return outcome


@property_suite(name='window_criterion')
def window_criterion(rng, cases, settings):
    outcome = SuiteOutcome()
    for _ in range(cases):
        alphabet = _pool(rng)
        ast = random_regex(rng, alphabet.symbols)
        rejected = _complement_dfa(ast, alphabet)
        size = trim_useful(rejected).state_count
        found = window_accepts(rejected, size, 2 * size)
        outcome.check(is_infinite(rejected) == (found is not None),
                      to_text(ast))
    return outcome


@property_suite(name='complement_involution')
def complement_involution(rng, cases, settings):
    outcome = SuiteOutcome()
    for _ in range(cases):
        alphabet = _pool(rng)
        ast = random_regex(rng, alphabet.symbols)
        dfa = subset_construct(glushkov_star(ast), alphabet)
        twice = complement(complement(dfa))
        once = complement(dfa)
        agree = all(twice.accepts(word) == dfa.accepts(word) and
                    once.accepts(word) != dfa.accepts(word)
                    for word in all_words(alphabet, 6))
        outcome.check(agree, to_text(ast))
    return outcome


def _naive_product(left, right):
    size = len(left)
    return [[any(left[p][k] and right[k][q] for k in range(size))
             for q in range(size)] for p in range(size)]


@property_suite(name='matrix_verifier')
def matrix_verifier(rng, cases, settings):
    outcome = SuiteOutcome()
    for _ in range(cases):
        alphabet = _pool(rng)
        ast = random_regex(rng, alphabet.symbols)
        nfa = _widen(glushkov_star(ast), alphabet)
        word = random_word(rng, alphabet)
        size = nfa.state_count
        naive = [[p == q for q in range(size)] for p in range(size)]
        for symbol in word:
            naive = _naive_product(naive, nfa.adjacency(symbol).tolist())
        detail = '%s on %r' % (to_text(ast), word)
        outcome.check(reachability(nfa, word).cells.tolist() == naive, detail)
        outcome.check(verify_rejected(nfa, word) ==
                      (not member_star_dp(ast, word)), detail)
    return outcome


@property_suite(name='oracle_agreement')
def oracle_agreement(rng, cases, settings):
    outcome = SuiteOutcome()
    cap = min(settings['budget'], ORACLE_CAP)
    for _ in range(cases):
        alphabet = _pool(rng)
        ast = random_regex(rng, alphabet.symbols)
        detail = to_text(ast)
        result = decide_cofinite(ast, alphabet)
        bound = result.trimmed_states
        horizon = max(1, 2 * bound - 1)
        if enumeration_size(len(alphabet), horizon) <= cap:
            report = bruteforce_cofinite(ast, alphabet, horizon, bound, cap)
            verdict = report.verdict
            outcome.check(verdict.cofinite == result.cofinite, detail)
            if result.cofinite:
                outcome.check(verdict.frobenius_length ==
                              result.frobenius_length, detail)
        else:
            horizon = affordable_horizon(len(alphabet), cap)
            report = bruteforce_cofinite(ast, alphabet, horizon, budget=cap)
            counts = count_accepted(_complement_dfa(ast, alphabet), horizon)
            missing = dict((entry.length, entry.count)
                           for entry in report.missing)
            outcome.check(all(missing.get(length, 0) == count
                              for length, count in enumerate(counts)),
                          detail)
        # closure under concatenation
        left = random_word(rng, alphabet, 4)
        right = random_word(rng, alphabet, 4)
        if member_star_dp(ast, left) and member_star_dp(ast, right):
            outcome.check(member_star_dp(ast, left + right), detail)
    return outcome


@property_suite(name='verdict_soundness')
def verdict_soundness(rng, cases, settings):
    outcome = SuiteOutcome()
    for _ in range(cases):
        alphabet = _pool(rng)
        ast = random_regex(rng, alphabet.symbols)
        result = decide_cofinite(ast, alphabet)
        if result.cofinite:
            continue
        detail = to_text(ast)
        length, word = result.window_witness
        outcome.check(length == len(word) >= result.trimmed_states, detail)
        rejected = _complement_dfa(ast, alphabet)
        x, y, z = pumping_decomposition(rejected, word)
        for k in (1, 2, 3):
            pumped = x + y * k + z
            outcome.check(rejected.accepts(pumped) and
                          not member_star_dp(ast, pumped),
                          '%s pumped %d times' % (detail, k))
    return outcome


@property_suite(name='frobenius_maximality')
def frobenius_maximality(rng, cases, settings):
    outcome = SuiteOutcome()
    for _ in range(cases):
        alphabet = _pool(rng)
        ast = random_regex(rng, alphabet.symbols)
        result = decide_cofinite(ast, alphabet)
        if not result.cofinite or result.frobenius_length is None:
            continue
        detail = to_text(ast)
        longest = result.frobenius_length
        outcome.check(len(result.witness) == longest and
                      not member_star_dp(ast, result.witness), detail)
        counts = count_accepted(_complement_dfa(ast, alphabet),
                                longest + result.trimmed_states)
        outcome.check(not any(counts[longest + 1:]), detail)
    return outcome


def _random_instance(rng, max_variables, max_clauses):
    variables = rng.randint(3, max_variables)
    clauses = rng.randint(max(1, -(-variables // 3)), max_clauses)
    return random_cnf(variables, clauses, rng)


def unsatisfiable_instance(rng, max_variables, max_clauses):
    """ A random instance plus all eight sign patterns over one random
    variable triple, so no assignment satisfies it """
    cnf = _random_instance(rng, max_variables, max_clauses)
    triple = sorted(rng.sample(range(1, cnf.variable_count + 1), 3))
    clauses = list(cnf.clauses)
    for signs in itertools.product((1, -1), repeat=3):
        clauses.append(tuple(sign * variable
                             for sign, variable in zip(signs, triple)))
    rng.shuffle(clauses)
    return CnfInstance(cnf.variable_count, clauses)


@property_suite(name='reduction_equivalence')
def reduction_equivalence(rng, cases, settings):
    outcome = SuiteOutcome()
    for case in range(cases):
        # every fourth instance is unsatisfiable by construction
        if case % 4 == 3:
            cnf = unsatisfiable_instance(rng, 5, 6)
        else:
            cnf = _random_instance(rng, 6, 10)
        satisfiable = sat_bruteforce(cnf) is not None
        if case % 4 == 3:
            outcome.check(not satisfiable, repr(cnf.clauses))
        result = decide_cofinite(cnf_to_regex(cnf), REDUCTION_ALPHABET)
        outcome.check(result.cofinite != satisfiable, repr(cnf.clauses))
    return outcome


@property_suite(name='reduction_sandwich')
def reduction_sandwich(rng, cases, settings):
    outcome = SuiteOutcome()
    for _ in range(cases):
        cnf = _random_instance(rng, 5, 6)
        n = cnf.variable_count
        ast = cnf_to_regex(cnf)
        detail = repr(cnf.clauses)
        lengths = length_spectrum(ast, n + 2).lengths
        outcome.check(n + 1 in lengths and lengths <= set([n, n + 1]), detail)
        words = itertools.product(REDUCTION_ALPHABET.symbols, repeat=n + 1)
        outcome.check(all(regex_match(ast, ''.join(letters))
                          for letters in words), detail)
    return outcome


@property_suite(name='symbol_count')
def symbol_count(rng, cases, settings):
    outcome = SuiteOutcome()
    for _ in range(cases):
        cnf = _random_instance(rng, 8, 12)
        ast = cnf_to_regex(cnf)
        outcome.check(symbol_length(ast) == reduction_symbol_count(
            cnf.variable_count, cnf.clause_count), repr(cnf.clauses))
        outcome.check(is_star_free(ast) and
                      parse_regex(to_text(ast)) == ast, repr(cnf.clauses))
    return outcome


def _representable(xs, limit):
    table = [True] + [False] * limit
    for value in range(1, limit + 1):
        table[value] = any(x <= value and table[value - x] for x in xs)
    return table


@property_suite(name='numeric_frobenius')
def numeric_frobenius_suite(rng, cases, settings):
    outcome = SuiteOutcome()
    for _ in range(cases):
        xs = [rng.randint(2, 15) for _ in range(rng.randint(2, 3))]
        if reduce(math.gcd, xs) != 1:
            continue
        g = numeric_frobenius(xs).g
        table = _representable(xs, g + min(xs))
        outcome.check(g < 0 or not table[g], repr(xs))
        outcome.check(all(table[g + 1:]), repr(xs))
        if len(xs) == 2:
            a, b = xs
            outcome.check(g == a * b - a - b, repr(xs))
    return outcome


@property_suite(name='unary_consistency')
def unary_consistency(rng, cases, settings):
    outcome = SuiteOutcome()
    unary = Alphabet('a')
    for _ in range(cases):
        ast = random_regex(rng, 'a')
        detail = to_text(ast)
        result = decide_cofinite(ast, unary)
        spectrum = length_spectrum(ast, UNARY_HORIZON)
        outcome.check(result.cofinite == (spectrum.gcd == 1), detail)
        if not result.cofinite:
            continue
        g = numeric_frobenius(
            [length for length in spectrum.lengths if length]).g
        expected = None if g < 0 else g
        outcome.check(result.frobenius_length == expected, detail)
    return outcome


@property_suite(name='lemma')
def lemma(rng, cases, settings):
    outcome = SuiteOutcome()
    alphabet = Alphabet('ab')
    for _ in range(cases):
        m = rng.randint(1, 4)
        n = rng.randint(m + 1, 5)
        shorter = [''.join(letters) for letters in
                   itertools.product(alphabet.symbols, repeat=m)]
        longer = [''.join(letters) for letters in
                  itertools.product(alphabet.symbols, repeat=n)]
        if rng.random() < 0.5:
            words = set(shorter)
        else:
            words = set(word for word in shorter if rng.random() < 0.8)
        words.update(word for word in longer if rng.random() < 0.5)
        if not words:
            words.add(rng.choice(longer))
        verdict = check_lemma(words, m, n, alphabet)
        outcome.check(verdict.lemma_respected, sorted(words))
    return outcome


def run_suites(registry, seed=None, cases=None):
    """ Run every enabled suite with its own seeded generator and return
    the outcomes in suite-name order.  ``cases`` overrides both the
    ``cases`` setting and per-suite counts. """
    settings = registry.settings
    if seed is None:
        seed = settings['seed']
    outcomes = []
    for suite in sorted(registry.enabled_suites(), key=lambda s: s.name):
        count = cases or suite.cases or settings['cases']
        rng = random.Random('%s:%s' % (seed, suite.name))
        log.debug('running suite %s with %d cases', suite.name, count)
        try:
            outcome = suite.handler(rng, count, settings)
        except Exception as why:
            log.exception('suite %s raised', suite.name)
            outcome = SuiteOutcome()
            outcome.error('%s: %s' % (why.__class__.__name__, why))
        outcome.name = suite.name
        outcomes.append(outcome)
    return outcomes
