""" Co-finiteness of ``E*`` and Frobenius numbers. """
import collections
import itertools
import logging
import math
from functools import reduce

from star_frobenius.automata import complement
from star_frobenius.automata import glushkov
from star_frobenius.automata import glushkov_star
from star_frobenius.automata import is_infinite
from star_frobenius.automata import longest_accepted
from star_frobenius.automata import star_closure
from star_frobenius.automata import subset_construct
from star_frobenius.automata import trim_useful
from star_frobenius.automata import verify_rejected
from star_frobenius.automata import window_accepts
from star_frobenius.config import budget_from_environ
from star_frobenius.exceptions import AlphabetMismatch
from star_frobenius.exceptions import BudgetExceeded
from star_frobenius.exceptions import GcdNotOne
from star_frobenius.exceptions import InvalidArgument
from star_frobenius.exceptions import StarFrobeniusError
from star_frobenius.interfaces import INfa
from star_frobenius.interfaces import IRegexNode
from star_frobenius.regex import alphabet_of
from star_frobenius.regex import literal_union
from star_frobenius.regex import symbol_length

log = logging.getLogger(__name__)

LengthSpectrum = collections.namedtuple('LengthSpectrum', 'lengths gcd')


class CofiniteResult(object):
    """ The verdict on ``E*`` over an alphabet.

    ``NotCofinite`` results carry ``window_witness``, a ``(length, word)``
    pair with ``length`` at least the trimmed complement size, so the word
    can be pumped.  ``Cofinite`` results carry the Frobenius length and the
    smallest longest missing word, both ``None`` when nothing is missing.
    """
    NOT_COFINITE = 'NotCofinite'
    COFINITE = 'Cofinite'

    def __init__(self, cofinite, frobenius_length=None, witness=None,
                 window_witness=None, alphabet=None, t=None, nfa_states=None,
                 dfa_states=None, trimmed_states=None):
        self.cofinite = cofinite
        self.frobenius_length = frobenius_length
        self.witness = witness
        self.window_witness = window_witness
        self.alphabet = alphabet
        self.t = t
        self.nfa_states = nfa_states
        self.dfa_states = dfa_states
        self.trimmed_states = trimmed_states

    @property
    def verdict(self):
        return self.COFINITE if self.cofinite else self.NOT_COFINITE

    def as_dict(self):
        window = None
        if self.window_witness is not None:
            length, word = self.window_witness
            window = {'length': length, 'word': word}
        return {
            'cofinite': self.cofinite,
            'frobenius_length': self.frobenius_length,
            'witness': self.witness,
            'window_witness': window,
            'alphabet': self.alphabet.text if self.alphabet else '',
            't': self.t,
            'nfa_states': self.nfa_states,
            'dfa_states': self.dfa_states,
            'trimmed_states': self.trimmed_states,
            }

    def __repr__(self):
        if self.cofinite:
            return '<CofiniteResult Cofinite frobenius_length=%r>' % (
                self.frobenius_length,)
        return '<CofiniteResult NotCofinite window_witness=%r>' % (
            self.window_witness,)


class NumericFrobenius(object):
    def __init__(self, inputs, g):
        self.inputs = tuple(inputs)
        self.g = g

    def representable(self, value):
        """ True iff ``value`` is a non-negative combination of the
        inputs """
        if value < 0:
            return False
        if value > self.g:
            return True
        return _representable_table(self.inputs, value)[value]

    def __repr__(self):
        return '<NumericFrobenius g%r = %d>' % (self.inputs, self.g)


def _representable_table(xs, limit):
    table = [True]
    for value in range(1, limit + 1):
        table.append(any(x <= value and table[value - x] for x in xs))
    return table


def _star_input(input):
    if IRegexNode.providedBy(input):
        return glushkov_star(input), alphabet_of(input), symbol_length(input)
    if INfa.providedBy(input):
        return star_closure(input), input.alphabet, None
    raise InvalidArgument('expected a regex or an NFA, got %r' % (input,))


def _effective_alphabet(inferred, declared):
    if declared is None:
        return inferred
    missing = declared.missing_from(inferred)
    if missing:
        raise AlphabetMismatch(missing)
    return declared


def decide_cofinite(input, alphabet=None):
    """ Decide whether ``input*`` is co-finite over ``alphabet``.

    ``input`` is a regex syntax tree or an NFA (whose language is starred
    first).  ``alphabet`` defaults to the symbols of the input; a declared
    alphabet must contain them.
    """
    star, inferred, t = _star_input(input)
    alphabet = _effective_alphabet(inferred, alphabet)
    dfa = subset_construct(star, alphabet)
    rejected = complement(dfa)
    trimmed = trim_useful(rejected)
    size = trimmed.state_count
    stats = dict(alphabet=alphabet, t=t, nfa_states=star.state_count,
                 dfa_states=dfa.state_count, trimmed_states=size)
    log.debug('decide: nfa=%d dfa=%d trimmed complement=%d',
              star.state_count, dfa.state_count, size)
    if is_infinite(rejected):
        found = window_accepts(rejected, size, 2 * size)
        if found is None:
            raise StarFrobeniusError(
                'window [%d, %d) holds no rejected word although the '
                'complement is infinite' % (size, 2 * size))
        return CofiniteResult(False, window_witness=found, **stats)
    longest = longest_accepted(rejected)
    if longest is None:
        return CofiniteResult(True, **stats)
    length, word = longest
    return CofiniteResult(True, frobenius_length=length, witness=word,
                          **stats)


def frobenius_of_finite_set(words, alphabet):
    words = list(words)
    missing = alphabet.missing_from(set(''.join(words)))
    if missing:
        raise AlphabetMismatch(missing)
    return decide_cofinite(literal_union(words), alphabet)


def numeric_frobenius(xs):
    """ The largest integer that is not a non-negative combination of
    ``xs`` (``-1`` when every non-negative integer is one) """
    xs = list(xs)
    if not xs:
        raise InvalidArgument('numeric_frobenius needs at least one integer')
    for x in xs:
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise InvalidArgument('%r is not a positive integer' % (x,))
    divisor = reduce(math.gcd, xs)
    if divisor != 1:
        raise GcdNotOne(divisor)
    if 1 in xs:
        return NumericFrobenius(xs, -1)
    smallest = min(xs)
    table = [True]
    run = 1
    gap = -1
    # once `smallest` consecutive values are representable, all larger
    # values are too
    while run < smallest:
        value = len(table)
        ok = any(x <= value and table[value - x] for x in xs)
        table.append(ok)
        if ok:
            run += 1
        else:
            run = 0
            gap = value
    return NumericFrobenius(xs, gap)


def length_spectrum(input, horizon):
    """ Lengths ``<= horizon`` of words in L(input) (not starred) and the
    gcd of the non-zero ones """
    if horizon < 1:
        raise InvalidArgument('horizon must be at least 1')
    if IRegexNode.providedBy(input):
        nfa = glushkov(input)
    elif INfa.providedBy(input):
        nfa = input
    else:
        raise InvalidArgument('expected a regex or an NFA, got %r' % (input,))
    symbols = sorted(nfa.symbols_used())
    layer = nfa.initial
    lengths = []
    for length in range(horizon + 1):
        if layer & nfa.accepting:
            lengths.append(length)
        layer = frozenset().union(
            *[nfa.step_set(layer, symbol) for symbol in symbols])
    divisor = reduce(math.gcd, [length for length in lengths if length], 0)
    return LengthSpectrum(frozenset(lengths), divisor)


def matrix_window_search(nfa, alphabet, lo, hi, budget=None):
    """ Guess and verify: try every word with length in ``[lo, hi)`` in
    lexicographic order and return ``(length, word)`` for the first one
    the reachability matrix shows ``nfa`` rejects, or ``None`` """
    if lo < 0 or hi < lo:
        raise InvalidArgument('bad window [%r, %r)' % (lo, hi))
    if budget is None:
        budget = budget_from_environ()
    total = sum(len(alphabet) ** length for length in range(lo, hi))
    if total > budget:
        raise BudgetExceeded(
            'window [%d, %d) holds %d words; budget is %d'
            % (lo, hi, total, budget))
    for length in range(lo, hi):
        for letters in itertools.product(alphabet.symbols, repeat=length):
            word = ''.join(letters)
            if any(symbol not in nfa.alphabet for symbol in word):
                return length, word
            if verify_rejected(nfa, word):
                return length, word
    return None
