""" Position automata, determinization, complementation and the finiteness
machinery used by the co-finiteness decision.

NFA text format (one directive per line, ``#`` starts a comment)::

    states 3
    alphabet ab
    initial 0
    accepting 2
    0 a 1
    1 b 2
"""
import logging

import networkx as nx
import numpy as np

from zope.interface import implementer

from star_frobenius.exceptions import AlphabetMismatch
from star_frobenius.exceptions import InfiniteLanguage
from star_frobenius.exceptions import InvalidArgument
from star_frobenius.exceptions import NfaFormatError
from star_frobenius.exceptions import UnknownSymbol
from star_frobenius.interfaces import IDfa
from star_frobenius.interfaces import INfa
from star_frobenius.regex import Alphabet
from star_frobenius.regex import Concat
from star_frobenius.regex import EmptySet
from star_frobenius.regex import Epsilon
from star_frobenius.regex import Star
from star_frobenius.regex import Symbol
from star_frobenius.regex import Union
from star_frobenius.regex import alphabet_of
from star_frobenius.regex import is_symbol

log = logging.getLogger(__name__)

_EMPTY = frozenset()


@implementer(INfa)
class Nfa(object):
    """ An epsilon-free NFA.  ``transitions`` maps ``(state, symbol)`` to
    an iterable of target states. """

    def __init__(self, state_count, alphabet, initial, accepting,
                 transitions):
        self.state_count = state_count
        self.alphabet = alphabet
        self.initial = frozenset(initial)
        self.accepting = frozenset(accepting)
        self._succ = [dict() for _ in range(state_count)]
        for state in self.initial | self.accepting:
            self._check_state(state)
        for (state, symbol), targets in transitions.items():
            self._check_state(state)
            if symbol not in alphabet:
                raise UnknownSymbol(symbol)
            targets = frozenset(targets)
            for target in targets:
                self._check_state(target)
            if targets:
                row = self._succ[state]
                row[symbol] = row.get(symbol, _EMPTY) | targets
        self._adjacency = {}

    def _check_state(self, state):
        if not 0 <= state < self.state_count:
            raise InvalidArgument(
                'state %r out of range 0..%d' % (state, self.state_count - 1))

    @property
    def transitions(self):
        return dict(((state, symbol), targets)
                    for state, row in enumerate(self._succ)
                    for symbol, targets in row.items())

    def successors(self, state, symbol):
        return self._succ[state].get(symbol, _EMPTY)

    def step_set(self, states, symbol):
        result = set()
        for state in states:
            result.update(self._succ[state].get(symbol, _EMPTY))
        return frozenset(result)

    def symbols_used(self):
        used = set()
        for row in self._succ:
            used.update(row)
        return used

    def accepts(self, word):
        current = self.initial
        for symbol in word:
            if symbol not in self.alphabet:
                raise UnknownSymbol(symbol)
            current = self.step_set(current, symbol)
        return bool(current & self.accepting)

    def adjacency(self, symbol):
        matrix = self._adjacency.get(symbol)
        if matrix is None:
            matrix = np.zeros((self.state_count, self.state_count), dtype=bool)
            for state, row in enumerate(self._succ):
                for target in row.get(symbol, ()):
                    matrix[state, target] = True
            matrix.flags.writeable = False
            self._adjacency[symbol] = matrix
        return matrix

    def __repr__(self):
        return '<Nfa states=%d alphabet=%r initial=%s accepting=%s>' % (
            self.state_count, self.alphabet.text, sorted(self.initial),
            sorted(self.accepting))


@implementer(IDfa)
class Dfa(object):
    """ A complete DFA.  ``delta[state][i]`` is the successor of ``state``
    on the i-th symbol of ``alphabet``. """

    def __init__(self, alphabet, start, accepting, delta, labels=None):
        self.alphabet = alphabet
        self.delta = tuple(tuple(row) for row in delta)
        self.state_count = len(self.delta)
        self.start = start
        self.accepting = frozenset(accepting)
        self.labels = labels
        width = len(alphabet)
        for row in self.delta:
            if len(row) != width:
                raise InvalidArgument('transition function is not total')
            for target in row:
                if not 0 <= target < self.state_count:
                    raise InvalidArgument('state %r out of range' % target)
        if not 0 <= start < self.state_count:
            raise InvalidArgument('start state %r out of range' % start)

    def step(self, state, symbol):
        if symbol not in self.alphabet:
            raise UnknownSymbol(symbol)
        return self.delta[state][self.alphabet.index(symbol)]

    def run(self, word):
        """ Return the list of states visited while reading ``word`` """
        states = [self.start]
        for symbol in word:
            states.append(self.step(states[-1], symbol))
        return states

    def accepts(self, word):
        return self.run(word)[-1] in self.accepting

    def graph(self, states=None):
        """ The transition graph as a ``networkx.DiGraph``, optionally
        restricted to ``states`` """
        if states is None:
            states = range(self.state_count)
        keep = frozenset(states)
        graph = nx.DiGraph()
        graph.add_nodes_from(keep)
        graph.add_edges_from(
            (state, target)
            for state in keep for target in self.delta[state]
            if target in keep)
        return graph

    def __repr__(self):
        return '<Dfa states=%d alphabet=%r accepting=%d>' % (
            self.state_count, self.alphabet.text, len(self.accepting))


class TrimmedDfa(object):
    """ The useful part of a DFA: states reachable from the start that can
    also reach an accepting state. """

    def __init__(self, dfa, useful):
        self.dfa = dfa
        self.useful = frozenset(useful)

    @property
    def state_count(self):
        return len(self.useful)

    def is_empty(self):
        return not self.useful

    def graph(self):
        return self.dfa.graph(self.useful)

    def transitions(self, state):
        """ ``(symbol, target)`` pairs staying inside the useful part,
        in alphabet order """
        return [(symbol, target)
                for symbol, target in zip(self.dfa.alphabet,
                                          self.dfa.delta[state])
                if target in self.useful]


class ReachabilityMatrix(object):
    """ Entry ``(p, q)`` is true iff ``q`` is reachable from ``p`` on the
    word consumed so far. """

    def __init__(self, cells):
        self.cells = np.asarray(cells, dtype=bool)
        self.dimension = self.cells.shape[0]

    @classmethod
    def identity(cls, dimension):
        return cls(np.eye(dimension, dtype=bool))

    def step(self, adjacency):
        return ReachabilityMatrix(boolean_product(self.cells, adjacency))

    def reaches(self, sources, targets):
        rows = np.asarray(sorted(sources), dtype=np.intp)
        cols = np.asarray(sorted(targets), dtype=np.intp)
        return bool(self.cells[np.ix_(rows, cols)].any())

    def __eq__(self, other):
        return (isinstance(other, ReachabilityMatrix) and
                np.array_equal(self.cells, other.cells))

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None


def boolean_product(left, right):
    product = np.matmul(np.asarray(left, dtype=np.intp),
                        np.asarray(right, dtype=np.intp))
    return product > 0


def _positions(ast):
    """ Glushkov position sets: returns ``(letters, nullable, first, last,
    follow)``; position ``p`` (1-based) carries ``letters[p - 1]`` """
    letters = []
    follow = {}

    def visit(node):
        if isinstance(node, Symbol):
            letters.append(node.letter)
            position = len(letters)
            follow[position] = set()
            return False, frozenset([position]), frozenset([position])
        if isinstance(node, Epsilon):
            return True, _EMPTY, _EMPTY
        if isinstance(node, EmptySet):
            return False, _EMPTY, _EMPTY
        if isinstance(node, Star):
            _, first, last = visit(node.child)
            for position in last:
                follow[position].update(first)
            return True, first, last
        lnull, lfirst, llast = visit(node.left)
        rnull, rfirst, rlast = visit(node.right)
        if isinstance(node, Union):
            return lnull or rnull, lfirst | rfirst, llast | rlast
        if isinstance(node, Concat):
            for position in llast:
                follow[position].update(rfirst)
            first = lfirst | rfirst if lnull else lfirst
            last = rlast | llast if rnull else rlast
            return lnull and rnull, first, last
        raise InvalidArgument('not a regex node: %r' % (node,))

    nullable, first, last = visit(ast)
    return letters, nullable, first, last, follow


def _position_automaton(ast, starred):
    letters, nullable, first, last, follow = _positions(ast)
    transitions = {}

    def link(source, targets):
        for target in targets:
            key = (source, letters[target - 1])
            transitions.setdefault(key, set()).add(target)

    link(0, first)
    for position, targets in follow.items():
        link(position, targets)
        if starred and position in last:
            link(position, first)
    accepting = set(last)
    if starred or nullable:
        accepting.add(0)
    return Nfa(len(letters) + 1, alphabet_of(ast), [0], accepting,
               transitions)


def glushkov(ast):
    """ The position automaton of L(ast): one initial state plus one state
    per symbol occurrence """
    return _position_automaton(ast, starred=False)


def glushkov_star(ast):
    """ The position automaton of L(ast)*, with exactly
    ``symbol_length(ast) + 1`` states """
    nfa = _position_automaton(ast, starred=True)
    log.debug('glushkov_star: %d states', nfa.state_count)
    return nfa


def star_closure(nfa):
    """ An NFA for L(nfa)*: a fresh accepting initial state copies the
    out-transitions of the old initial states, and every accepting state
    gains the same copies. """
    fresh = nfa.state_count
    transitions = dict((key, set(targets))
                       for key, targets in nfa.transitions.items())
    for state in nfa.initial:
        for symbol in nfa.alphabet:
            targets = nfa.successors(state, symbol)
            if not targets:
                continue
            for source in list(nfa.accepting) + [fresh]:
                transitions.setdefault((source, symbol), set()).update(
                    targets)
    return Nfa(fresh + 1, nfa.alphabet, [fresh], nfa.accepting | {fresh},
               transitions)


def subset_construct(nfa, alphabet):
    """ Determinize ``nfa`` over ``alphabet``, exploring reachable subsets
    only; the empty subset becomes the sink when it is reachable. """
    missing = alphabet.missing_from(nfa.symbols_used())
    if missing:
        raise AlphabetMismatch(missing)
    start = nfa.initial
    index = {start: 0}
    subsets = [start]
    delta = []
    pending = 0
    while pending < len(subsets):
        current = subsets[pending]
        row = []
        for symbol in alphabet:
            target = nfa.step_set(current, symbol)
            if target not in index:
                index[target] = len(subsets)
                subsets.append(target)
            row.append(index[target])
        delta.append(row)
        pending += 1
    accepting = [i for i, subset in enumerate(subsets)
                 if subset & nfa.accepting]
    log.debug('subset construction: %d NFA states -> %d DFA states',
              nfa.state_count, len(subsets))
    return Dfa(alphabet, 0, accepting, delta, labels=subsets)


def complement(dfa):
    accepting = frozenset(range(dfa.state_count)) - dfa.accepting
    return Dfa(dfa.alphabet, dfa.start, accepting, dfa.delta,
               labels=dfa.labels)


def trim_useful(dfa):
    graph = dfa.graph()
    reachable = nx.descendants(graph, dfa.start) | {dfa.start}
    reverse = graph.reverse(copy=False)
    coreachable = set(dfa.accepting)
    for state in dfa.accepting:
        coreachable.update(nx.descendants(reverse, state))
    return TrimmedDfa(dfa, reachable & coreachable)


def is_infinite(dfa):
    """ True iff L(dfa) is infinite: the useful part contains a cycle """
    return not nx.is_directed_acyclic_graph(trim_useful(dfa).graph())


def _smallest_word(dfa, layers, length):
    # walk back from the accepting states of the last layer, then pick the
    # smallest symbol that stays on a completing path
    good = [None] * (length + 1)
    good[length] = layers[length] & dfa.accepting
    for k in range(length - 1, -1, -1):
        good[k] = frozenset(
            state for state in layers[k]
            if any(target in good[k + 1] for target in dfa.delta[state]))
    word = []
    state = dfa.start
    for k in range(length):
        for symbol, target in zip(dfa.alphabet, dfa.delta[state]):
            if target in good[k + 1]:
                word.append(symbol)
                state = target
                break
    return ''.join(word)


def window_accepts(dfa, lo, hi):
    """ The smallest length in ``[lo, hi)`` at which ``dfa`` accepts some
    word, with the lexicographically smallest such word, or ``None`` """
    if lo < 0 or hi < lo:
        raise InvalidArgument('bad window [%r, %r)' % (lo, hi))
    layers = [frozenset([dfa.start])]
    for length in range(hi):
        if length >= lo and layers[length] & dfa.accepting:
            return length, _smallest_word(dfa, layers, length)
        layers.append(frozenset(
            target for state in layers[length]
            for target in dfa.delta[state]))
    return None


def longest_accepted(dfa):
    """ ``(length, word)`` for the longest accepted words of a finite
    language, choosing the lexicographically smallest; ``None`` when the
    language is empty """
    trimmed = trim_useful(dfa)
    if trimmed.is_empty():
        return None
    graph = trimmed.graph()
    if not nx.is_directed_acyclic_graph(graph):
        raise InfiniteLanguage('the language of %r is infinite' % (dfa,))
    longest = {}
    for state in reversed(list(nx.topological_sort(graph))):
        best = 0 if state in dfa.accepting else -1
        for _, target in trimmed.transitions(state):
            best = max(best, longest[target] + 1)
        longest[state] = best
    state = dfa.start
    remaining = longest[state]
    word = []
    while remaining > 0:
        for symbol, target in trimmed.transitions(state):
            if longest[target] == remaining - 1:
                word.append(symbol)
                state = target
                break
        remaining -= 1
    return longest[dfa.start], ''.join(word)


def pumping_decomposition(dfa, word):
    """ Split ``word`` as ``(x, y, z)`` at the first repeated state of its
    run, so that ``x + y * k + z`` ends in the same state for every k """
    seen = {}
    for position, state in enumerate(dfa.run(word)):
        if state in seen:
            begin = seen[state]
            return word[:begin], word[begin:position], word[position:]
        seen[state] = position
    raise InvalidArgument(
        'word of length %d repeats no state' % len(word))


def reachability(nfa, word):
    """ The reachability matrix of ``nfa`` after reading ``word`` """
    matrix = ReachabilityMatrix.identity(nfa.state_count)
    for symbol in word:
        if symbol not in nfa.alphabet:
            raise UnknownSymbol(symbol)
        matrix = matrix.step(nfa.adjacency(symbol))
    return matrix


def verify_rejected(nfa, word):
    """ True iff ``nfa`` rejects ``word``, decided on the reachability
    matrix alone """
    return not reachability(nfa, word).reaches(nfa.initial, nfa.accepting)


def _ints(tokens, lineno):
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise NfaFormatError('expected integers, got %r' % ' '.join(tokens),
                             lineno)


def parse_nfa(text):
    header = {}
    transitions = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]
        if keyword in ('states', 'alphabet', 'initial', 'accepting'):
            if keyword in header:
                raise NfaFormatError('duplicate %r line' % keyword, lineno)
            header[keyword] = (tokens[1:], lineno)
        elif len(tokens) == 3:
            transitions.append((tokens, lineno))
        else:
            raise NfaFormatError('cannot parse %r' % line, lineno)
    for keyword in ('states', 'alphabet', 'initial', 'accepting'):
        if keyword not in header:
            raise NfaFormatError('missing %r line' % keyword)

    tokens, lineno = header['states']
    counts = _ints(tokens, lineno)
    if len(counts) != 1 or counts[0] < 0:
        raise NfaFormatError("'states' takes one non-negative count", lineno)
    state_count = counts[0]

    tokens, lineno = header['alphabet']
    symbols = ''.join(tokens)
    for symbol in symbols:
        if not is_symbol(symbol):
            raise NfaFormatError('invalid symbol %r' % symbol, lineno)
    alphabet = Alphabet.of(symbols)
    if len(alphabet) != len(symbols):
        raise NfaFormatError('duplicate alphabet symbol', lineno)

    def states(keyword):
        tokens, lineno = header[keyword]
        ids = _ints(tokens, lineno)
        for state in ids:
            if not 0 <= state < state_count:
                raise NfaFormatError('state %d out of range' % state, lineno)
        return ids

    table = {}
    for (source, symbol, target), lineno in transitions:
        source, target = _ints([source, target], lineno)
        for state in (source, target):
            if not 0 <= state < state_count:
                raise NfaFormatError('state %d out of range' % state, lineno)
        if symbol not in alphabet:
            raise NfaFormatError('symbol %r not in alphabet' % symbol, lineno)
        table.setdefault((source, symbol), set()).add(target)
    return Nfa(state_count, alphabet, states('initial'),
               states('accepting'), table)


def count_accepted(dfa, horizon):
    """ ``counts[l]`` is the number of accepted words of length ``l`` for
    ``l`` in ``0..horizon`` """
    weights = {dfa.start: 1}
    counts = []
    for _ in range(horizon + 1):
        counts.append(sum(weight for state, weight in weights.items()
                          if state in dfa.accepting))
        following = {}
        for state, weight in weights.items():
            for target in dfa.delta[state]:
                following[target] = following.get(target, 0) + weight
        weights = following
    return counts
