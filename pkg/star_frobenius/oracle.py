""" Brute-force ground truth for ``E*``.

Nothing here touches :mod:`star_frobenius.automata`: regex matching works
on the syntax tree directly and star membership is a prefix dynamic
program, so disagreements with the automaton pipeline expose bugs on
either side.
"""
import collections
import itertools
import logging

from star_frobenius.config import budget_from_environ
from star_frobenius.exceptions import BudgetExceeded
from star_frobenius.exceptions import InvalidArgument
from star_frobenius.regex import Concat
from star_frobenius.regex import EmptySet
from star_frobenius.regex import Epsilon
from star_frobenius.regex import Star
from star_frobenius.regex import Symbol
from star_frobenius.regex import Union
from star_frobenius.regex import symbol_length

log = logging.getLogger(__name__)

MissingLength = collections.namedtuple('MissingLength', 'length count smallest')


class OracleVerdict(object):
    def __init__(self, cofinite, frobenius_length=None):
        self.cofinite = cofinite
        self.frobenius_length = frobenius_length

    def as_dict(self):
        return {'cofinite': self.cofinite,
                'frobenius_length': self.frobenius_length}

    def __eq__(self, other):
        return (isinstance(other, OracleVerdict) and
                self.as_dict() == other.as_dict())

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):
        return '<OracleVerdict cofinite=%r frobenius_length=%r>' % (
            self.cofinite, self.frobenius_length)


class OracleReport(object):
    def __init__(self, horizon, missing, conclusive, verdict=None):
        self.horizon = horizon
        self.missing = list(missing)
        self.conclusive = conclusive
        self.verdict = verdict

    def missing_lengths(self):
        return [entry.length for entry in self.missing]

    def as_dict(self):
        return {
            'horizon': self.horizon,
            'missing': [entry._asdict() for entry in self.missing],
            'conclusive': self.conclusive,
            'verdict': self.verdict.as_dict() if self.verdict else None,
            }


class _SpanMatcher(object):
    """ Memoized matching of syntax-tree nodes against spans of one word """

    def __init__(self, word):
        self.word = word
        self.memo = {}

    def match(self, node, i, j):
        key = (id(node), i, j)
        result = self.memo.get(key)
        if result is None:
            result = self.memo[key] = self._match(node, i, j)
        return result

    def _match(self, node, i, j):
        if isinstance(node, Symbol):
            return j == i + 1 and self.word[i] == node.letter
        if isinstance(node, Epsilon):
            return i == j
        if isinstance(node, EmptySet):
            return False
        if isinstance(node, Union):
            return self.match(node.left, i, j) or self.match(node.right, i, j)
        if isinstance(node, Concat):
            return any(self.match(node.left, i, k) and
                       self.match(node.right, k, j)
                       for k in range(i, j + 1))
        if isinstance(node, Star):
            # the empty case, or one non-empty chunk followed by the rest
            return i == j or any(self.match(node.child, i, k) and
                                 self.match(node, k, j)
                                 for k in range(i + 1, j + 1))
        raise InvalidArgument('not a regex node: %r' % (node,))


def regex_match(ast, word):
    """ True iff ``word`` is in L(ast) """
    return _SpanMatcher(word).match(ast, 0, len(word))


def member_star_dp(ast, word):
    """ True iff ``word`` is in L(ast)*.  Position ``j`` is reachable when
    some reachable ``i < j`` has ``word[i:j]`` in L(ast). """
    matcher = _SpanMatcher(word)
    reachable = [True]
    for j in range(1, len(word) + 1):
        reachable.append(any(reachable[i] and matcher.match(ast, i, j)
                             for i in range(j)))
    return reachable[-1]


def enumeration_size(alphabet_size, horizon):
    return sum(alphabet_size ** length for length in range(horizon + 1))


def bruteforce_cofinite(ast, alphabet, horizon, conclusive_bound=None,
                        budget=None):
    """ Enumerate every word up to ``horizon`` and tabulate those missing
    from L(ast)*.

    With a sound ``conclusive_bound`` b (at least the size of the trimmed
    complement automaton) and ``horizon >= 2b - 1`` the report is
    conclusive: ``E*`` is co-finite iff no missing word has length in
    ``[b, 2b)``.
    """
    if horizon < 1:
        raise InvalidArgument('horizon must be at least 1')
    if not len(alphabet):
        raise InvalidArgument('the oracle needs a non-empty alphabet')
    if budget is None:
        budget = budget_from_environ()
    total = enumeration_size(len(alphabet), horizon)
    if total > budget:
        raise BudgetExceeded(
            'horizon %d over %d symbols needs %d words; budget is %d'
            % (horizon, len(alphabet), total, budget))
    missing = []
    for length in range(horizon + 1):
        count = 0
        smallest = None
        for letters in itertools.product(alphabet.symbols, repeat=length):
            word = ''.join(letters)
            if not member_star_dp(ast, word):
                count += 1
                if smallest is None:
                    smallest = word
        if count:
            missing.append(MissingLength(length, count, smallest))
    conclusive = (conclusive_bound is not None and
                  horizon >= 2 * conclusive_bound - 1)
    verdict = None
    if conclusive:
        bound = conclusive_bound
        if any(bound <= entry.length < 2 * bound for entry in missing):
            verdict = OracleVerdict(False)
        else:
            below = [entry.length for entry in missing if entry.length < bound]
            verdict = OracleVerdict(True, max(below) if below else None)
    return OracleReport(horizon, missing, conclusive, verdict)


def worst_case_bound(ast):
    """ 2 ** (t + 1): the subset construction over a ``t + 1`` state NFA
    never needs more states """
    return 2 ** (symbol_length(ast) + 1)


def affordable_horizon(alphabet_size, budget):
    if alphabet_size <= 1:
        return max(0, budget - 1)
    horizon = 0
    total = layer = 1
    while True:
        layer *= alphabet_size
        if total + layer > budget:
            return horizon
        total += layer
        horizon += 1


def adjudicate(ast, alphabet, bound=None, budget=None):
    """ Run the oracle as far as needed for a conclusive verdict, falling
    back to :func:`worst_case_bound` when no bound is given.  When the
    budget cannot reach ``2b - 1`` the largest affordable horizon is used
    and the report is inconclusive. """
    if budget is None:
        budget = budget_from_environ()
    if bound is None:
        bound = worst_case_bound(ast)
    horizon = max(1, 2 * bound - 1)
    affordable = affordable_horizon(len(alphabet), budget)
    if horizon > affordable:
        log.warning('bound %d needs horizon %d but the budget of %d words '
                    'only affords %d; the report will be inconclusive',
                    bound, horizon, budget, affordable)
        horizon = max(1, affordable)
    return bruteforce_cofinite(ast, alphabet, horizon, bound, budget)
