""" 3SAT instances and their reduction to star-free expressions over
``{F, T}``: the clauses are satisfiable iff ``E*`` is not co-finite. """
import collections
import itertools
import logging

from star_frobenius.exceptions import BadLengths
from star_frobenius.exceptions import DimacsFormatError
from star_frobenius.exceptions import InvalidArgument
from star_frobenius.exceptions import NotThreeSat
from star_frobenius.exceptions import Tautology
from star_frobenius.exceptions import TooLarge
from star_frobenius.exceptions import UnusedVariable
from star_frobenius.frobenius import frobenius_of_finite_set
from star_frobenius.regex import Alphabet
from star_frobenius.regex import Concat
from star_frobenius.regex import Symbol
from star_frobenius.regex import Union

log = logging.getLogger(__name__)

SAT_LIMIT = 24
REDUCTION_ALPHABET = Alphabet('FT')

LemmaVerdict = collections.namedtuple(
    'LemmaVerdict', 'cofinite sigma_m_subset lemma_respected')


class CnfInstance(object):
    """ A 3SAT instance: every clause names three distinct variables and
    every variable ``1..variable_count`` occurs somewhere. """

    def __init__(self, variable_count, clauses):
        self.variable_count = variable_count
        self.clauses = tuple(tuple(clause) for clause in clauses)
        self._validate()

    def _validate(self):
        if not self.clauses:
            raise InvalidArgument('a 3SAT instance needs at least one clause')
        used = set()
        for clause in self.clauses:
            if len(clause) != 3:
                raise NotThreeSat('clause %r has %d literals'
                                  % (clause, len(clause)))
            for literal in clause:
                if (not isinstance(literal, int) or literal == 0 or
                        abs(literal) > self.variable_count):
                    raise InvalidArgument(
                        'literal %r out of range 1..%d'
                        % (literal, self.variable_count))
            if any(-literal in clause for literal in clause):
                raise Tautology('clause %r contains a variable and its '
                                'negation' % (clause,))
            variables = set(abs(literal) for literal in clause)
            if len(variables) != 3:
                raise NotThreeSat('clause %r repeats a variable' % (clause,))
            used.update(variables)
        for variable in range(1, self.variable_count + 1):
            if variable not in used:
                raise UnusedVariable(variable)

    @property
    def clause_count(self):
        return len(self.clauses)

    def satisfied_by(self, assignment):
        """ ``assignment[j - 1]`` is the truth value of variable ``j`` """
        return all(any(assignment[abs(literal) - 1] == (literal > 0)
                       for literal in clause)
                   for clause in self.clauses)

    def __eq__(self, other):
        return (isinstance(other, CnfInstance) and
                self.variable_count == other.variable_count and
                self.clauses == other.clauses)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.variable_count, self.clauses))

    def __repr__(self):
        return '<CnfInstance n=%d m=%d>' % (self.variable_count,
                                            self.clause_count)


def _int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise DimacsFormatError('bad token %r' % token, lineno)


def parse_dimacs(text):
    header = None
    clauses = []
    current = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('c'):
            continue
        if line.startswith('%'):
            break
        if line.startswith('p'):
            if header is not None:
                raise DimacsFormatError('duplicate problem line', lineno)
            tokens = line.split()
            if len(tokens) != 4 or tokens[1] != 'cnf':
                raise DimacsFormatError('expected "p cnf <vars> <clauses>"',
                                        lineno)
            header = (_int(tokens[2], lineno), _int(tokens[3], lineno))
            if header[0] < 0 or header[1] < 0:
                raise DimacsFormatError('negative count in header', lineno)
            continue
        if header is None:
            raise DimacsFormatError('clause before the problem line', lineno)
        for token in line.split():
            literal = _int(token, lineno)
            if literal == 0:
                clauses.append((tuple(current), lineno))
                current = []
            elif abs(literal) > header[0]:
                raise DimacsFormatError(
                    'literal %d names a variable above %d'
                    % (literal, header[0]), lineno)
            else:
                current.append(literal)
    if header is None:
        raise DimacsFormatError('missing problem line')
    if current:
        raise DimacsFormatError('last clause is not terminated by 0')
    variable_count, clause_count = header
    if len(clauses) != clause_count:
        raise DimacsFormatError('problem line declares %d clauses, found %d'
                                % (clause_count, len(clauses)))
    for clause, lineno in clauses:
        if len(clause) != 3:
            raise NotThreeSat('line %d: clause has %d literals'
                              % (lineno, len(clause)))
    return CnfInstance(variable_count, [clause for clause, _ in clauses])


def format_dimacs(cnf):
    lines = ['p cnf %d %d' % (cnf.variable_count, cnf.clause_count)]
    for clause in cnf.clauses:
        lines.append(' '.join(str(literal) for literal in clause) + ' 0')
    return '\n'.join(lines) + '\n'


def _either():
    return Union(Symbol('T'), Symbol('F'))


def _chain(nodes):
    node = nodes[0]
    for other in nodes[1:]:
        node = Concat(node, other)
    return node


def cnf_to_regex(cnf):
    """ ``e_1 + ... + e_m + (T+F)^n (T+F)``; ``e_i`` spells the
    assignments falsifying clause ``i``: ``F`` where the variable occurs
    positively, ``T`` where it occurs negated, ``(T+F)`` elsewhere. """
    terms = []
    for clause in cnf.clauses:
        signs = dict((abs(literal), literal) for literal in clause)
        atoms = []
        for variable in range(1, cnf.variable_count + 1):
            literal = signs.get(variable)
            if literal is None:
                atoms.append(_either())
            elif literal > 0:
                atoms.append(Symbol('F'))
            else:
                atoms.append(Symbol('T'))
        terms.append(_chain(atoms))
    terms.append(_chain([_either() for _ in range(cnf.variable_count + 1)]))
    node = terms[0]
    for term in terms[1:]:
        node = Union(node, term)
    return node


def reduction_symbol_count(variable_count, clause_count):
    return clause_count * (2 * variable_count - 3) + 2 * variable_count + 2


def sat_bruteforce(cnf):
    """ The first satisfying assignment in lexicographic order of truth
    vectors (``False < True``), or ``None`` """
    if cnf.variable_count > SAT_LIMIT:
        raise TooLarge('%d variables; the brute-force limit is %d'
                       % (cnf.variable_count, SAT_LIMIT))
    for assignment in itertools.product((False, True),
                                        repeat=cnf.variable_count):
        if cnf.satisfied_by(assignment):
            return assignment
    return None


def all_clauses(variable_count):
    """ Every 3-literal clause over distinct variables, in a fixed order """
    for variables in itertools.combinations(
            range(1, variable_count + 1), 3):
        for signs in itertools.product((1, -1), repeat=3):
            yield tuple(sign * variable
                        for sign, variable in zip(signs, variables))


def all_sign_patterns():
    """ The eight clauses over three variables: unsatisfiable """
    return CnfInstance(3, list(all_clauses(3)))


def random_cnf(variable_count, clause_count, rng):
    if variable_count < 3 or 3 * clause_count < variable_count:
        raise InvalidArgument(
            'cannot cover %d variables with %d clauses'
            % (variable_count, clause_count))
    uncovered = list(range(1, variable_count + 1))
    rng.shuffle(uncovered)
    clauses = []
    for _ in range(clause_count):
        chosen = uncovered[:3]
        del uncovered[:3]
        rest = [variable for variable in range(1, variable_count + 1)
                if variable not in chosen]
        chosen.extend(rng.sample(rest, 3 - len(chosen)))
        clauses.append(tuple(variable if rng.random() < 0.5 else -variable
                             for variable in sorted(chosen)))
    return CnfInstance(variable_count, clauses)


def check_lemma(words, m, n, alphabet):
    """ If ``S`` lies in ``Σ^m ∪ Σ^n`` with ``0 < m < n`` and ``S*`` is
    co-finite, ``S`` contains all of ``Σ^m``. """
    if not 0 < m < n:
        raise InvalidArgument('need 0 < m < n, got m=%r n=%r' % (m, n))
    words = set(words)
    for word in words:
        if len(word) not in (m, n):
            raise BadLengths('%r has length %d, expected %d or %d'
                             % (word, len(word), m, n))
    cofinite = frobenius_of_finite_set(words, alphabet).cofinite
    sigma_m_subset = all(''.join(letters) in words
                         for letters in itertools.product(alphabet.symbols,
                                                          repeat=m))
    return LemmaVerdict(cofinite, sigma_m_subset,
                        (not cofinite) or sigma_m_subset)
