""" Regular expressions over an explicit alphabet.

Grammar (whitespace between tokens is ignored)::

    expr   := term ('+' term)*
    term   := factor+
    factor := atom '*'*
    atom   := symbol | 'ε' | 'EPS' | '∅' | 'EMPTY' | '(' expr ')'

``*`` binds tightest, then concatenation (juxtaposition), then ``+``.
A symbol is any single printable non-whitespace character other than the
metacharacters ``+ ( ) * ε ∅``.
"""
import logging

from zope.interface import implementer

from star_frobenius.exceptions import DuplicateSymbol
from star_frobenius.exceptions import InvalidArgument
from star_frobenius.exceptions import RegexSyntaxError
from star_frobenius.interfaces import IRegexNode

log = logging.getLogger(__name__)

EPSILON_CHAR = u'ε'
EMPTYSET_CHAR = u'∅'
METACHARS = frozenset(u'+()*' + EPSILON_CHAR + EMPTYSET_CHAR)

# ASCII spellings of the two constant atoms; longest first
KEYWORDS = (('EMPTY', 'EMPTY'), ('EPS', 'EPS'))

UNION_PRECEDENCE = 0
CONCAT_PRECEDENCE = 1
STAR_PRECEDENCE = 2
ATOM_PRECEDENCE = 3


def is_symbol(ch):
    return (isinstance(ch, str) and len(ch) == 1 and ch.isprintable()
            and not ch.isspace() and ch not in METACHARS)


@implementer(IRegexNode)
class _Node(object):
    __slots__ = ()
    _fields = ()
    precedence = ATOM_PRECEDENCE

    def children(self):
        return ()

    def _key(self):
        return tuple(getattr(self, name) for name in self._fields)

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((type(self).__name__,) + self._key())

    def __repr__(self):
        args = ', '.join(repr(getattr(self, name)) for name in self._fields)
        return '%s(%s)' % (type(self).__name__, args)


class EmptySet(_Node):
    __slots__ = ()


class Epsilon(_Node):
    __slots__ = ()


class Symbol(_Node):
    __slots__ = ('letter',)
    _fields = ('letter',)

    def __init__(self, letter):
        if not is_symbol(letter):
            raise InvalidArgument('%r is not a valid alphabet symbol' % letter)
        self.letter = letter


class Union(_Node):
    __slots__ = ('left', 'right')
    _fields = ('left', 'right')
    precedence = UNION_PRECEDENCE

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def children(self):
        return (self.left, self.right)


class Concat(_Node):
    __slots__ = ('left', 'right')
    _fields = ('left', 'right')
    precedence = CONCAT_PRECEDENCE

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def children(self):
        return (self.left, self.right)


class Star(_Node):
    __slots__ = ('child',)
    _fields = ('child',)
    precedence = STAR_PRECEDENCE

    def __init__(self, child):
        self.child = child

    def children(self):
        return (self.child,)


class Alphabet(object):
    """ An ordered set of symbols; iteration follows ascending codepoint
    order.  Passing the same symbol twice raises ``DuplicateSymbol``; use
    :meth:`of` to build an alphabet from a collection that may repeat."""

    def __init__(self, symbols=()):
        seen = set()
        for symbol in symbols:
            if not is_symbol(symbol):
                raise InvalidArgument(
                    '%r is not a valid alphabet symbol' % (symbol,))
            if symbol in seen:
                raise DuplicateSymbol(symbol)
            seen.add(symbol)
        self.symbols = tuple(sorted(seen))
        self._index = dict((s, i) for i, s in enumerate(self.symbols))

    @classmethod
    def of(cls, symbols):
        return cls(set(symbols))

    @classmethod
    def parse(cls, text):
        """ Parse a declared alphabet such as ``"ab"`` or ``"T F"`` """
        return cls(ch for ch in text if not ch.isspace())

    def index(self, symbol):
        return self._index[symbol]

    def issuperset(self, other):
        return set(self.symbols).issuperset(other)

    def missing_from(self, symbols):
        return set(symbols) - set(self.symbols)

    @property
    def text(self):
        return ''.join(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, symbol):
        return symbol in self._index

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return 'Alphabet(%r)' % (self.text,)


def _tokenize(text):
    tokens = []
    i = 0
    end = len(text)
    while i < end:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        for keyword, kind in KEYWORDS:
            if text.startswith(keyword, i):
                tokens.append((kind, keyword, i))
                i += len(keyword)
                break
        else:
            if ch in '+()*':
                tokens.append((ch, ch, i))
            elif ch == EPSILON_CHAR:
                tokens.append(('EPS', ch, i))
            elif ch == EMPTYSET_CHAR:
                tokens.append(('EMPTY', ch, i))
            elif is_symbol(ch):
                tokens.append(('SYM', ch, i))
            else:
                raise RegexSyntaxError('invalid character %r' % ch, i)
            i += 1
    return tokens


_ATOM_STARTS = frozenset(['SYM', 'EPS', 'EMPTY', '('])


class _Parser(object):
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return (None, None, len(self.text))

    def advance(self):
        token = self.peek()
        self.pos += 1
        return token

    def parse(self):
        node = self.expr()
        kind, _, offset = self.peek()
        if kind == ')':
            raise RegexSyntaxError('unbalanced parenthesis', offset)
        if kind is not None: # pragma: no cover (term consumes all atoms)
            raise RegexSyntaxError('unexpected %r' % kind, offset)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] == '+':
            self.advance()
            node = Union(node, self.term())
        return node

    def term(self):
        kind, _, offset = self.peek()
        if kind == '*':
            raise RegexSyntaxError("dangling '*'", offset)
        if kind not in _ATOM_STARTS:
            raise RegexSyntaxError('empty alternation branch', offset)
        node = self.factor()
        while self.peek()[0] in _ATOM_STARTS:
            node = Concat(node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        while self.peek()[0] == '*':
            self.advance()
            node = Star(node)
        return node

    def atom(self):
        kind, value, offset = self.advance()
        if kind == 'SYM':
            return Symbol(value)
        if kind == 'EPS':
            return Epsilon()
        if kind == 'EMPTY':
            return EmptySet()
        # kind == '('
        node = self.expr()
        kind, _, offset = self.peek()
        if kind != ')':
            raise RegexSyntaxError('unbalanced parenthesis', offset)
        self.advance()
        return node


def parse_regex(text):
    """ Parse ``text`` into a syntax tree; raise ``RegexSyntaxError``
    carrying the offset of the offending token """
    if not text or not text.strip():
        raise RegexSyntaxError('empty expression', 0)
    return _Parser(text).parse()


def walk(ast):
    """ Yield every node of ``ast`` in preorder """
    stack = [ast]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children()))


def symbol_length(ast):
    """ Number of alphabet-symbol occurrences in ``ast`` """
    return sum(1 for node in walk(ast) if isinstance(node, Symbol))


def alphabet_of(ast):
    return Alphabet.of(
        node.letter for node in walk(ast) if isinstance(node, Symbol))


def is_star_free(ast):
    return not any(isinstance(node, Star) for node in walk(ast))


def literal_union(words):
    """ The union of the given words as literals, shortest words first """
    terms = []
    for word in sorted(set(words), key=lambda w: (len(w), w)):
        if not word:
            terms.append(Epsilon())
            continue
        node = Symbol(word[0])
        for letter in word[1:]:
            node = Concat(node, Symbol(letter))
        terms.append(node)
    if not terms:
        return EmptySet()
    node = terms[0]
    for term in terms[1:]:
        node = Union(node, term)
    return node


def _straddles_keyword(left, right):
    for keyword, _ in KEYWORDS:
        for split in range(1, len(keyword)):
            if (left.endswith(keyword[:split]) and
                    right.startswith(keyword[split:])):
                return True
    return False


def _join(left, right):
    # a space keeps juxtaposed symbols from spelling EPS or EMPTY
    if _straddles_keyword(left, right):
        return left + ' ' + right
    return left + right


def _wrap(node, ascii, needs_parens):
    text = to_text(node, ascii)
    if needs_parens:
        return '(' + text + ')'
    return text


def to_text(ast, ascii=False):
    """ Render ``ast`` in the grammar accepted by :func:`parse_regex` """
    if isinstance(ast, Symbol):
        return ast.letter
    if isinstance(ast, Epsilon):
        return 'EPS' if ascii else EPSILON_CHAR
    if isinstance(ast, EmptySet):
        return 'EMPTY' if ascii else EMPTYSET_CHAR
    if isinstance(ast, Star):
        child = _wrap(ast.child, ascii, ast.child.precedence < STAR_PRECEDENCE)
        return child + '*'
    prec = ast.precedence
    left = _wrap(ast.left, ascii, ast.left.precedence < prec)
    right = _wrap(ast.right, ascii, ast.right.precedence <= prec)
    if isinstance(ast, Union):
        return left + '+' + right
    return _join(left, right)
