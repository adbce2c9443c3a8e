import unittest

from hypothesis import given
from hypothesis import strategies as st


def _regexes(symbols='abEPS'):
    from star_frobenius.regex import Concat
    from star_frobenius.regex import EmptySet
    from star_frobenius.regex import Epsilon
    from star_frobenius.regex import Star
    from star_frobenius.regex import Symbol
    from star_frobenius.regex import Union
    leaves = st.one_of(
        st.sampled_from(symbols).map(Symbol),
        st.just(Epsilon()),
        st.just(EmptySet()),
        )
    return st.recursive(
        leaves,
        lambda children: st.one_of(
            st.builds(Union, children, children),
            st.builds(Concat, children, children),
            st.builds(Star, children),
            ),
        max_leaves=8)


class Test_parse_regex(unittest.TestCase):
    def _callFUT(self, text):
        from star_frobenius.regex import parse_regex
        return parse_regex(text)

    def test_symbol(self):
        from star_frobenius.regex import Symbol
        self.assertEqual(self._callFUT('a'), Symbol('a'))

    def test_reduction_block(self):
        from star_frobenius.regex import Concat
        from star_frobenius.regex import Symbol
        from star_frobenius.regex import Union
        either = Union(Symbol('T'), Symbol('F'))
        self.assertEqual(self._callFUT('(T+F)(T+F)'), Concat(either, either))

    def test_precedence(self):
        from star_frobenius.regex import Concat
        from star_frobenius.regex import Symbol
        from star_frobenius.regex import Union
        a = Symbol('a')
        self.assertEqual(self._callFUT('aa+aaa'),
                         Union(Concat(a, a), Concat(Concat(a, a), a)))

    def test_star_binds_tightest(self):
        from star_frobenius.regex import Concat
        from star_frobenius.regex import Star
        from star_frobenius.regex import Symbol
        self.assertEqual(self._callFUT('ab*'),
                         Concat(Symbol('a'), Star(Symbol('b'))))

    def test_repeated_star(self):
        from star_frobenius.regex import Star
        from star_frobenius.regex import Symbol
        self.assertEqual(self._callFUT('a**'), Star(Star(Symbol('a'))))

    def test_whitespace_ignored(self):
        self.assertEqual(self._callFUT(' ( T + F ) F '),
                         self._callFUT('(T+F)F'))

    def test_constants(self):
        from star_frobenius.regex import EmptySet
        from star_frobenius.regex import Epsilon
        self.assertEqual(self._callFUT(u'ε'), Epsilon())
        self.assertEqual(self._callFUT('EPS'), Epsilon())
        self.assertEqual(self._callFUT(u'∅'), EmptySet())
        self.assertEqual(self._callFUT('EMPTY'), EmptySet())

    def test_keyword_needs_all_letters(self):
        from star_frobenius.regex import Concat
        from star_frobenius.regex import Symbol
        self.assertEqual(self._callFUT('EP'),
                         Concat(Symbol('E'), Symbol('P')))

    def test_unbalanced_open(self):
        from star_frobenius.exceptions import RegexSyntaxError
        try:
            self._callFUT('((a')
        except RegexSyntaxError as e:
            self.assertEqual(e.position, 3)
            self.assertEqual(e.msg, 'unbalanced parenthesis')
        else: # pragma: no cover
            raise AssertionError('RegexSyntaxError not raised')

    def test_unbalanced_close(self):
        from star_frobenius.exceptions import RegexSyntaxError
        try:
            self._callFUT('a)')
        except RegexSyntaxError as e:
            self.assertEqual(e.position, 1)
        else: # pragma: no cover
            raise AssertionError('RegexSyntaxError not raised')

    def test_empty_branch(self):
        from star_frobenius.exceptions import RegexSyntaxError
        self.assertRaises(RegexSyntaxError, self._callFUT, 'a+')
        self.assertRaises(RegexSyntaxError, self._callFUT, '+a')
        self.assertRaises(RegexSyntaxError, self._callFUT, '()')

    def test_dangling_star(self):
        from star_frobenius.exceptions import RegexSyntaxError
        try:
            self._callFUT('*a')
        except RegexSyntaxError as e:
            self.assertEqual(e.position, 0)
            self.assertEqual(e.msg, "dangling '*'")
        else: # pragma: no cover
            raise AssertionError('RegexSyntaxError not raised')

    def test_empty_text(self):
        from star_frobenius.exceptions import RegexSyntaxError
        self.assertRaises(RegexSyntaxError, self._callFUT, '')
        self.assertRaises(RegexSyntaxError, self._callFUT, '   ')

    def test_invalid_character(self):
        from star_frobenius.exceptions import RegexSyntaxError
        self.assertRaises(RegexSyntaxError, self._callFUT, 'a\x00')

    def test_syntax_error_exit_code(self):
        from star_frobenius.exceptions import RegexSyntaxError
        self.assertEqual(RegexSyntaxError('x', 0).exit_code, 2)


class Test_symbol_length(unittest.TestCase):
    def _callFUT(self, ast):
        from star_frobenius.regex import symbol_length
        return symbol_length(ast)

    def test_it(self):
        from star_frobenius.regex import Symbol
        from star_frobenius.regex import parse_regex
        self.assertEqual(self._callFUT(Symbol('a')), 1)
        self.assertEqual(self._callFUT(parse_regex('aa+aaa')), 5)
        self.assertEqual(self._callFUT(parse_regex('(T+F)(T+F)')), 4)
        self.assertEqual(self._callFUT(parse_regex(u'ε+∅*')), 0)

    @given(_regexes(), _regexes())
    def test_additive(self, left, right):
        from star_frobenius.regex import Concat
        from star_frobenius.regex import Star
        from star_frobenius.regex import Union
        total = self._callFUT(left) + self._callFUT(right)
        self.assertEqual(self._callFUT(Union(left, right)), total)
        self.assertEqual(self._callFUT(Concat(left, right)), total)
        self.assertEqual(self._callFUT(Star(left)), self._callFUT(left))


class Test_alphabet_of(unittest.TestCase):
    def _callFUT(self, text):
        from star_frobenius.regex import alphabet_of
        from star_frobenius.regex import parse_regex
        return alphabet_of(parse_regex(text))

    def test_it(self):
        self.assertEqual(self._callFUT('aa+aaa').text, 'a')
        self.assertEqual(self._callFUT('(T+F)F').symbols, ('F', 'T'))
        self.assertEqual(len(self._callFUT(u'ε')), 0)


class TestAlphabet(unittest.TestCase):
    def _makeOne(self, symbols):
        from star_frobenius.regex import Alphabet
        return Alphabet(symbols)

    def test_codepoint_order(self):
        alphabet = self._makeOne('TF')
        self.assertEqual(list(alphabet), ['F', 'T'])
        self.assertEqual(alphabet.index('T'), 1)

    def test_duplicate(self):
        from star_frobenius.exceptions import DuplicateSymbol
        self.assertRaises(DuplicateSymbol, self._makeOne, 'aba')

    def test_metachar(self):
        from star_frobenius.exceptions import InvalidArgument
        self.assertRaises(InvalidArgument, self._makeOne, 'a*')
        self.assertRaises(InvalidArgument, self._makeOne, ['ab'])

    def test_parse_ignores_whitespace(self):
        from star_frobenius.regex import Alphabet
        self.assertEqual(Alphabet.parse('T F'), self._makeOne('FT'))

    def test_of_deduplicates(self):
        from star_frobenius.regex import Alphabet
        self.assertEqual(Alphabet.of('abba'), self._makeOne('ab'))

    def test_missing_from(self):
        alphabet = self._makeOne('ab')
        self.assertEqual(alphabet.missing_from('abc'), set(['c']))
        self.assertTrue(alphabet.issuperset('ba'))
        self.assertFalse('c' in alphabet)


class TestNodes(unittest.TestCase):
    def test_structural_equality(self):
        from star_frobenius.regex import Concat
        from star_frobenius.regex import Symbol
        from star_frobenius.regex import Union
        self.assertEqual(Concat(Symbol('a'), Symbol('b')),
                         Concat(Symbol('a'), Symbol('b')))
        self.assertNotEqual(Concat(Symbol('a'), Symbol('b')),
                            Union(Symbol('a'), Symbol('b')))
        self.assertEqual(len(set([Symbol('a'), Symbol('a')])), 1)

    def test_bad_symbol(self):
        from star_frobenius.exceptions import InvalidArgument
        from star_frobenius.regex import Symbol
        self.assertRaises(InvalidArgument, Symbol, '+')
        self.assertRaises(InvalidArgument, Symbol, ' ')

    def test_provides_interface(self):
        from zope.interface.verify import verifyObject
        from star_frobenius.interfaces import IRegexNode
        from star_frobenius.regex import Star
        from star_frobenius.regex import Symbol
        verifyObject(IRegexNode, Star(Symbol('a')))


class Test_to_text(unittest.TestCase):
    def _callFUT(self, ast, ascii=False):
        from star_frobenius.regex import to_text
        return to_text(ast, ascii=ascii)

    def _parse(self, text):
        from star_frobenius.regex import parse_regex
        return parse_regex(text)

    def test_minimal_parens(self):
        self.assertEqual(self._callFUT(self._parse('(T+F)(T+F)')),
                         '(T+F)(T+F)')
        self.assertEqual(self._callFUT(self._parse('((ab))*+c')), '(ab)*+c')

    def test_right_nesting_kept(self):
        from star_frobenius.regex import Concat
        from star_frobenius.regex import Symbol
        ast = Concat(Symbol('a'), Concat(Symbol('b'), Symbol('c')))
        self.assertEqual(self._callFUT(ast), 'a(bc)')
        self.assertEqual(self._parse('a(bc)'), ast)

    def test_ascii_constants(self):
        ast = self._parse(u'ε+∅')
        self.assertEqual(self._callFUT(ast), u'ε+∅')
        self.assertEqual(self._callFUT(ast, ascii=True), 'EPS+EMPTY')

    def test_keyword_spelled_by_symbols(self):
        from star_frobenius.regex import Concat
        from star_frobenius.regex import Symbol
        ast = Concat(Concat(Symbol('E'), Symbol('P')), Symbol('S'))
        text = self._callFUT(ast)
        self.assertEqual(text, 'EP S')
        self.assertEqual(self._parse(text), ast)

    @given(_regexes(), st.booleans())
    def test_roundtrip(self, ast, ascii):
        self.assertEqual(self._parse(self._callFUT(ast, ascii)), ast)


class Test_literal_union(unittest.TestCase):
    def _callFUT(self, words):
        from star_frobenius.regex import literal_union
        return literal_union(words)

    def test_shortest_first(self):
        from star_frobenius.regex import to_text
        self.assertEqual(to_text(self._callFUT(['aaa', 'aa', 'aa'])),
                         'aa+aaa')

    def test_empty_word(self):
        from star_frobenius.regex import Epsilon
        self.assertEqual(self._callFUT(['']), Epsilon())

    def test_empty_set(self):
        from star_frobenius.regex import EmptySet
        self.assertEqual(self._callFUT([]), EmptySet())


class Test_is_star_free(unittest.TestCase):
    def _callFUT(self, text):
        from star_frobenius.regex import is_star_free
        from star_frobenius.regex import parse_regex
        return is_star_free(parse_regex(text))

    def test_it(self):
        self.assertTrue(self._callFUT('FTF+(T+F)(T+F)'))
        self.assertFalse(self._callFUT('a(b+c*)'))
