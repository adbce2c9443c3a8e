import logging
import unittest

THREE_FOUR = '(T+F)(T+F)(T+F)+(T+F)(T+F)(T+F)(T+F)'


def _parse(text):
    from star_frobenius.regex import parse_regex
    return parse_regex(text)


class Test_regex_match(unittest.TestCase):
    def _callFUT(self, text, word):
        from star_frobenius.oracle import regex_match
        return regex_match(_parse(text), word)

    def test_symbols(self):
        self.assertTrue(self._callFUT('a', 'a'))
        self.assertFalse(self._callFUT('a', 'b'))
        self.assertFalse(self._callFUT('a', 'aa'))

    def test_constants(self):
        self.assertTrue(self._callFUT(u'ε', ''))
        self.assertFalse(self._callFUT(u'ε', 'a'))
        self.assertFalse(self._callFUT(u'∅', ''))

    def test_union_concat(self):
        self.assertTrue(self._callFUT('aa+aaa', 'aaa'))
        self.assertFalse(self._callFUT('aa+aaa', 'aaaa'))
        self.assertTrue(self._callFUT('(T+F)F', 'TF'))
        self.assertFalse(self._callFUT('(T+F)F', 'FT'))

    def test_star(self):
        self.assertTrue(self._callFUT('(ab)*', ''))
        self.assertTrue(self._callFUT('(ab)*', 'abab'))
        self.assertFalse(self._callFUT('(ab)*', 'aba'))
        self.assertTrue(self._callFUT(u'ε*', ''))
        self.assertTrue(self._callFUT('a**b', 'aaab'))

    def test_not_a_node(self):
        from star_frobenius.exceptions import InvalidArgument
        from star_frobenius.oracle import regex_match
        self.assertRaises(InvalidArgument, regex_match, object(), 'a')


class Test_member_star_dp(unittest.TestCase):
    def _callFUT(self, text, word):
        from star_frobenius.oracle import member_star_dp
        return member_star_dp(_parse(text), word)

    def test_empty_word_always_member(self):
        self.assertTrue(self._callFUT(u'∅', ''))
        self.assertTrue(self._callFUT('a', ''))

    def test_two_three(self):
        members = [n for n in range(10) if self._callFUT('aa+aaa', 'a' * n)]
        self.assertEqual(members, [0, 2, 3, 4, 5, 6, 7, 8, 9])

    def test_mixed(self):
        self.assertTrue(self._callFUT('ab+b', 'abbab'))
        self.assertFalse(self._callFUT('ab+b', 'aab'))

    def test_agrees_with_starred_match(self):
        import itertools
        from star_frobenius.oracle import member_star_dp
        from star_frobenius.oracle import regex_match
        from star_frobenius.regex import Star
        for text in ('a+bb', 'ab*', u'ε+ba', 'aa+aaa'):
            ast = _parse(text)
            for n in range(6):
                for letters in itertools.product('ab', repeat=n):
                    word = ''.join(letters)
                    self.assertEqual(member_star_dp(ast, word),
                                     regex_match(Star(ast), word))


class Test_enumeration_size(unittest.TestCase):
    def test_it(self):
        from star_frobenius.oracle import enumeration_size
        self.assertEqual(enumeration_size(2, 3), 15)
        self.assertEqual(enumeration_size(1, 5), 6)


class Test_bruteforce_cofinite(unittest.TestCase):
    def _callFUT(self, text, symbols, horizon, bound=None, budget=None):
        from star_frobenius.oracle import bruteforce_cofinite
        from star_frobenius.regex import Alphabet
        return bruteforce_cofinite(_parse(text), Alphabet(symbols), horizon,
                                   bound, budget)

    def test_two_three(self):
        report = self._callFUT('aa+aaa', 'a', 9)
        self.assertEqual(report.missing_lengths(), [1])
        self.assertEqual(report.missing[0].smallest, 'a')
        self.assertFalse(report.conclusive)
        self.assertEqual(report.verdict, None)

    def test_two_three_conclusive(self):
        from star_frobenius.oracle import OracleVerdict
        report = self._callFUT('aa+aaa', 'a', 9, bound=5)
        self.assertTrue(report.conclusive)
        self.assertEqual(report.verdict, OracleVerdict(True, 1))

    def test_parity_conclusive(self):
        report = self._callFUT('aa', 'a', 5, bound=3)
        self.assertTrue(report.conclusive)
        self.assertFalse(report.verdict.cofinite)
        self.assertEqual(report.missing_lengths(), [1, 3, 5])

    def test_horizon_short_of_bound(self):
        report = self._callFUT('aa', 'a', 4, bound=3)
        self.assertFalse(report.conclusive)

    def test_three_four_counts(self):
        report = self._callFUT(THREE_FOUR, 'FT', 11, bound=6)
        counts = dict((entry.length, entry.count) for entry in report.missing)
        self.assertEqual(counts, {1: 2, 2: 4, 5: 32})
        self.assertTrue(report.conclusive)
        self.assertEqual(report.verdict.frobenius_length, 5)

    def test_unsound_bound_misleads(self):
        report = self._callFUT(THREE_FOUR, 'FT', 9, bound=5)
        self.assertFalse(report.verdict.cofinite)

    def test_as_dict(self):
        report = self._callFUT('aa+aaa', 'a', 3, bound=2)
        self.assertEqual(report.as_dict(), {
            'horizon': 3,
            'missing': [{'length': 1, 'count': 1, 'smallest': 'a'}],
            'conclusive': True,
            'verdict': {'cofinite': True, 'frobenius_length': 1},
            })

    def test_budget_exceeded(self):
        from star_frobenius.exceptions import BudgetExceeded
        try:
            self._callFUT('a', 'ab', 10, budget=100)
        except BudgetExceeded as e:
            self.assertEqual(e.exit_code, 4)
        else: # pragma: no cover
            raise AssertionError('BudgetExceeded not raised')

    def test_bad_horizon(self):
        from star_frobenius.exceptions import InvalidArgument
        self.assertRaises(InvalidArgument, self._callFUT, 'a', 'a', 0)

    def test_empty_alphabet(self):
        from star_frobenius.exceptions import InvalidArgument
        self.assertRaises(InvalidArgument, self._callFUT, u'ε', '', 3)


class Test_worst_case_bound(unittest.TestCase):
    def test_it(self):
        from star_frobenius.oracle import worst_case_bound
        self.assertEqual(worst_case_bound(_parse('aa+aaa')), 64)
        self.assertEqual(worst_case_bound(_parse(u'ε')), 2)


class Test_affordable_horizon(unittest.TestCase):
    def _callFUT(self, alphabet_size, budget):
        from star_frobenius.oracle import affordable_horizon
        return affordable_horizon(alphabet_size, budget)

    def test_binary(self):
        self.assertEqual(self._callFUT(2, 15), 3)
        self.assertEqual(self._callFUT(2, 14), 2)
        self.assertEqual(self._callFUT(2, 1), 0)

    def test_unary(self):
        self.assertEqual(self._callFUT(1, 10), 9)
        self.assertEqual(self._callFUT(1, 0), 0)

    def test_fits_budget(self):
        from star_frobenius.oracle import enumeration_size
        for size in (2, 3, 5):
            horizon = self._callFUT(size, 5000)
            self.assertTrue(enumeration_size(size, horizon) <= 5000)
            self.assertTrue(enumeration_size(size, horizon + 1) > 5000)


class Test_adjudicate(unittest.TestCase):
    def _callFUT(self, text, symbols, bound=None, budget=None):
        from star_frobenius.oracle import adjudicate
        from star_frobenius.regex import Alphabet
        return adjudicate(_parse(text), Alphabet(symbols), bound, budget)

    def test_conclusive_with_bound(self):
        report = self._callFUT('aa+aaa', 'a', bound=5, budget=1000)
        self.assertEqual(report.horizon, 9)
        self.assertTrue(report.conclusive)
        self.assertEqual(report.verdict.frobenius_length, 1)

    def test_worst_case_unary(self):
        report = self._callFUT('aa', 'a', budget=1000)
        self.assertEqual(report.horizon, 15)
        self.assertTrue(report.conclusive)
        self.assertFalse(report.verdict.cofinite)

    def test_inconclusive_logs_warning(self):
        handler = DummyHandler()
        logger = logging.getLogger('star_frobenius.oracle')
        logger.addHandler(handler)
        try:
            report = self._callFUT(THREE_FOUR, 'FT', bound=5, budget=100)
        finally:
            logger.removeHandler(handler)
        self.assertFalse(report.conclusive)
        self.assertEqual(report.horizon, 5)
        self.assertEqual(len(handler.records), 1)
        self.assertEqual(handler.records[0].levelno, logging.WARNING)


class TestOracleVerdict(unittest.TestCase):
    def _makeOne(self, cofinite, frobenius_length=None):
        from star_frobenius.oracle import OracleVerdict
        return OracleVerdict(cofinite, frobenius_length)

    def test_equality(self):
        self.assertEqual(self._makeOne(True, 1), self._makeOne(True, 1))
        self.assertNotEqual(self._makeOne(True, 1), self._makeOne(True, 2))
        self.assertNotEqual(self._makeOne(False), None)

    def test_repr(self):
        self.assertEqual(repr(self._makeOne(False)),
                         '<OracleVerdict cofinite=False frobenius_length=None>')


class DummyHandler(logging.Handler):
    def __init__(self):
        logging.Handler.__init__(self, level=logging.DEBUG)
        self.records = []

    def emit(self, record):
        self.records.append(record)
