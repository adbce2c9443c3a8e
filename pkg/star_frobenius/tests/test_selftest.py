import random
import unittest


class TestSuiteOutcome(unittest.TestCase):
    def _makeOne(self, name=None):
        from star_frobenius.selftest import SuiteOutcome
        return SuiteOutcome(name)

    def test_counts(self):
        outcome = self._makeOne('x')
        self.assertTrue(outcome.check(True, 'fine'))
        self.assertFalse(outcome.check(False, 'broken'))
        self.assertEqual(outcome.as_dict(), {
            'name': 'x', 'passed': 1, 'failed': 1, 'failures': ['broken']})
        self.assertFalse(outcome.ok)

    def test_reported_failures_capped(self):
        outcome = self._makeOne()
        for case in range(20):
            outcome.error('case %d' % case)
        self.assertEqual(outcome.failed, 20)
        self.assertEqual(len(outcome.failures), outcome.max_reported)

    def test_empty_is_ok(self):
        self.assertTrue(self._makeOne().ok)


class Test_random_regex(unittest.TestCase):
    def _callFUT(self, rng, symbols, max_symbols):
        from star_frobenius.selftest import random_regex
        return random_regex(rng, symbols, max_symbols)

    def test_bounds(self):
        from star_frobenius.regex import alphabet_of
        from star_frobenius.regex import symbol_length
        rng = random.Random(0)
        for _ in range(200):
            ast = self._callFUT(rng, 'ab', 5)
            self.assertTrue(symbol_length(ast) <= 5)
            self.assertTrue(set(alphabet_of(ast).symbols) <= set('ab'))

    def test_deterministic(self):
        first = self._callFUT(random.Random(3), 'ab', 6)
        second = self._callFUT(random.Random(3), 'ab', 6)
        self.assertEqual(first, second)


class Test_all_words(unittest.TestCase):
    def test_it(self):
        from star_frobenius.regex import Alphabet
        from star_frobenius.selftest import all_words
        self.assertEqual(list(all_words(Alphabet('ab'), 2)),
                         ['', 'a', 'b', 'aa', 'ab', 'ba', 'bb'])


class Test_unsatisfiable_instance(unittest.TestCase):
    def _callFUT(self, rng, max_variables=6, max_clauses=10):
        from star_frobenius.selftest import unsatisfiable_instance
        return unsatisfiable_instance(rng, max_variables, max_clauses)

    def test_never_satisfiable(self):
        from star_frobenius.reduction import sat_bruteforce
        rng = random.Random(7)
        for _ in range(50):
            cnf = self._callFUT(rng)
            self.assertTrue(3 <= cnf.variable_count <= 6)
            self.assertTrue(cnf.clause_count >= 9)
            self.assertEqual(sat_bruteforce(cnf), None)

    def test_holds_every_sign_pattern_over_one_triple(self):
        import collections
        cnf = self._callFUT(random.Random(3), 3, 1)
        triples = collections.Counter(
            tuple(sorted(abs(literal) for literal in clause))
            for clause in cnf.clauses)
        self.assertEqual(triples, {(1, 2, 3): 9})
        self.assertEqual(len(set(cnf.clauses)), 8)


class Test_run_suites(unittest.TestCase):
    def _callFUT(self, registry, seed=None, cases=None):
        from star_frobenius.selftest import run_suites
        return run_suites(registry, seed, cases)

    def _makeRegistry(self, spec):
        from star_frobenius.config import load_config
        return load_config('star_frobenius.tests.fixtureconfig:' + spec)

    def test_failures_and_errors_recorded(self):
        outcomes = self._callFUT(self._makeRegistry('failing.zcml'), cases=3)
        self.assertEqual([o.name for o in outcomes],
                         ['always_fails', 'explodes'])
        failed, exploded = outcomes
        self.assertEqual((failed.passed, failed.failed), (0, 3))
        self.assertEqual(exploded.failed, 1)
        self.assertEqual(exploded.failures, ['ValueError: boom'])

    def test_case_counts(self):
        outcomes = self._callFUT(self._makeRegistry('scan.zcml'))
        counts = dict((o.name, o.passed) for o in outcomes)
        self.assertEqual(counts['scanned_extra'], 4)
        self.assertEqual(counts['scanned_by_name'], 1)

    def test_cases_override(self):
        outcomes = self._callFUT(self._makeRegistry('scan.zcml'), cases=2)
        counts = dict((o.name, o.passed + o.failed) for o in outcomes)
        self.assertEqual(counts['scanned_extra'], 2)

    def test_disabled_skipped(self):
        registry = self._makeRegistry('scan.zcml')
        registry.configure_suite('scanned_extra', enabled=False)
        outcomes = self._callFUT(registry)
        self.assertEqual([o.name for o in outcomes], ['scanned_by_name'])

    def test_seeded_per_suite(self):
        from star_frobenius.config import SuiteRegistry
        seen = []

        def record(rng, cases, settings):
            from star_frobenius.selftest import SuiteOutcome
            seen.append(rng.random())
            return SuiteOutcome()

        registry = SuiteRegistry()
        registry.add_suite('a', record)
        registry.add_suite('b', record)
        self._callFUT(registry, seed=5, cases=1)
        self._callFUT(registry, seed=5, cases=1)
        self.assertEqual(seen[:2], seen[2:])
        self.assertNotEqual(seen[0], seen[1])


class TestBuiltinSuites(unittest.TestCase):
    def _run(self, name, cases=8, seed=1):
        from star_frobenius.config import load_config
        registry = load_config()
        suite = registry.suites[name]
        outcome = suite.handler(random.Random(seed), cases, registry.settings)
        self.assertEqual(outcome.failures, [])
        return outcome

    def test_regex_roundtrip(self):
        self.assertTrue(self._run('regex_roundtrip').passed)

    def test_state_bound(self):
        self.assertTrue(self._run('state_bound').passed)

    def test_language_agreement(self):
        self._run('language_agreement')

    def test_window_criterion(self):
        self._run('window_criterion')

    def test_complement_involution(self):
        self._run('complement_involution')

    def test_matrix_verifier(self):
        self._run('matrix_verifier')

    def test_oracle_agreement(self):
        self._run('oracle_agreement', cases=4)

    def test_verdict_soundness(self):
        self._run('verdict_soundness')

    def test_frobenius_maximality(self):
        self._run('frobenius_maximality')

    def test_reduction_equivalence(self):
        # the fourth case is unsatisfiable and checked twice
        outcome = self._run('reduction_equivalence', cases=4)
        self.assertEqual(outcome.passed, 5)

    def test_reduction_sandwich(self):
        self._run('reduction_sandwich', cases=4)

    def test_symbol_count(self):
        self._run('symbol_count')

    def test_numeric_frobenius(self):
        self._run('numeric_frobenius')

    def test_unary_consistency(self):
        self._run('unary_consistency')

    def test_lemma(self):
        self._run('lemma')
