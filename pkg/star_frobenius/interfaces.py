from zope.interface import Attribute
from zope.interface import Interface

from zope.schema import Int


class IRegexNode(Interface):
    """ A node of a regular expression syntax tree """

    def children():
        """ Return the tuple of child nodes (empty for leaves) """


class IAutomaton(Interface):
    state_count = Attribute('Number of states; ids run 0 .. state_count-1')
    alphabet = Attribute('The ``Alphabet`` the automaton reads')
    accepting = Attribute('frozenset of accepting state ids')

    def accepts(word):
        """ Return True if the automaton accepts ``word`` """


class INfa(IAutomaton):
    """ An epsilon-free nondeterministic automaton """
    initial = Attribute('frozenset of initial state ids')

    def successors(state, symbol):
        """ Return the frozenset of states reached from ``state`` on
        ``symbol`` """

    def adjacency(symbol):
        """ Return the boolean adjacency matrix of ``symbol`` """


class IDfa(IAutomaton):
    """ A complete deterministic automaton """
    start = Attribute('The start state id')

    def step(state, symbol):
        """ Return the unique successor of ``state`` on ``symbol`` """


class ISettings(Interface):
    """ Runtime settings; every source of settings is validated against
    this schema """

    budget = Int(
        title=u'Enumeration budget',
        description=u'Maximum number of words the brute-force oracle may '
                    u'enumerate in one report.',
        min=1,
        default=2 ** 22,
        required=True)

    seed = Int(
        title=u'Selftest seed',
        min=0,
        default=42,
        required=True)

    cases = Int(
        title=u'Cases per selftest suite',
        min=1,
        default=200,
        required=True)

    horizon = Int(
        title=u'Default oracle horizon',
        description=u'Longest word length enumerated by the oracle when '
                    u'no horizon is given.',
        min=1,
        default=12,
        required=True)


class ISuiteRegistry(Interface):
    """ Collects selftest suites and settings from ZCML and scans """
    settings = Attribute('dict of validated settings')
    suites = Attribute('ordered mapping of suite name to ``Suite``')

    def add_suite(name, handler, cases=None, enabled=True):
        """ Register (or replace) a named suite """

    def configure_suite(name, cases=None, enabled=None):
        """ Override the case count or the enabled flag of a suite """

    def update_settings(**kw):
        """ Validate and store settings values """
