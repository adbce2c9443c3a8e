from zope.configuration.exceptions import ConfigurationError


class StarFrobeniusError(Exception):
    """ Base class for every error raised by this package """
    exit_code = 1


class InputError(StarFrobeniusError):
    """ The input text or arguments are malformed """
    exit_code = 2


class SemanticError(StarFrobeniusError):
    """ The input is well formed but the question cannot be answered """
    exit_code = 3


class BudgetError(StarFrobeniusError):
    """ The work needed exceeds a configured or fixed budget """
    exit_code = 4


class InvalidArgument(InputError):
    pass


class RegexSyntaxError(InputError):
    def __init__(self, msg, position):
        InputError.__init__(self, '%s (at offset %d)' % (msg, position))
        self.msg = msg
        self.position = position


class NfaFormatError(InputError):
    def __init__(self, msg, lineno=None):
        if lineno is not None:
            msg = 'line %d: %s' % (lineno, msg)
        InputError.__init__(self, msg)
        self.lineno = lineno


class DimacsFormatError(InputError):
    def __init__(self, msg, lineno=None):
        if lineno is not None:
            msg = 'line %d: %s' % (lineno, msg)
        InputError.__init__(self, msg)
        self.lineno = lineno


class NotThreeSat(InputError):
    pass


class Tautology(NotThreeSat):
    """ A clause mentions both a variable and its negation """


class UnusedVariable(InputError):
    def __init__(self, variable):
        InputError.__init__(
            self, 'variable %d does not appear in any clause' % variable)
        self.variable = variable


class BadLengths(InputError):
    pass


class UnknownSymbol(InputError):
    def __init__(self, symbol):
        InputError.__init__(self, 'symbol %r is not in the alphabet' % symbol)
        self.symbol = symbol


class DuplicateSymbol(InputError):
    def __init__(self, symbol):
        InputError.__init__(
            self, 'symbol %r is declared more than once' % symbol)
        self.symbol = symbol


class AlphabetMismatch(SemanticError):
    def __init__(self, missing):
        self.missing = tuple(sorted(missing))
        SemanticError.__init__(
            self, 'declared alphabet lacks symbol(s): %s'
            % ' '.join(self.missing))


class GcdNotOne(SemanticError):
    def __init__(self, gcd):
        SemanticError.__init__(
            self, 'gcd of the inputs is %d; the Frobenius number is '
            'undefined' % gcd)
        self.gcd = gcd


class BudgetExceeded(BudgetError):
    pass


class TooLarge(BudgetError):
    pass


class InfiniteLanguage(StarFrobeniusError):
    """ A finite language was required but the automaton has a cycle """


__all__ = [
    'ConfigurationError', 'StarFrobeniusError', 'InputError',
    'SemanticError', 'BudgetError', 'InvalidArgument', 'RegexSyntaxError',
    'NfaFormatError', 'DimacsFormatError', 'NotThreeSat', 'Tautology',
    'UnusedVariable', 'BadLengths', 'UnknownSymbol', 'DuplicateSymbol',
    'AlphabetMismatch', 'GcdNotOne', 'BudgetExceeded', 'TooLarge',
    'InfiniteLanguage',
]
