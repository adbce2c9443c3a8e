""" Settings and selftest-suite configuration.

Settings start from the ``ISettings`` defaults, may be set by the
``<settings>`` ZCML directive and by the ``STAR_FROBENIUS_BUDGET``
environment variable, and finally by command line flags.  Selftest suites
are plain functions decorated with :class:`property_suite`; the ``<scan>``
directive finds them with venusian and ``<suite>`` adds or tunes them.
"""
import collections
import os
import sys
import threading

import venusian

from zope.configuration import xmlconfig
from zope.configuration.config import ConfigurationMachine
from zope.configuration.config import defineSimpleDirective
from zope.configuration.exceptions import ConfigurationError
from zope.configuration.fields import GlobalObject
from zope.configuration.xmlconfig import registerCommonDirectives

from zope.interface import Interface
from zope.interface import implementer

from zope.schema import Bool
from zope.schema import Int
from zope.schema import TextLine
from zope.schema import ValidationError
from zope.schema import getFieldsInOrder

from star_frobenius.interfaces import ISettings
from star_frobenius.interfaces import ISuiteRegistry

NAMESPACE = 'http://namespaces.zope.org/starfrobenius'
BUDGET_ENVIRON_KEY = 'STAR_FROBENIUS_BUDGET'
CATEGORY = 'star_frobenius'

# suite tweaks must see the suites registered by scans
SCAN_ORDER = 0
SUITE_ORDER = 10


def default_settings():
    return dict((name, field.default)
                for name, field in getFieldsInOrder(ISettings))


def validate_setting(name, value):
    field = ISettings.get(name)
    if field is None:
        raise ConfigurationError('unknown setting %r' % (name,))
    try:
        field.validate(value)
    except ValidationError as why:
        raise ConfigurationError('invalid value %r for setting %r (%s)'
                                 % (value, name, why.__class__.__name__))
    return value


def budget_from_environ(environ=None, default=None):
    """ The enumeration budget: ``STAR_FROBENIUS_BUDGET`` when set,
    otherwise ``default`` (the schema default when that is ``None``) """
    if environ is None:
        environ = os.environ
    if default is None:
        default = ISettings['budget'].default
    raw = environ.get(BUDGET_ENVIRON_KEY, '').strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError('%s must be an integer, got %r'
                                 % (BUDGET_ENVIRON_KEY, raw))
    return validate_setting('budget', value)


class Suite(object):
    def __init__(self, name, handler, cases=None, enabled=True):
        self.name = name
        self.handler = handler
        self.cases = cases
        self.enabled = enabled

    def __repr__(self):
        return '<Suite %s cases=%r enabled=%r>' % (self.name, self.cases,
                                                   self.enabled)


@implementer(ISuiteRegistry)
class SuiteRegistry(object):
    def __init__(self):
        self.settings = default_settings()
        self.suites = collections.OrderedDict()

    def add_suite(self, name, handler, cases=None, enabled=True):
        if cases is not None:
            validate_setting('cases', cases)
        self.suites[name] = Suite(name, handler, cases, enabled)

    def configure_suite(self, name, cases=None, enabled=None):
        suite = self.suites.get(name)
        if suite is None:
            raise ConfigurationError('no selftest suite named %r' % (name,))
        if cases is not None:
            suite.cases = validate_setting('cases', cases)
        if enabled is not None:
            suite.enabled = enabled

    def update_settings(self, **kw):
        for name, value in kw.items():
            validate_setting(name, value)
        self.settings.update(kw)

    def enabled_suites(self):
        return [suite for suite in self.suites.values() if suite.enabled]


class property_suite(object):
    """ Decorator marking a function as a selftest suite.  The function is
    called as ``handler(rng, cases, settings)`` and returns a
    ``SuiteOutcome``; it is registered when its module is scanned. """
    venusian = venusian # for testing injection

    def __init__(self, name=None, cases=None):
        self.name = name
        self.cases = cases

    def __call__(self, wrapped):
        settings = self.__dict__.copy()

        def callback(scanner, name, ob):
            scanner.registry.add_suite(settings['name'] or name, ob,
                                       cases=settings['cases'])

        self.venusian.attach(wrapped, callback, category=CATEGORY)
        return wrapped


def scan_suites(registry, package):
    scanner = venusian.Scanner(registry=registry)
    scanner.scan(package, categories=(CATEGORY,))
    return registry


###################### directives ##########################

class ISettingsDirective(Interface):
    budget = Int(
        title=u'Enumeration budget in words',
        min=1,
        required=False)

    seed = Int(
        title=u'Selftest seed',
        min=0,
        required=False)

    cases = Int(
        title=u'Cases per selftest suite',
        min=1,
        required=False)

    horizon = Int(
        title=u'Default oracle horizon',
        min=1,
        required=False)


def settings(_context, budget=None, seed=None, cases=None, horizon=None):
    """ Handle ``settings`` ZCML directives """
    registry = _context.registry
    values = dict(budget=budget, seed=seed, cases=cases, horizon=horizon)
    for name, value in sorted(values.items()):
        if value is None:
            continue
        # one discriminator per key: two files setting the same key
        # conflict unless one includes the other
        _context.action(
            discriminator=('setting', name),
            callable=registry.update_settings,
            kw={name: value},
            )


class IScanDirective(Interface):
    package = GlobalObject(
        title=u'The package or module to scan for selftest suites.',
        required=True,
        )


def scan(_context, package):
    _context.action(
        discriminator=None,
        callable=scan_suites,
        args=(_context.registry, package),
        order=SCAN_ORDER,
        )


class ISuiteDirective(Interface):
    name = TextLine(
        title=u'Suite name',
        required=True)

    handler = GlobalObject(
        title=u'Suite function',
        description=u'Dotted name of a function called as '
                    u'``handler(rng, cases, settings)``.  When omitted the '
                    u'directive tunes a suite registered by a scan.',
        required=False)

    cases = Int(
        title=u'Cases for this suite',
        min=1,
        required=False)

    enabled = Bool(
        title=u'Run this suite',
        required=False)


def suite(_context, name, handler=None, cases=None, enabled=None):
    """ Handle ``suite`` ZCML directives """
    registry = _context.registry
    if handler is not None:
        _context.action(
            discriminator=('suite', name),
            callable=registry.add_suite,
            args=(name, handler),
            kw=dict(cases=cases, enabled=enabled is not False),
            order=SUITE_ORDER,
            )
    else:
        _context.action(
            discriminator=('suite', name),
            callable=registry.configure_suite,
            args=(name,),
            kw=dict(cases=cases, enabled=enabled),
            order=SUITE_ORDER,
            )


def register_directives(context):
    defineSimpleDirective(context, 'settings', ISettingsDirective, settings,
                          namespace=NAMESPACE)
    defineSimpleDirective(context, 'scan', IScanDirective, scan,
                          namespace=NAMESPACE)
    defineSimpleDirective(context, 'suite', ISuiteDirective, suite,
                          namespace=NAMESPACE)


def resolve_spec(spec):
    """ Split ``package:relative/path.zcml`` into its parts; absolute and
    plain relative filenames have no package part """
    if os.path.isabs(spec) or ':' not in spec:
        return None, spec
    package_name, filename = spec.split(':', 1)
    return package_name, filename


def package_of(filename):
    """ The imported package whose directory holds ``filename``, or
    ``None`` when that directory is not an importable package """
    directory = os.path.dirname(os.path.abspath(filename))
    if not os.path.isdir(directory):
        return None
    parts = []
    top = directory
    while os.path.exists(os.path.join(top, '__init__.py')):
        top, name = os.path.split(top)
        parts.insert(0, name)
    while parts:
        dotted = '.'.join(parts)
        parts.pop(0)
        try:
            __import__(dotted)
        except ImportError:
            continue
        module = sys.modules[dotted]
        location = getattr(module, '__file__', None)
        if location is not None and os.path.samefile(
                os.path.dirname(location), directory):
            return module
    return None


def load_config(spec='configure.zcml', package=None, registry=None,
                features=(), lock=threading.Lock()):
    """ Load selftest configuration from a :term:`ZCML` file and return the
    populated registry.  ``spec`` is an absolute filename, a filename
    relative to ``package`` (default: this package) or a
    ``dotted.package:file.zcml`` specification.  Dotted names in an
    absolute file resolve against the package holding it unless
    ``package`` is given.  ``features`` switch on
    ``zcml:condition="have ..."`` sections. """
    if registry is None:
        registry = SuiteRegistry()
    package_name, filename = resolve_spec(spec)
    if package_name is not None:
        __import__(package_name)
        package = sys.modules[package_name]
    elif package is None and os.path.isabs(filename):
        package = package_of(filename)
    elif package is None:
        import star_frobenius
        package = star_frobenius

    context = ConfigurationMachine()
    for feature in features:
        context.provideFeature(feature)
    context.registry = registry
    context.package = package
    registerCommonDirectives(context)
    register_directives(context)

    lock.acquire()
    try:
        xmlconfig.file(filename, package, context=context, execute=False)
    finally:
        lock.release()
    context.execute_actions()
    return registry
