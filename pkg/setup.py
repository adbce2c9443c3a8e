import os

from setuptools import setup, find_packages

here = os.path.abspath(os.path.dirname(__file__))
try:
    README = open(os.path.join(here, 'README.rst')).read()
    CHANGES = open(os.path.join(here, 'CHANGES.txt')).read()
except IOError:
    README = CHANGES = ''

install_requires = [
    'networkx>=2.4', # descendants / topological_sort on DiGraph
    'numpy>=1.17',
    'venusian>=1.0', # liftid / scope in callbacks
    'zope.configuration>=4.0', # dict actions, features
    'zope.interface',
    'zope.schema',
]

tests_require = install_requires + ['hypothesis', 'pytest']

testing_extras = [
    'coverage',
    'hypothesis',
    'pytest',
    'pytest-cov',
    ]

docs_extras = [
    'pylons-sphinx-themes',
    'repoze.sphinx.autointerface',
    'Sphinx >= 1.3.1',
    ]

setup(name='star_frobenius',
      version='1.0.0.dev0',
      description='Co-finiteness and Frobenius lengths of Kleene stars of '
                  'regular expressions',
      long_description=README + '\n\n' +  CHANGES,
      classifiers=[
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: Implementation :: CPython",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: Repoze Public License",
        ],
      keywords='regex automata frobenius cofinite 3sat',
      license="BSD-derived (http://www.repoze.org/LICENSE.txt)",
      packages=find_packages(),
      include_package_data=True,
      package_data={'star_frobenius': ['*.zcml', 'tests/fixtures/*',
                                       'tests/fixtureconfig/*.zcml']},
      zip_safe=False,
      install_requires = install_requires,
      tests_require = tests_require,
      test_suite="star_frobenius",
      extras_require = {
          'testing': testing_extras,
          'docs': docs_extras,
          },
      python_requires='>=3.8',
      entry_points = """
      [console_scripts]
      star-frobenius=star_frobenius.cli:main
      """
      )
