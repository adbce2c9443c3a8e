# -*- coding: utf-8 -*-
#
# star_frobenius documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing
# dir.

import datetime
import pkg_resources
import pylons_sphinx_themes

# General configuration
# ---------------------

# Add any Sphinx extension module names here, as strings. They can be
# extensions coming with Sphinx (named 'sphinx.ext.*') or your custom ones.
extensions = [
    'sphinx.ext.autodoc',
    'repoze.sphinx.autointerface',
    ]

# Add any paths that contain templates here, relative to this directory.
templates_path = ['.templates']

# The suffix of source filenames.
source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

# General substitutions.
project = 'star_frobenius'
thisyear = datetime.datetime.now().year
copyright = '2024-%s, star_frobenius contributors' % thisyear

# The default replacements for |version| and |release|, also used in various
# other places throughout the built documents.
version = pkg_resources.get_distribution('star_frobenius').version
release = version

today_fmt = '%B %d, %Y'

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# Options for HTML output
# -----------------------

html_theme = 'pyramid'
html_theme_path = pylons_sphinx_themes.get_html_themes_path()

html_last_updated_fmt = '%b %d, %Y'

# Do not use smart quotes: regex examples contain literal quotes.
smartquotes = False

htmlhelp_basename = 'star_frobenius'

# Options for LaTeX output
# ------------------------

latex_documents = [
  ('index', 'star_frobenius.tex', 'star_frobenius Documentation',
   'star_frobenius Developers', 'manual'),
]
