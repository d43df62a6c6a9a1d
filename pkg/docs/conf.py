# -*- coding: utf-8 -*-
#
# ringrecon documentation build configuration file.

import os
import sys
sys.path.insert(0, os.path.abspath(os.path.join(__file__, '..', '..')))

import ringrecon


# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'beanbag_docutils.sphinx.ext.autodoc_utils',
    'beanbag_docutils.sphinx.ext.extlinks',
    'beanbag_docutils.sphinx.ext.ref_utils',
    'ringrecon.sphinx.ext.run_reports',
]

source_suffix = '.rst'
master_doc = 'index'

project = 'ringrecon'
copyright = '2026, ringrecon contributors'
author = 'ringrecon contributors'

# The short X.Y version.
version = '%s.%s' % ringrecon.VERSION[:2]

# The full version, including alpha/beta/rc tags.
release = ringrecon.get_version_string()

exclude_patterns = ['_build']
pygments_style = 'sphinx'


# -- Options for HTML output ----------------------------------------------

html_theme = 'classic'
html_style = 'classic.css'


# -- Extension configuration ----------------------------------------------

intersphinx_mapping = {
    'networkx': ('https://networkx.org/documentation/stable/', None),
    'python': ('https://docs.python.org/3/', None),
    'sympy': ('https://docs.sympy.org/latest/', None),
}

extlinks = {
    'pypi': ('https://pypi.org/project/%s/', '%s'),
}

# Witnesses in rendered run reports are cut off after this many characters.
run_report_witness_length = 80

autosummary_generate = True
napolean_beanbag_docstring = True
napolean_google_docstring = False
napolean_numpy_docstring = False
