# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# Only the options PDMoments changes from the Sphinx defaults are set here.
# For a full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))


# -- Project information -----------------------------------------------------

project = u'PDMoments'
copyright = u'2026, PDMoments developers'
author = u'PDMoments developers'

version = u'1.0'
release = u'1.0.0'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.githubpages',
]

# Modules are documented from their docstrings; the numerical stack is not
# needed to build the pages.
autodoc_mock_imports = ['numpy', 'pandas', 'scipy', 'sympy']
autodoc_member_order = 'bysource'

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = []
pygments_style = None


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'PDMomentsdoc'


# -- Options for LaTeX output ------------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'PDMoments.tex', u'PDMoments Documentation',
     u'PDMoments developers', 'manual'),
]


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'pdmoments', u'PDMoments Documentation',
     [author], 1)
]
