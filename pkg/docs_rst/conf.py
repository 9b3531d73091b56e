# Configuration file for the Sphinx documentation builder.
#
# Only the settings used by the pypenta documentation are set here. See
# http://www.sphinx-doc.org/en/master/config for the full list.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from pypenta import __version__

# -- Project information -----------------------------------------------------

project = 'pypenta'
copyright = '2026, pypenta developers'
author = 'pypenta developers'

version = __version__
release = __version__

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
]

source_suffix = ['.rst']
master_doc = 'index'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
