# Sphinx configuration for pringkit

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

project = 'pringkit'
copyright = '2025, Joël R. Langlois'
author = 'Joël R. Langlois'
release = '1.0.0'
language = 'en'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.inheritance_diagram',
    'sphinx_autodoc_typehints',
    'myst_parser',
]

source_suffix = {
    '.rst': 'restructuredtext',
    '.md': 'markdown',
}
exclude_patterns = ['_build']

html_theme = 'furo'

# Google-style docstrings only
napoleon_google_docstring = True
napoleon_numpy_docstring = False

autodoc_default_options = {
    'members': True,
    'member-order': 'bysource',
}

inheritance_graph_attrs = {'rankdir': 'TB'}
