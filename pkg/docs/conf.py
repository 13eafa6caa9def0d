#!/usr/bin/env python
#
# antimagic documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

src_path = os.path.abspath('..')
sys.path.insert(0, src_path)
os.environ['PYTHONPATH'] = src_path
os.environ.setdefault('MPLBACKEND', 'Agg')

# -- General configuration ---------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.autosectionlabel',
    'sphinxcontrib.apidoc',
    'numpydoc']

apidoc_module_dir = '../antimagic'
apidoc_output_dir = 'dev'
apidoc_separate_modules = True
apidoc_module_first = True

autosectionlabel_prefix_document = True

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'antimagic'
copyright = u"2026, Antimagic developers"
author = u"Antimagic developers"

version = '0.1.0'
release = version

language = 'en'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

numpydoc_show_class_members = False

pygments_style = 'sphinx'

todo_include_todos = False

# -- Options for HTML output -------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_static_path = []

htmlhelp_basename = 'antimagicdoc'

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'pandas': ('https://pandas.pydata.org/docs/', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
}

# -- Options for LaTeX output ------------------------------------------

latex_documents = [
    (master_doc, 'antimagic.tex',
     u'antimagic Documentation',
     u'Antimagic developers', 'manual'),
]

# -- Options for manual page output ------------------------------------

man_pages = [
    (master_doc, 'antimagic',
     u'antimagic Documentation',
     [author], 1)
]

# -- Options for Texinfo output ----------------------------------------

texinfo_documents = [
    (master_doc, 'antimagic',
     u'antimagic Documentation',
     author,
     'antimagic',
     'Local antimagic labelling toolkit.',
     'Miscellaneous'),
]
