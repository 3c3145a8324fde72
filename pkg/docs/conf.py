# -*- coding: utf-8 -*-
#
# orbitwistor documentation build configuration file.

import os
import pkg_resources
import sys

import guzzle_sphinx_theme

sys.path.insert(0, os.path.abspath('..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.intersphinx',
    'guzzle_sphinx_theme',
]

templates_path = ['templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'orbitwistor'
copyright = u'2024, the orbitwistor authors'
author = u'the orbitwistor authors'

version = pkg_resources.get_distribution('orbitwistor').version
release = version

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
modindex_common_prefix = ['orbitwistor.']
todo_include_todos = False

html_theme_path = guzzle_sphinx_theme.html_theme_path()
html_theme = 'guzzle_sphinx_theme'
html_static_path = ['_static']
html_sidebars = {
    '**': ['localtoc.html', 'relations.html',
           'sidebarlinks.html', 'searchbox.html']
}
htmlhelp_basename = 'orbitwistordoc'

latex_elements = {}
latex_documents = [
    (master_doc, 'orbitwistor.tex', u'orbitwistor Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'orbitwistor', u'orbitwistor Documentation',
     [author], 1)
]

texinfo_documents = [
    (master_doc, 'orbitwistor', u'orbitwistor Documentation',
     author, 'orbitwistor',
     'Twistor lines and hyperkahler metric signatures for sl(n, C).',
     'Miscellaneous'),
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
}
