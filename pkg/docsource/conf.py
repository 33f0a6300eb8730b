# Sphinx configuration for the admissible set documentation.
import os
import sys

sys.path.insert(0, os.path.abspath('../src'))

project = 'Admissible sets and the face map'
copyright = '2026, alcoves developers'  # @ReservedAssignment
author = 'alcoves developers'
version = '0.1'
release = '0.1.0'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx_autodoc_typehints',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
# include __init__ documentation.
autoclass_content = 'both'

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'AlcovesAdmissibledoc'

latex_documents = [
    (master_doc, 'AlcovesAdmissible.tex', 'Admissible Sets Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'alcoves-admissible', 'Admissible Sets Documentation', [author], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
todo_include_todos = True
