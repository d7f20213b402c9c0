# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------

import os,sys;
sys.path.insert(0, os.path.abspath('../src'));

project = 'polyoideals'
copyright = '2026, polyoideals developers'
author = 'polyoideals developers'
release = '0.1'

# -- General configuration ---------------------------------------------------

extensions = ['myst_parser', 'sphinx.ext.autodoc', 'sphinx.ext.viewcode', 'sphinx.ext.napoleon', 'sphinx.ext.graphviz', 'sphinx.ext.inheritance_diagram', 'sphinx.ext.mathjax', 'sphinx_copybutton',]

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

autodoc_member_order = 'bysource'
napoleon_numpy_docstring = True

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_book_theme"
html_static_path = ['_static']

html_title = "POLYOIDEALS DOCUMENTATION"
html_theme_options = {
    "home_page_in_toc": True,
    "path_to_docs": "docs",
}

myst_enable_extensions = ["colon_fence", "dollarmath"]
myst_heading_anchors = 2
