# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

# Add the project root to the path
sys.path.insert(0, os.path.abspath("../../"))

from dinfty_cluster import __version__  # noqa: E402

# -- Project information -------------------------------------------------------
project = "dinfty-cluster"
copyright = "2026, dinfty-cluster developers"
author = "dinfty-cluster developers"
release = __version__

# -- General configuration -------------------------------------------------------
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "myst_parser",
]

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable", None),
    "networkx": ("https://networkx.org/documentation/stable", None),
}

# -- Options for HTML output ---------------------------------------------------
html_theme = "furo"
html_theme_options = {
    "sidebar_hide_name": False,
    "light_css_variables": {
        "color-brand-primary": "#0066cc",
        "color-brand-content": "#0066cc",
    },
}

# MyST configuration
myst_enable_extensions = [
    "colon_fence",
    "linkify",
    "dollarmath",
]

# -- Autodoc configuration ----------------------------------------------------
autodoc_typehints = "description"
autodoc_member_order = "bysource"
