# -*- coding: utf-8 -*-
#
# lhydro documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

import sphinx_rtd_theme

# Make the package importable when building from a source checkout.
sys.path.append(os.path.join(os.path.dirname(__file__)))
sys.path.append(os.path.join(os.getcwd() + "/../../"))

import lhydro

# -- General configuration ------------------------------------------------

extensions = ["sphinx.ext.autodoc"]

templates_path = ["_templates"]

source_suffix = ".rst"

master_doc = "index"

project = "lhydro"
copyright = "2026, lhydro developers"

version = lhydro.__version__
release = lhydro.__version__

exclude_patterns = []

pygments_style = "sphinx"

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_static_path = ["_static"]

htmlhelp_basename = "lhydrodoc"

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    ("index", "lhydro.tex", "lhydro Documentation", "lhydro developers", "manual"),
]

# -- Options for manual page output ---------------------------------------

man_pages = [("index", "lhydro", "lhydro Documentation", ["lhydro developers"], 1)]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (
        "index",
        "lhydro",
        "lhydro Documentation",
        "lhydro developers",
        "lhydro",
        "Cubical lattice model of incompressible hydrodynamics.",
        "Miscellaneous",
    ),
]
