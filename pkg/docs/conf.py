# Sphinx configuration for the pywpfol API docs.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

from pywpfol import __version__  # noqa: E402

project = "pywpfol"
copyright = "2026, pywpfol developers"
author = "pywpfol developers"
version = release = __version__

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
]

# Google-style docstrings; classes document their arguments in __init__
napoleon_google_docstring = True
napoleon_numpy_docstring = False
autoclass_content = "init"
autodoc_member_order = "bysource"
autodoc_default_options = {"members": True, "show-inheritance": True}
autosummary_generate = True

master_doc = "index"
source_suffix = ".rst"
exclude_patterns = ["_build"]

html_theme = "alabaster"
html_theme_options = {
    "description": "Exact degree bounds for foliations on weighted projective spaces.",
}
