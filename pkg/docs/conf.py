# Sphinx configuration for the Qform Sieve Pipeline docs.

import importlib.metadata
import os
import sys
from datetime import datetime

import prefect
from sphinx.ext.autodoc import FunctionDocumenter

sys.path.insert(0, os.path.abspath("../src"))

project = "Qform Sieve Pipeline"
copyright = f"{datetime.now().year}, Qform Sieve Pipeline maintainers"
release = importlib.metadata.version("qform-sieve-pipeline")

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "myst_parser",
    "sphinx_copybutton",
]

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

add_module_names = False

autosummary_generate = True

autodoc_default_options = {
    "member-order": "bysource",
    "undoc-members": True,
}

autodoc_typehints = "signature"

autodoc_class_signature = "separated"

html_theme = "furo"

html_title = f"<strong>{project}</strong> <br />{release}"


# Flows and tasks are prefect objects, not functions.
def patch_can_document_member(member, membername, isattr, parent):
    if isinstance(member, (prefect.flows.Flow, prefect.tasks.Task)):
        return True

    return FunctionDocumenter.original_can_document_member(member, membername, isattr, parent)


FunctionDocumenter.original_can_document_member = FunctionDocumenter.can_document_member
FunctionDocumenter.can_document_member = patch_can_document_member
