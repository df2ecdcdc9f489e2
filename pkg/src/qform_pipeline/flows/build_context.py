"""
Workflow for building the composition context of a form.

Working location structure:

.. code-block:: bash

    (name)
    └── contexts
        └── (name)_(a)_(b)_(c).CONTEXT.json

The context holds the class representatives with their derivations, the
common middle coefficient, and the bound C_F of the excluded primes.
"""

from dataclasses import dataclass

from io_collection.save import save_json
from prefect import flow, get_run_logger

from qform_pipeline.composition import SEARCH_BUDGET, build_context, context_to_dict
from qform_pipeline.forms import parse_form
from qform_pipeline.tasks import make_context_key


@dataclass
class ParametersConfig:
    """Parameter configuration for build context flow."""

    form: str
    """Form F, as ``a,b,c``."""

    nested: bool = True
    """True if the nested representative family is included, False otherwise."""

    budget: int = SEARCH_BUDGET
    """Number of candidate points searched per class."""


@dataclass
class ContextConfig:
    """Context configuration for build context flow."""

    working_location: str
    """Location for input and output files (local path or S3 bucket)."""


@dataclass
class SeriesConfig:
    """Series configuration for build context flow."""

    name: str
    """Name of the series."""


@flow(name="build-context")
def run_flow(context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig) -> None:
    """Main build context flow."""

    logger = get_run_logger()

    form = parse_form(parameters.form)
    composition_context = build_context(form, nested=parameters.nested, budget=parameters.budget)

    logger.info(
        "Context for [ %s ] with [ %d ] classes, B [ %d ], C_F [ %d ]",
        form,
        len(composition_context.SF),
        composition_context.B,
        composition_context.CF,
    )

    key = make_context_key(series.name, form)
    save_json(context.working_location, key, context_to_dict(composition_context))
