"""
Workflow for reducing a binary quadratic form.

Working location structure:

.. code-block:: bash

    (name)
    └── forms
        └── (name)_(a)_(b)_(c).REDUCED.json

The reduced form and the unimodular witness taking the input to it are saved
to **forms**.
"""

from dataclasses import dataclass

from io_collection.keys import make_key
from io_collection.save import save_json
from prefect import flow, get_run_logger

from qform_pipeline.forms import format_form, parse_form, reduce_form


@dataclass
class ParametersConfig:
    """Parameter configuration for reduce form flow."""

    form: str
    """Form to reduce, as ``a,b,c``."""


@dataclass
class ContextConfig:
    """Context configuration for reduce form flow."""

    working_location: str
    """Location for input and output files (local path or S3 bucket)."""


@dataclass
class SeriesConfig:
    """Series configuration for reduce form flow."""

    name: str
    """Name of the series."""


@flow(name="reduce-form")
def run_flow(context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig) -> None:
    """Main reduce form flow."""

    logger = get_run_logger()

    form = parse_form(parameters.form)
    reduced, witness = reduce_form(form)

    logger.info("Form [ %s ] reduces to [ %s ]", format_form(form), format_form(reduced))
    logger.info("Witness [ %s ]", witness.as_tuple())

    key = make_key(series.name, "forms", f"{series.name}_{form.a}_{form.b}_{form.c}.REDUCED.json")
    save_json(
        context.working_location,
        key,
        {"form": format_form(form), "reduced": format_form(reduced), "witness": witness.as_tuple()},
    )
