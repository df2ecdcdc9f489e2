"""
Workflow for the Dirichlet composition of two forms.

Working location structure:

.. code-block:: bash

    (name)
    └── forms
        └── (name)_(a)_(b)_(c).COMPOSITION.json

When no middle coefficient is given, the least non-negative common one is
used. The composite and its reduced form are saved to **forms**.
"""

from dataclasses import dataclass
from typing import Optional

from io_collection.keys import make_key
from io_collection.save import save_json
from prefect import flow, get_run_logger

from qform_pipeline.composition import choose_B, dirichlet_compose
from qform_pipeline.forms import format_form, parse_form, reduce_form


@dataclass
class ParametersConfig:
    """Parameter configuration for compose forms flow."""

    form: str
    """First form, as ``a,b,c``."""

    other: str
    """Second form, as ``a,b,c``."""

    middle: Optional[int] = None
    """Common middle coefficient B."""


@dataclass
class ContextConfig:
    """Context configuration for compose forms flow."""

    working_location: str
    """Location for input and output files (local path or S3 bucket)."""


@dataclass
class SeriesConfig:
    """Series configuration for compose forms flow."""

    name: str
    """Name of the series."""


@flow(name="compose-forms")
def run_flow(context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig) -> None:
    """Main compose forms flow."""

    logger = get_run_logger()

    form = parse_form(parameters.form)
    other = parse_form(parameters.other)
    middle = choose_B([form], other) if parameters.middle is None else parameters.middle

    composite = dirichlet_compose(form, other, middle)
    reduced, _ = reduce_form(composite)

    logger.info(
        "Composite of [ %s ] and [ %s ] with B [ %d ] is [ %s ]", form, other, middle, composite
    )

    key = make_key(
        series.name, "forms", f"{series.name}_{form.a}_{form.b}_{form.c}.COMPOSITION.json"
    )
    save_json(
        context.working_location,
        key,
        {
            "form": format_form(form),
            "other": format_form(other),
            "B": middle,
            "composite": format_form(composite),
            "reduced": format_form(reduced),
        },
    )
