"""
Workflow for checking proper equivalence of two forms.

Working location structure:

.. code-block:: bash

    (name)
    └── forms
        └── (name)_(a)_(b)_(c).EQUIVALENCE.json

The result, with the witness map when the forms are equivalent, is saved to
**forms** under the key of the first form.
"""

from dataclasses import dataclass

from io_collection.keys import make_key
from io_collection.save import save_json
from prefect import flow, get_run_logger

from qform_pipeline.forms import format_form, parse_form, properly_equivalent


@dataclass
class ParametersConfig:
    """Parameter configuration for check equivalence flow."""

    form: str
    """First form, as ``a,b,c``."""

    other: str
    """Second form, as ``a,b,c``."""


@dataclass
class ContextConfig:
    """Context configuration for check equivalence flow."""

    working_location: str
    """Location for input and output files (local path or S3 bucket)."""


@dataclass
class SeriesConfig:
    """Series configuration for check equivalence flow."""

    name: str
    """Name of the series."""


@flow(name="check-equivalence")
def run_flow(context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig) -> None:
    """Main check equivalence flow."""

    logger = get_run_logger()

    form = parse_form(parameters.form)
    other = parse_form(parameters.other)
    witness = properly_equivalent(form, other)

    if witness is None:
        logger.info("Forms [ %s ] and [ %s ] are not equivalent", form, other)
    else:
        logger.info("Forms [ %s ] and [ %s ] equivalent by [ %s ]", form, other, witness.as_tuple())

    key = make_key(
        series.name, "forms", f"{series.name}_{form.a}_{form.b}_{form.c}.EQUIVALENCE.json"
    )
    save_json(
        context.working_location,
        key,
        {
            "form": format_form(form),
            "other": format_form(other),
            "equivalent": witness is not None,
            "witness": None if witness is None else witness.as_tuple(),
        },
    )
