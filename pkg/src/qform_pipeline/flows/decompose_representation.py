"""
Workflow for decomposing one representation of a product.

Working location structure:

.. code-block:: bash

    (name)
    ├── contexts
    │   └── (name)_(a)_(b)_(c).CONTEXT.json
    └── forms
        └── (name)_(a)_(b)_(c).DECOMPOSITION.json

Each tuple (f, u, v, w, z) with f(u, v) = m and f*(w, z) = n rebuilding the
given representation is saved to **forms**.
"""

from dataclasses import dataclass

from io_collection.keys import make_key
from io_collection.save import save_json
from prefect import flow, get_run_logger

from qform_pipeline.composition import decompose_representation
from qform_pipeline.forms import format_form, parse_form
from qform_pipeline.tasks import load_composition_context


@dataclass
class ParametersConfig:
    """Parameter configuration for decompose representation flow."""

    form: str
    """Form F, as ``a,b,c``."""

    m: int
    """First factor of the represented value."""

    n: int
    """Second factor of the represented value."""

    x: int
    """First coordinate of the representation."""

    y: int
    """Second coordinate of the representation."""

    nested: bool = False
    """True if the context includes the nested representative family, False otherwise."""


@dataclass
class ContextConfig:
    """Context configuration for decompose representation flow."""

    working_location: str
    """Location for input and output files (local path or S3 bucket)."""


@dataclass
class SeriesConfig:
    """Series configuration for decompose representation flow."""

    name: str
    """Name of the series."""


@flow(name="decompose-representation")
def run_flow(context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig) -> None:
    """Main decompose representation flow."""

    logger = get_run_logger()

    form = parse_form(parameters.form)
    composition_context = load_composition_context(
        context.working_location, series.name, form, parameters.nested
    )

    tuples = decompose_representation(
        parameters.m, parameters.n, parameters.x, parameters.y, composition_context
    )

    for factor, u, v, w, z in tuples:
        logger.info("[ %s ] at [ (%d, %d) ] with [ (%d, %d) ]", factor, u, v, w, z)

    key = make_key(
        series.name, "forms", f"{series.name}_{form.a}_{form.b}_{form.c}.DECOMPOSITION.json"
    )
    save_json(
        context.working_location,
        key,
        {
            "m": parameters.m,
            "n": parameters.n,
            "representation": [parameters.x, parameters.y],
            "tuples": [
                {"form": format_form(factor), "uv": [u, v], "wz": [w, z]}
                for factor, u, v, w, z in tuples
            ],
        },
    )
