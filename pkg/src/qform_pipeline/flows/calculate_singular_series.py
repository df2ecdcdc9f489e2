"""
Workflow for calculating truncated singular series of a form.

Working location structure:

.. code-block:: bash

    (name)
    ├── contexts
    │   └── (name)_(a)_(b)_(c).CONTEXT.json
    └── forms
        └── (name)_(a)_(b)_(c).SINGULAR_SERIES.csv

The context is loaded from **contexts**, or built and saved there when
missing. Restricted and unrestricted products are saved for each prime bound,
with the restricted tail estimate.
"""

from dataclasses import dataclass, field

import pandas as pd
from io_collection.keys import make_key
from io_collection.save import save_dataframe
from prefect import flow, get_run_logger

from qform_pipeline.arithmetic import H_Fq, H_q
from qform_pipeline.forms import parse_form
from qform_pipeline.tasks import load_composition_context


@dataclass
class ParametersConfig:
    """Parameter configuration for calculate singular series flow."""

    form: str
    """Form F, as ``a,b,c``."""

    q: int = 1
    """Modulus q."""

    prime_bounds: list[int] = field(default_factory=lambda: [10**5, 10**6])
    """List of largest primes in the truncated products."""

    nested: bool = True
    """True if the context includes the nested representative family, False otherwise."""


@dataclass
class ContextConfig:
    """Context configuration for calculate singular series flow."""

    working_location: str
    """Location for input and output files (local path or S3 bucket)."""


@dataclass
class SeriesConfig:
    """Series configuration for calculate singular series flow."""

    name: str
    """Name of the series."""


@flow(name="calculate-singular-series")
def run_flow(context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig) -> None:
    """Main calculate singular series flow."""

    logger = get_run_logger()

    form = parse_form(parameters.form)
    composition_context = load_composition_context(
        context.working_location, series.name, form, parameters.nested
    )

    rows = []

    for prime_bound in parameters.prime_bounds:
        restricted, tail = H_Fq(form, parameters.q, composition_context, prime_bound)
        unrestricted = H_q(form, parameters.q, prime_bound)

        logger.info(
            "H_Fq [ %s ] up to [ %d ] is [ %.12f ] with tail [ %.3e ]",
            form,
            prime_bound,
            restricted,
            tail,
        )

        rows.append(
            {
                "q": parameters.q,
                "prime_bound": prime_bound,
                "H_Fq": restricted,
                "H_Fq_tail": tail,
                "H_q": unrestricted,
            }
        )

    key = make_key(
        series.name, "forms", f"{series.name}_{form.a}_{form.b}_{form.c}.SINGULAR_SERIES.csv"
    )
    save_dataframe(context.working_location, key, pd.DataFrame(rows), index=False)
