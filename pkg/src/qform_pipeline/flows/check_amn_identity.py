"""
Workflow for checking the decomposition identity for a_mn.

Working location structure:

.. code-block:: bash

    (name)
    ├── contexts
    │   └── (name)_(a)_(b)_(c).CONTEXT.json
    └── reports
        └── (name)_(a)_(b)_(c).AMN_IDENTITY.csv

For every coprime pair m, n with mn up to the bound and coprime to P_F, a_mn
from the direct enumeration of representations is compared with the double
sum over factor representations. Any mismatch stops the flow.
"""

from dataclasses import dataclass
from math import gcd, isclose

import pandas as pd
from io_collection.keys import make_key
from io_collection.save import save_dataframe
from prefect import flow, get_run_logger

from qform_pipeline.composition import amn_via_decomposition
from qform_pipeline.errors import InvariantError
from qform_pipeline.forms import parse_form
from qform_pipeline.sieve import LambdaSpec, representation_weight
from qform_pipeline.tasks import load_composition_context


@dataclass
class ParametersConfig:
    """Parameter configuration for check amn identity flow."""

    form: str
    """Form F, as ``a,b,c``."""

    bound: int = 1000
    """Largest product mn checked."""

    weights: str = "table"
    """Kind of weights on the first coordinate."""

    seed: int = 0
    """Random seed for table weights."""

    coordinate: str = "thin"
    """Coordinate weighted in the double sum, ``thin`` or ``bilinear``."""

    nested: bool = False
    """True if the context includes the nested representative family, False otherwise."""


@dataclass
class ContextConfig:
    """Context configuration for check amn identity flow."""

    working_location: str
    """Location for input and output files (local path or S3 bucket)."""


@dataclass
class SeriesConfig:
    """Series configuration for check amn identity flow."""

    name: str
    """Name of the series."""


@flow(name="check-amn-identity")
def run_flow(context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig) -> None:
    """Main check amn identity flow."""

    logger = get_run_logger()

    form = parse_form(parameters.form)
    composition_context = load_composition_context(
        context.working_location, series.name, form, parameters.nested
    )
    lam = LambdaSpec.from_kind(parameters.weights, seed=parameters.seed, size=parameters.bound + 1)

    rows = []

    for m in range(1, parameters.bound + 1):
        if not composition_context.coprime_to_pf(m):
            continue

        for n in range(1, parameters.bound // m + 1):
            if gcd(m, n) != 1 or not composition_context.coprime_to_pf(n):
                continue

            direct = representation_weight(form, m * n, lam)
            decomposed = amn_via_decomposition(
                m, n, lam, composition_context, parameters.coordinate
            )
            rows.append({"m": m, "n": n, "direct": direct, "decomposed": decomposed})

            if not isclose(direct, decomposed, rel_tol=1e-12, abs_tol=1e-12):
                logger.error(
                    "a_mn mismatch at m [ %d ] n [ %d ]: [ %f ] != [ %f ]", m, n, direct, decomposed
                )
                raise InvariantError(f"a_mn identity fails at m = {m}, n = {n}")

    logger.info("Checked [ %d ] pairs for [ %s ]", len(rows), form)

    key = make_key(
        series.name, "reports", f"{series.name}_{form.a}_{form.b}_{form.c}.AMN_IDENTITY.csv"
    )
    save_dataframe(context.working_location, key, pd.DataFrame(rows), index=False)
