"""
Workflow for calculating local root counts of a form.

Working location structure:

.. code-block:: bash

    (name)
    └── forms
        └── (name)_(a)_(b)_(c).RHO.csv

For each modulus d, the number of roots of F(1, nu) modulo d is saved. When a
residue pair is given, the number of nu with F(b, nu) = a modulo d is saved as
well.
"""

from dataclasses import dataclass, field
from typing import Optional

import pandas as pd
from io_collection.keys import make_key
from io_collection.save import save_dataframe
from prefect import flow, get_run_logger

from qform_pipeline.arithmetic import rho, rho_ab
from qform_pipeline.forms import parse_form


@dataclass
class ParametersConfig:
    """Parameter configuration for calculate rho flow."""

    form: str
    """Form F, as ``a,b,c``."""

    moduli: list[int] = field(default_factory=lambda: [1])
    """List of moduli d."""

    residue_a: Optional[int] = None
    """Target value a of F(b, nu) modulo d."""

    residue_b: Optional[int] = None
    """First coordinate b of F(b, nu)."""


@dataclass
class ContextConfig:
    """Context configuration for calculate rho flow."""

    working_location: str
    """Location for input and output files (local path or S3 bucket)."""


@dataclass
class SeriesConfig:
    """Series configuration for calculate rho flow."""

    name: str
    """Name of the series."""


@flow(name="calculate-rho")
def run_flow(context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig) -> None:
    """Main calculate rho flow."""

    logger = get_run_logger()

    form = parse_form(parameters.form)
    with_residues = parameters.residue_a is not None and parameters.residue_b is not None
    rows = []

    for modulus in parameters.moduli:
        row = {"d": modulus, "rho": rho(modulus, form)}

        if with_residues:
            row["rho_ab"] = rho_ab(modulus, parameters.residue_a, parameters.residue_b, form)

        logger.info("rho [ %s ] at d [ %d ] is [ %d ]", form, modulus, row["rho"])
        rows.append(row)

    key = make_key(series.name, "forms", f"{series.name}_{form.a}_{form.b}_{form.c}.RHO.csv")
    save_dataframe(context.working_location, key, pd.DataFrame(rows), index=False)
