"""
Workflow for computing the form class group of a discriminant.

Working location structure:

.. code-block:: bash

    (name)
    └── forms
        ├── (name)_(discriminant).CLASS_GROUP.csv
        └── (name)_(discriminant).CLASS_GROUP.json

Reduced forms are saved as a list in the json file. The composition table of
the classes is saved as a csv with one row per pair of classes.
"""

from dataclasses import dataclass

import pandas as pd
from io_collection.keys import make_key
from io_collection.save import save_dataframe, save_json
from prefect import flow, get_run_logger

from qform_pipeline.composition import class_group_table
from qform_pipeline.forms import enumerate_reduced_forms, format_form


@dataclass
class ParametersConfig:
    """Parameter configuration for compute class group flow."""

    discriminant: int
    """Negative discriminant."""

    table: bool = True
    """True if the composition table should be computed, False otherwise."""


@dataclass
class ContextConfig:
    """Context configuration for compute class group flow."""

    working_location: str
    """Location for input and output files (local path or S3 bucket)."""


@dataclass
class SeriesConfig:
    """Series configuration for compute class group flow."""

    name: str
    """Name of the series."""


@flow(name="compute-class-group")
def run_flow(context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig) -> None:
    """Main compute class group flow."""

    logger = get_run_logger()

    disc = parameters.discriminant
    forms = enumerate_reduced_forms(disc)

    logger.info("Discriminant [ %d ] has class number [ %d ]", disc, len(forms))

    group_key = make_key(series.name, "forms", f"{series.name}_{disc}.CLASS_GROUP")
    save_json(
        context.working_location,
        f"{group_key}.json",
        {"discriminant": disc, "forms": [format_form(form) for form in forms]},
    )

    if not parameters.table:
        return

    table = class_group_table(disc)
    rows = [
        {"left": format_form(left), "right": format_form(right), "product": format_form(product)}
        for left, products in zip(forms, table)
        for right, product in zip(forms, products)
    ]

    save_dataframe(context.working_location, f"{group_key}.csv", pd.DataFrame(rows), index=False)
