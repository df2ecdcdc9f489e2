"""
Workflow for building arithmetic sieve tables.

Working location structure:

.. code-block:: bash

    (name)
    └── tables
        └── (name)_(limit).SIEVE.bin

Tables hold the smallest prime factor, Moebius and von Mangoldt values for
every integer up to the limit, in a little-endian binary layout: the magic
bytes ``QFSIEVE1``, the limit as uint64, then (limit + 1) int64, int8 and
float64 entries.
"""

from dataclasses import dataclass

from prefect import flow, get_run_logger

from qform_pipeline.arithmetic import build_sieve
from qform_pipeline.arithmetic.sieve_tables import DEFAULT_MEMORY_BUDGET
from qform_pipeline.tasks import save_sieve_tables


@dataclass
class ParametersConfig:
    """Parameter configuration for build sieve flow."""

    limit: int
    """Largest tabulated integer."""

    memory_budget: int = DEFAULT_MEMORY_BUDGET
    """Maximum number of bytes the tables may use."""


@dataclass
class ContextConfig:
    """Context configuration for build sieve flow."""

    working_location: str
    """Location for input and output files (local path or S3 bucket)."""


@dataclass
class SeriesConfig:
    """Series configuration for build sieve flow."""

    name: str
    """Name of the series."""


@flow(name="build-sieve")
def run_flow(context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig) -> None:
    """Main build sieve flow."""

    logger = get_run_logger()

    tables = build_sieve(parameters.limit, parameters.memory_budget)
    key = save_sieve_tables(context.working_location, series.name, tables)

    logger.info("Saved sieve tables up to [ %d ] to [ %s ]", parameters.limit, key)
