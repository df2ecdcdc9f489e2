"""
Workflow for running sieve experiments on values of a form.

Working location structure:

.. code-block:: bash

    (name)
    ├── contexts
    │   └── (name)_(a)_(b)_(c).CONTEXT.json
    ├── reports
    │   ├── (name).(experiment).REPORT.csv
    │   └── (name).(experiment).REPORT.json
    └── tables
        └── (name)_(limit).SIEVE.bin

Different experiments use the context from **contexts** and the sieve tables
from **tables**, building and saving either when missing. Each experiment saves
a json report to **reports**, with a flat csv of its trend grid when
``csv`` is set.

The prime counting experiments split the positive first coordinates into
stripes that are summed as separate tasks and then merged.
"""

from dataclasses import dataclass, field
from typing import Optional

from io_collection.keys import make_key
from io_collection.save import save_dataframe, save_json
from prefect import flow, get_run_logger

from qform_pipeline.arithmetic import SieveTables
from qform_pipeline.composition import CompositionContext
from qform_pipeline.forms import parse_form
from qform_pipeline.sieve import (
    ExperimentConfig,
    ExperimentReport,
    LambdaSpec,
    bilinear_experiment,
    congruence_reconstruction,
    corollary2_experiment,
    corollary2_weights,
    ell_stripes,
    fi_check_experiment,
    level_experiment,
    theorem1_experiment,
)
from qform_pipeline.tasks import (
    calculate_stripe_sums,
    check_ratio_trend,
    check_ratio_window,
    load_composition_context,
    load_sieve_tables,
)

EXPERIMENTS: list[str] = [
    "theorem1",
    "corollary2",
    "level",
    "bilinear",
    "fi_check",
]


@dataclass
class ParametersConfig:
    """Parameter configuration for run experiment flow."""

    form: str = "1,0,1"
    """Form F, as ``a,b,c``."""

    X: int = 10**4
    """Upper bound on form values."""

    experiments: list[str] = field(default_factory=lambda: EXPERIMENTS)
    """List of experiments."""

    q: int = 1
    """Modulus of congruence conditions."""

    a: int = 1
    """Residue class of form values."""

    b: int = 1
    """Residue class of the first coordinate."""

    weights: str = "von_mangoldt"
    """Kind of weights on the first coordinate."""

    seed: int = 0
    """Random seed for table weights."""

    D: Optional[int] = None
    """Fixed level in the level experiment, or None to use theta."""

    Y: Optional[float] = None
    """Fixed Y cut in the bilinear experiment, or None to use theta_y."""

    Z: Optional[float] = None
    """Fixed Z cut in the bilinear experiment, or None to use theta_z."""

    character: int = 0
    """Index of the Dirichlet character modulo q."""

    theta: float = 0.5
    """Exponent of the level in the level experiment."""

    theta_y: float = 0.25
    """Exponent of the Y cut in the bilinear experiment."""

    theta_z: float = 0.25
    """Exponent of the Z cut in the bilinear experiment."""

    prime_bound: int = 10**6
    """Largest prime in truncated Euler products."""

    nested: bool = True
    """True if the context includes the nested representative family, False otherwise."""

    partitions: int = 1
    """Number of first coordinate stripes summed as separate tasks."""

    ratio_window: list[float] = field(default_factory=lambda: [0.9, 1.1])
    """Lower and upper bound on main term ratios."""

    deterministic: bool = False
    """True if runtimes are left out of reports, False otherwise."""

    csv: bool = False
    """True if the trend grid is also saved as csv, False otherwise."""

    tables_key: str = ""
    """Key of saved sieve tables, defaulting to the QFORM_TABLES environment variable."""


@dataclass
class ContextConfig:
    """Context configuration for run experiment flow."""

    working_location: str
    """Location for input and output files (local path or S3 bucket)."""


@dataclass
class SeriesConfig:
    """Series configuration for run experiment flow."""

    name: str
    """Name of the series."""


def make_experiment_config(parameters: ParametersConfig) -> ExperimentConfig:
    lam = LambdaSpec.from_kind(parameters.weights, seed=parameters.seed, size=parameters.X + 1)

    return ExperimentConfig(
        F=parse_form(parameters.form),
        X=parameters.X,
        q=parameters.q,
        a=parameters.a,
        b=parameters.b,
        lam=lam,
        D=parameters.D,
        Y=parameters.Y,
        Z=parameters.Z,
        character=parameters.character,
        theta=parameters.theta,
        theta_y=parameters.theta_y,
        theta_z=parameters.theta_z,
        prime_bound=parameters.prime_bound,
        nested=parameters.nested,
    )


def save_report(
    context: ContextConfig,
    series: SeriesConfig,
    report: ExperimentReport,
    parameters: ParametersConfig,
) -> None:
    report_key = make_key(series.name, "reports", f"{series.name}.{report.experiment}.REPORT")
    save_json(
        context.working_location, f"{report_key}.json", report.to_dict(parameters.deterministic)
    )

    if parameters.csv:
        save_dataframe(
            context.working_location, f"{report_key}.csv", report.to_dataframe(), index=False
        )


def submit_stripes(
    config: ExperimentConfig,
    composition_context: CompositionContext,
    tables: SieveTables,
    partitions: int,
) -> list[dict[str, list[float]]]:
    futures = [
        calculate_stripe_sums.submit(config, composition_context, tables, ell_range)
        for ell_range in ell_stripes(config.F, config.X, partitions)
    ]
    return [future.result() for future in futures]


@flow(name="run-experiment")
def run_flow(context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig) -> None:
    """
    Main run experiment flow.

    Calls the following subflows, if the experiment is specified:

    - :py:func:`run_flow_theorem1`
    - :py:func:`run_flow_corollary2`
    - :py:func:`run_flow_level`
    - :py:func:`run_flow_bilinear`
    - :py:func:`run_flow_fi_check`
    """

    logger = get_run_logger()

    unknown = [name for name in parameters.experiments if name not in EXPERIMENTS]

    if unknown:
        logger.error("Unknown experiments [ %s ], choose from [ %s ]", unknown, EXPERIMENTS)
        return

    if "theorem1" in parameters.experiments:
        run_flow_theorem1(context, series, parameters)

    if "corollary2" in parameters.experiments:
        run_flow_corollary2(context, series, parameters)

    if "level" in parameters.experiments:
        run_flow_level(context, series, parameters)

    if "bilinear" in parameters.experiments:
        run_flow_bilinear(context, series, parameters)

    if "fi_check" in parameters.experiments:
        run_flow_fi_check(context, series, parameters)


@flow(name="run-experiment_theorem1")
def run_flow_theorem1(
    context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig
) -> None:
    """Run experiment subflow for the weighted prime count with its singular series."""

    config = make_experiment_config(parameters)
    composition_context = load_composition_context(
        context.working_location, series.name, config.F, parameters.nested
    )
    tables = load_sieve_tables(
        context.working_location, series.name, config.X, parameters.tables_key
    )

    partials = submit_stripes(config, composition_context, tables, parameters.partitions)
    report = theorem1_experiment(config, composition_context, tables, partials)

    if config.q > 1:
        report.results["congruence_reconstruction"] = congruence_reconstruction(
            config, composition_context, tables
        )

    check_ratio_window(report.results["ratio"], tuple(parameters.ratio_window), "theorem1")
    save_report(context, series, report, parameters)


@flow(name="run-experiment_corollary2")
def run_flow_corollary2(
    context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig
) -> None:
    """Run experiment subflow for the prime count with prime first coordinates."""

    config = corollary2_weights(make_experiment_config(parameters))
    composition_context = load_composition_context(
        context.working_location, series.name, config.F, parameters.nested
    )
    tables = load_sieve_tables(
        context.working_location, series.name, config.X, parameters.tables_key
    )

    partials = submit_stripes(config, composition_context, tables, parameters.partitions)
    report = corollary2_experiment(config, composition_context, tables, partials)

    check_ratio_window(report.results["ratio"], tuple(parameters.ratio_window), "corollary2")
    save_report(context, series, report, parameters)


@flow(name="run-experiment_level")
def run_flow_level(
    context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig
) -> None:
    """Run experiment subflow for the normalized remainder sum."""

    config = make_experiment_config(parameters)
    composition_context = load_composition_context(
        context.working_location, series.name, config.F, parameters.nested
    )
    tables = load_sieve_tables(
        context.working_location, series.name, config.X, parameters.tables_key
    )

    report = level_experiment(config, composition_context, tables)

    check_ratio_trend([row["normalized"] for row in report.trend], "level normalized remainder")
    save_report(context, series, report, parameters)


@flow(name="run-experiment_bilinear")
def run_flow_bilinear(
    context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig
) -> None:
    """Run experiment subflow for the type II sum."""

    logger = get_run_logger()

    config = make_experiment_config(parameters)
    composition_context = load_composition_context(
        context.working_location, series.name, config.F, parameters.nested
    )
    tables = load_sieve_tables(
        context.working_location, series.name, config.X, parameters.tables_key
    )

    report = bilinear_experiment(config, composition_context, tables)

    holds: Optional[bool] = report.results.get("combination_holds")

    if holds is False:
        logger.warning("Remainder combination exceeds its bound at X [ %d ]", config.X)

    save_report(context, series, report, parameters)


@flow(name="run-experiment_fi-check")
def run_flow_fi_check(
    context: ContextConfig, series: SeriesConfig, parameters: ParametersConfig
) -> None:
    """Run experiment subflow for the Gaussian bilinear identity."""

    report = fi_check_experiment(make_experiment_config(parameters))
    save_report(context, series, report, parameters)
