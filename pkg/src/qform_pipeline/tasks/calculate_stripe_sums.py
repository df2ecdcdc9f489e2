from prefect import task

from qform_pipeline.arithmetic import SieveTables
from qform_pipeline.composition import CompositionContext
from qform_pipeline.sieve import ExperimentConfig, StripeSums, stripe_sums


@task
def calculate_stripe_sums(
    config: ExperimentConfig,
    context: CompositionContext,
    tables: SieveTables,
    ell_range: tuple[int, int],
) -> StripeSums:
    return stripe_sums(config, context, tables, ell_range)
