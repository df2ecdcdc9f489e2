from prefect import get_run_logger, task


@task
def check_ratio_trend(values: list[float], description: str) -> bool:
    """Check that values do not increase along the grid."""

    logger = get_run_logger()

    for index, (earlier, later) in enumerate(zip(values, values[1:])):
        if later > earlier * (1 + 1e-12):
            logger.warning(
                "%s increases from [ %f ] to [ %f ] at grid step [ %d ]",
                description,
                earlier,
                later,
                index + 1,
            )
            return False

    return True
