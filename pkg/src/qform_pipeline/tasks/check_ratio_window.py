from typing import Optional

from prefect import get_run_logger, task


@task
def check_ratio_window(
    ratio: Optional[float], window: tuple[float, float], description: str
) -> bool:
    logger = get_run_logger()

    if ratio is None:
        logger.warning("%s ratio undefined, main term is zero", description)
        return False

    if ratio > window[1]:
        logger.warning(
            "%s ratio [ %f ] greater than upper bound [ %f ]", description, ratio, window[1]
        )
        return False

    if ratio < window[0]:
        logger.warning(
            "%s ratio [ %f ] less than lower bound [ %f ]", description, ratio, window[0]
        )
        return False

    return True
