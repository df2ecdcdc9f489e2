import os
from io import BytesIO

from io_collection.keys import get_keys, make_key
from io_collection.load import load_buffer
from io_collection.save import save_buffer
from prefect import get_run_logger, task

from qform_pipeline.arithmetic import SieveTables, build_sieve, sieve_from_bytes, sieve_to_bytes
from qform_pipeline.errors import ValidationError


def make_tables_key(name: str, limit: int) -> str:
    return make_key(name, "tables", f"{name}_{limit}.SIEVE.bin")


def save_sieve_tables(working_location: str, name: str, tables: SieveTables) -> str:
    key = make_tables_key(name, tables.limit)
    save_buffer(working_location, key, BytesIO(sieve_to_bytes(tables)))
    return key


@task
def load_sieve_tables(
    working_location: str, name: str, limit: int, tables_key: str = ""
) -> SieveTables:
    """
    Load the smallest saved tables covering the limit, or build and save new ones.

    An explicit tables key, or the ``QFORM_TABLES`` environment variable when
    the key is empty, names the tables to load instead.
    """

    logger = get_run_logger()
    tables_key = tables_key or os.environ.get("QFORM_TABLES", "")

    if tables_key:
        tables = sieve_from_bytes(load_buffer(working_location, tables_key).getvalue())

        if tables.limit < limit:
            raise ValidationError(
                f"tables [ {tables_key} ] stop at [ {tables.limit} ] below [ {limit} ]"
            )

        logger.info("Loaded tables [ %s ]", tables_key)
        return tables

    saved_limits = []

    for key in get_keys(working_location, make_key(name, "tables")):
        if not key.endswith(".SIEVE.bin"):
            continue

        suffix = key.split("/")[-1].replace(".SIEVE.bin", "").split("_")[-1]

        if suffix.isdigit() and int(suffix) >= limit:
            saved_limits.append(int(suffix))

    if saved_limits:
        key = make_tables_key(name, min(saved_limits))
        logger.info("Loaded tables [ %s ]", key)
        return sieve_from_bytes(load_buffer(working_location, key).getvalue())

    tables = build_sieve(max(limit, 2))
    key = save_sieve_tables(working_location, name, tables)
    logger.info("Built tables [ %s ]", key)

    return tables
