from io_collection.keys import check_key, make_key
from io_collection.load import load_json
from io_collection.save import save_json
from prefect import get_run_logger, task

from qform_pipeline.composition import (
    CompositionContext,
    build_context,
    context_from_dict,
    context_to_dict,
)
from qform_pipeline.forms import Form


def make_context_key(name: str, form: Form) -> str:
    return make_key(name, "contexts", f"{name}_{form.a}_{form.b}_{form.c}.CONTEXT.json")


@task
def load_composition_context(
    working_location: str, name: str, form: Form, nested: bool = True
) -> CompositionContext:
    """Load the saved context of the form, or build and save it when missing."""

    logger = get_run_logger()
    key = make_context_key(name, form)

    if check_key(working_location, key):
        context = context_from_dict(load_json(working_location, key))

        if not nested or len(context.nested_representatives) > 0:
            logger.info("Loaded context [ %s ]", key)
            return context

    context = build_context(form, nested=nested)
    save_json(working_location, key, context_to_dict(context))
    logger.info("Built context [ %s ] with C_F [ %d ]", key, context.CF)

    return context
