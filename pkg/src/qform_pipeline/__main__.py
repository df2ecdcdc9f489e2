"""
Command line entry point.

.. code-block:: bash

    qform <flow> :: group.key=value ...   # dotlist
    qform <flow> config.yaml              # single config file
    qform <flow> group=name ...           # composable configs directory

Add ``--dryrun`` to print the composed config without running the flow and
``--csv`` to save flat csv tables next to experiment reports. Config values may
use the ``${home:path}`` and ``${concat:[a, b]}`` resolvers.
"""

import importlib
import os
import sys
from types import ModuleType
from typing import Optional

from omegaconf import DictConfig, OmegaConf
from omegaconf.errors import OmegaConfBaseException

from qform_pipeline.__config__ import (
    display_config,
    make_config_from_dotlist,
    make_config_from_file,
    make_config_from_yaml,
)
from qform_pipeline.errors import InvariantError, ValidationError

EXIT_SUCCESS = 0

EXIT_VALIDATION = 1

EXIT_INVARIANT = 2

FLOWS_PACKAGE = "qform_pipeline.flows"

DRYRUN_FLAG = "--dryrun"

CSV_FLAG = "--csv"

FLAGS = (DRYRUN_FLAG, CSV_FLAG)

USAGE = "usage: qform <flow> [:: dotlist | config.yaml | overrides] [--dryrun] [--csv]"


def main(argv: Optional[list[str]] = None) -> int:
    """Run the flow named by the first argument, returning the exit code."""

    arguments = list(sys.argv[1:] if argv is None else argv)
    dryrun = DRYRUN_FLAG in arguments
    csv = CSV_FLAG in arguments
    arguments = [argument for argument in arguments if argument not in FLAGS]

    register_resolvers()

    if not arguments:
        print(USAGE, file=sys.stderr)
        return EXIT_VALIDATION

    flow_name, config_args = arguments[0], arguments[1:]
    module = get_module(flow_name)

    if module is None:
        print(f"unknown flow [ {flow_name} ]", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        config = compose_config(module, config_args)

        if csv:
            enable_csv(config)

        display_config(config)

        if not dryrun:
            run_flow(module, config)
    except InvariantError as error:
        print(f"invariant failure: {error}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValidationError, OmegaConfBaseException) as error:
        print(f"invalid input: {error}", file=sys.stderr)
        return EXIT_VALIDATION

    return EXIT_SUCCESS


def register_resolvers() -> None:
    if not OmegaConf.has_resolver("concat"):
        OmegaConf.register_new_resolver("concat", lambda items: ":".join(sorted(items)))

    if not OmegaConf.has_resolver("home"):
        OmegaConf.register_new_resolver(
            "home", lambda path: os.path.join(os.path.expanduser("~"), path)
        )


def get_module(flow_name: str) -> Optional[ModuleType]:
    module_name = f"{FLOWS_PACKAGE}.{flow_name.replace('-', '_')}"

    if not all(part.isidentifier() for part in module_name.split(".")):
        return None

    try:
        return importlib.import_module(module_name)
    except ModuleNotFoundError as error:
        if error.name == module_name:
            return None
        raise


def compose_config(module: ModuleType, args: list[str]) -> DictConfig:
    """Pick the config mode from the arguments following the flow name."""

    if args[:1] == ["::"]:
        return make_config_from_dotlist(module, args[1:])

    if len(args) == 1 and args[0].endswith((".yaml", ".yml")):
        return make_config_from_file(module, args[0])

    return make_config_from_yaml(module, args)


def enable_csv(config: DictConfig) -> None:
    if "csv" not in config.parameters:
        raise ValidationError("flow parameters have no [ csv ] option")

    config.parameters.csv = True


def run_flow(module: ModuleType, config: DictConfig) -> None:
    context = OmegaConf.to_object(config.context)
    series = OmegaConf.to_object(config.series)
    parameters = OmegaConf.to_object(config.parameters)

    module.run_flow(context, series, parameters)


if __name__ == "__main__":
    sys.exit(main())
