"""
Config composition for the ``qform`` command.

Every flow module defines ``ContextConfig``, ``SeriesConfig``, and
``ParametersConfig`` dataclasses. The composed config has one group per
dataclass, filled from a dotlist, a single yaml file, or the composable
``configs`` directory.
"""

import os
from dataclasses import field, fields, make_dataclass
from types import ModuleType
from typing import Any, Callable, Union

from hydra import compose, initialize_config_dir
from hydra.core.config_store import ConfigStore
from omegaconf import MISSING, DictConfig, ListConfig, OmegaConf

from qform_pipeline.errors import ValidationError
from qform_pipeline.forms import parse_form

GROUP_SCHEMAS = {
    "context": "ContextConfig",
    "series": "SeriesConfig",
    "parameters": "ParametersConfig",
}

FORM_KEYS = ("form", "other")

defaults = ["_self_", *({group: MISSING} for group in GROUP_SCHEMAS)]


def assemble_config(module: ModuleType, make_group: Callable[[Any, str], DictConfig]) -> DictConfig:
    """Build each group from the flow schema and check the form strings."""

    groups = {
        group: make_group(getattr(module, schema), group) for group, schema in GROUP_SCHEMAS.items()
    }
    config = OmegaConf.create(groups)

    validate_forms(config.parameters)

    return config


def make_config_from_dotlist(module: ModuleType, args: list[str]) -> DictConfig:
    def group_from_dotlist(schema: Any, group: str) -> DictConfig:
        prefix = f"{group}."
        config = OmegaConf.structured(schema)
        config.merge_with_dotlist([arg[len(prefix) :] for arg in args if arg.startswith(prefix)])
        return config

    return assemble_config(module, group_from_dotlist)


def make_config_from_file(module: ModuleType, file: str) -> DictConfig:
    contents = OmegaConf.load(file)

    def group_from_file(schema: Any, group: str) -> DictConfig:
        if group not in contents:
            raise ValidationError(f"config file [ {file} ] has no [ {group} ] group")

        return load_config(schema, contents[group])

    return assemble_config(module, group_from_file)


def make_config_from_yaml(module: ModuleType, args: list[str]) -> DictConfig:
    config_dataclass = make_dataclass(
        "Config",
        [
            ("defaults", list[Any], field(default_factory=lambda: defaults)),
            *((group, getattr(module, schema), MISSING) for group, schema in GROUP_SCHEMAS.items()),
        ],
    )

    ConfigStore.instance().store(name="config", node=config_dataclass)
    initialize_config_dir(os.path.join(os.path.abspath(os.getcwd()), "configs"), version_base=None)

    config = compose(config_name="config", overrides=args)
    validate_forms(config.parameters)

    return config


def load_config(schema: Any, config: Union[ListConfig, DictConfig]) -> DictConfig:
    """Merge a loaded group into its schema, dropping keys the schema lacks."""

    known = {schema_field.name for schema_field in fields(schema)}

    for key in [key for key in config.keys() if key not in known]:
        del config[key]

    for key in FORM_KEYS:
        if key in config and isinstance(config[key], ListConfig):
            config[key] = ",".join(str(coefficient) for coefficient in config[key])

    return OmegaConf.merge(schema, config)


def validate_forms(parameters: DictConfig) -> None:
    for key in FORM_KEYS:
        if key in parameters and not OmegaConf.is_missing(parameters, key):
            value = parameters[key]

            if value is not None:
                parse_form(str(value))


def display_config(config: DictConfig) -> None:
    """Print each group with list values kept on one line."""

    resolved = OmegaConf.to_container(config, resolve=True)

    for group in GROUP_SCHEMAS:
        print(f"{group}:")

        for key, value in resolved[group].items():
            if isinstance(value, list):
                value = "[" + ", ".join(str(item) for item in value) + "]"

            print(f"  {key}: {value}")
