"""Algebra of positive definite binary quadratic forms."""

from .binary_form import (
    Form,
    discriminant,
    format_form,
    parse_form,
    validate_discriminant,
    validate_form,
)
from .enumerate_reduced_forms import enumerate_reduced_forms, principal_form, reduced_form_key
from .properly_equivalent import properly_equivalent
from .reduce_form import is_reduced, reduce_form
from .represent_number import automorph_count, represent_number
from .transform_form import transform
from .unimodular_map import IDENTITY, UnimodularMap, complete_to_unimodular, compose_maps
