from typing import Optional

from qform_pipeline.errors import InvariantError, ValidationError
from qform_pipeline.forms.binary_form import Form
from qform_pipeline.forms.reduce_form import reduce_form
from qform_pipeline.forms.transform_form import transform
from qform_pipeline.forms.unimodular_map import UnimodularMap, compose_maps


def properly_equivalent(form: Form, other: Form) -> Optional[UnimodularMap]:
    """Return ``U`` with ``transform(form, U) == other``, or None if inequivalent."""

    if form.discriminant != other.discriminant:
        raise ValidationError(
            f"forms [ {form} ] and [ {other} ] have different discriminants "
            f"[ {form.discriminant} ] and [ {other.discriminant} ]"
        )

    reduced, witness = reduce_form(form)
    other_reduced, other_witness = reduce_form(other)

    if reduced != other_reduced:
        return None

    equivalence = compose_maps(witness, other_witness.inverse())

    if transform(form, equivalence) != other:
        raise InvariantError(f"equivalence witness for [ {form} ] and [ {other} ] failed")

    return equivalence
