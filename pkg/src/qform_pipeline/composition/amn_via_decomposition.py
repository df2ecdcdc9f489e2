from math import fsum
from typing import Callable

from qform_pipeline.composition.bilinear_forms import qf_bilinear, thin_coordinate
from qform_pipeline.composition.composition_context import CompositionContext
from qform_pipeline.composition.decompose_representation import validate_pair
from qform_pipeline.errors import ValidationError
from qform_pipeline.forms import automorph_count, represent_number

COORDINATES = ("thin", "bilinear")


def amn_via_decomposition(
    m: int,
    n: int,
    weight: Callable[[int], float],
    context: CompositionContext,
    coordinate: str = "thin",
) -> float:
    """
    Evaluate ``a_{mn}`` as a double sum over factor representations.

    The ``thin`` coordinate rebuilds the first coordinate of each representation
    and matches the direct count for every ``F``. The ``bilinear`` coordinate
    uses the compact bilinear form, which matches only when ``B = 0``.
    """

    validate_pair(m, n, context)

    if coordinate not in COORDINATES:
        raise ValidationError(f"coordinate [ {coordinate} ] not in {COORDINATES}")

    evaluate = thin_coordinate if coordinate == "thin" else qf_bilinear
    values = []

    for form in context.SF:
        composite = context.fstar(form)

        for w, z in represent_number(composite, m, primitive=True):
            for u, v in represent_number(form, n, primitive=True):
                values.append(weight(evaluate(form, context, u, v, w, z)))

    return fsum(values) / automorph_count(-context.delta)
