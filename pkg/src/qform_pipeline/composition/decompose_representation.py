from math import gcd

from qform_pipeline.composition.composition_context import CompositionContext
from qform_pipeline.composition.dirichlet_compose import (
    reconstruct_representation,
    wz_substitution,
)
from qform_pipeline.errors import InvariantError, ValidationError
from qform_pipeline.forms import Form, automorph_count, represent_number

DecompositionTuple = tuple[Form, int, int, int, int]


def validate_pair(m: int, n: int, context: CompositionContext) -> None:
    if m < 1 or n < 1:
        raise ValidationError(f"m [ {m} ] and n [ {n} ] must be positive")

    if gcd(m, n) != 1:
        raise ValidationError(f"m [ {m} ] and n [ {n} ] are not coprime")

    if not context.coprime_to_pf(m * n):
        raise ValidationError(f"mn [ {m * n} ] shares a prime factor with P_F (C_F = {context.CF})")


def decompose_representation(
    m: int, n: int, x: int, y: int, context: CompositionContext
) -> list[DecompositionTuple]:
    """
    Split a primitive representation ``F(x, y) = m n`` into factors.

    Returns every ``(f, u, v, w, z)`` with ``f`` in ``S_F``, ``f(u, v) = m``,
    ``f*(w, z) = n`` and ``(x, y)`` rebuilt from the four coordinates. There
    are exactly as many tuples as automorphs of ``F``.
    """

    validate_pair(m, n, context)

    if gcd(x, y) != 1:
        raise ValidationError(f"representation [ ({x}, {y}) ] is not primitive")

    if context.F.evaluate(x, y) != m * n:
        raise ValidationError(f"F({x}, {y}) = [ {context.F.evaluate(x, y)} ] is not [ {m * n} ]")

    tuples: list[DecompositionTuple] = []

    for form in context.SF:
        composite = context.fstar(form)

        for u, v in represent_number(form, m, primitive=True):
            w_value, z_value = wz_substitution(form, context.F, context.B, u, v, x, y)

            if w_value % m != 0 or z_value % m != 0:
                continue

            w, z = w_value // m, z_value // m

            if composite.evaluate(w, z) != n or gcd(w, z) != 1:
                raise InvariantError(f"quotient [ ({w}, {z}) ] does not represent [ {n} ]")

            if reconstruct_representation(form, context.F, context.B, u, v, w, z) != (x, y):
                raise InvariantError(
                    f"tuple [ ({u}, {v}, {w}, {z}) ] does not rebuild [ ({x}, {y}) ]"
                )

            tuples.append((form, u, v, w, z))

    expected = automorph_count(-context.delta)

    if len(tuples) != expected:
        raise InvariantError(
            f"found [ {len(tuples)} ] decompositions of [ ({x}, {y}) ], expected [ {expected} ]"
        )

    return tuples
