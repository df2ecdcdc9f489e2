import logging
from math import gcd
from typing import Iterator

from sympy import isprime

from qform_pipeline.composition.composition_context import Representative
from qform_pipeline.errors import InvariantError, SearchBudgetError, ValidationError
from qform_pipeline.forms import (
    IDENTITY,
    Form,
    complete_to_unimodular,
    enumerate_reduced_forms,
    principal_form,
    transform,
    validate_discriminant,
    validate_form,
)

logger = logging.getLogger(__name__)

SEARCH_BUDGET = 100_000


def candidate_points() -> Iterator[tuple[int, int]]:
    """Yield primitive non-negative points by square shells, ordered by x then y."""

    shell = 1

    while True:
        for x in range(shell):
            if gcd(x, shell) == 1:
                yield (x, shell)

        for y in range(shell + 1):
            if gcd(shell, y) == 1:
                yield (shell, y)

        shell += 1


def find_representatives(
    disc: int, t: int, excluded: frozenset[int] = frozenset(), budget: int = SEARCH_BUDGET
) -> list[Representative]:
    """
    Pick one representative per class of discriminant ``disc``.

    Non-principal representatives have distinct prime first coefficients that
    divide neither ``2 t Delta`` nor any entry of ``excluded``.
    """

    validate_discriminant(disc)

    if t < 1:
        raise ValidationError(f"t [ {t} ] must be positive")

    principal = principal_form(disc)
    forbidden = 2 * t * -disc
    used: set[int] = set(excluded)
    representatives = []

    for reduced in enumerate_reduced_forms(disc):
        if reduced == principal:
            representatives.append(Representative(reduced, reduced, (1, 0), IDENTITY))
            continue

        for count, (x, y) in enumerate(candidate_points()):
            if count >= budget:
                raise SearchBudgetError(
                    f"no prime value of [ {reduced} ] found in [ {budget} ] points"
                )

            value = reduced.evaluate(x, y)

            if value in used or forbidden % value == 0 or not isprime(value):
                continue

            transformation = complete_to_unimodular(x, y)
            form = transform(reduced, transformation)

            if form.a != value or form.discriminant != disc:
                raise InvariantError(f"completion at [ ({x}, {y}) ] broke [ {reduced} ]")

            logger.debug("class %s represented by %s at (%d, %d)", reduced, form, x, y)
            representatives.append(Representative(form, reduced, (x, y), transformation))
            used.add(value)
            break

    return representatives


def build_SF(F: Form, t: int) -> list[Form]:  # pylint: disable=invalid-name
    """Return the forms of ``S_F(t)`` in class order."""

    validate_form(F)
    return [representative.form for representative in find_representatives(F.discriminant, t)]
