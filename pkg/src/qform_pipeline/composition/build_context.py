import logging
from math import prod

from sympy import factorint

from qform_pipeline.composition.build_sf import SEARCH_BUDGET, find_representatives
from qform_pipeline.composition.choose_b import choose_B
from qform_pipeline.composition.composition_context import CompositionContext
from qform_pipeline.composition.dirichlet_compose import dirichlet_compose
from qform_pipeline.forms import Form, validate_form

logger = logging.getLogger(__name__)


def largest_prime_factor(*values: int) -> int:
    primes = [prime for value in values if abs(value) > 1 for prime in factorint(abs(value))]
    return max(primes, default=1)


def build_context(F: Form, nested: bool = True, budget: int = SEARCH_BUDGET) -> CompositionContext:
    """
    Build the composition context of ``F``.

    The representatives of ``S_F`` are taken with ``t = alpha``. When ``nested``
    is set, a second family is drawn with ``t = alpha * prod f(1, 0)``; it is
    shared by every ``f`` because it depends only on the discriminant and ``t``.
    The common ``B`` is then solved jointly for both families.
    """

    validate_form(F)

    disc = F.discriminant
    delta = -disc

    representatives = find_representatives(disc, F.a, budget=budget)
    first_coefficients = [rep.form.a for rep in representatives]

    if nested:
        nested_t = F.a * prod(first_coefficients)
        nested_representatives = find_representatives(
            disc, nested_t, excluded=frozenset(first_coefficients) - {1}, budget=budget
        )
    else:
        nested_representatives = []

    forms = [rep.form for rep in representatives]
    nested_forms = [rep.form for rep in nested_representatives]
    middle = choose_B(forms, F, nested_forms)

    for form in forms:
        dirichlet_compose(form, F, middle)

    qf_factors = [2, F.a, F.c, delta, *first_coefficients]
    star_factors = []

    if nested:
        nested_coefficients = [rep.form.a for rep in nested_representatives]

        for form in forms:
            composite = dirichlet_compose(form, F, middle)
            star_factors.extend([composite.a, composite.c, *nested_coefficients])

    cf = largest_prime_factor(*qf_factors, *star_factors)

    logger.info("context for %s has %d classes, B = %d, C_F = %d", F, len(forms), middle, cf)

    return CompositionContext(
        F=F,
        delta=delta,
        representatives=tuple(representatives),
        nested_representatives=tuple(nested_representatives),
        B=middle,
        QF=prod(qf_factors),
        CF=cf,
    )
