from math import gcd

from qform_pipeline.composition.choose_b import choose_B
from qform_pipeline.composition.dirichlet_compose import dirichlet_compose
from qform_pipeline.errors import InvariantError
from qform_pipeline.forms import (
    Form,
    complete_to_unimodular,
    enumerate_reduced_forms,
    reduce_form,
    transform,
    validate_form,
)


def coprime_representative(form: Form, modulus: int) -> Form:
    """Return a form of the class of ``form`` whose first coefficient is prime to ``modulus``."""

    for x in range(1, 4 * (form.a + form.c) + 2):
        for y in range(-x, x + 1):
            if gcd(x, y) != 1 or gcd(form.evaluate(x, y), modulus) != 1:
                continue

            return transform(form, complete_to_unimodular(x, y))

    raise InvariantError(f"no representative of [ {form} ] coprime to [ {modulus} ]")


def compose_classes(form: Form, other: Form) -> Form:
    """Reduced form of the product of the classes of ``form`` and ``other``."""

    validate_form(form)
    validate_form(other)

    first = coprime_representative(reduce_form(form)[0], other.a)
    middle = choose_B([first], other)

    return reduce_form(dirichlet_compose(first, other, middle))[0]


def class_group_table(disc: int) -> list[list[Form]]:
    """Multiplication table of the class group, indexed in reduced-form order."""

    forms = enumerate_reduced_forms(disc)
    return [[compose_classes(form, other) for other in forms] for form in forms]
