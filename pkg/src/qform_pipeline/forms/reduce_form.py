from qform_pipeline.forms.binary_form import Form, validate_form
from qform_pipeline.forms.transform_form import transform
from qform_pipeline.forms.unimodular_map import IDENTITY, UnimodularMap, compose_maps

SWAP = UnimodularMap(0, -1, 1, 0)


def is_reduced(form: Form) -> bool:
    a, b, c = form.a, form.b, form.c
    return -a < b <= a <= c and not (a == c and b < 0)


def reduce_form(form: Form) -> tuple[Form, UnimodularMap]:
    """
    Reduce a primitive positive definite form.

    Returns the unique reduced form ``r`` in the proper equivalence class
    together with a witness ``U`` such that ``transform(form, U) == r``.
    """

    validate_form(form)

    current = form
    witness = IDENTITY

    while True:
        a, b = current.a, current.b

        if not -a < b <= a:
            shift = UnimodularMap(1, (a - b) // (2 * a), 0, 1)
            current = transform(current, shift)
            witness = compose_maps(witness, shift)

        if current.a > current.c:
            current = transform(current, SWAP)
            witness = compose_maps(witness, SWAP)
            continue

        break

    if current.a == current.c and current.b < 0:
        current = transform(current, SWAP)
        witness = compose_maps(witness, SWAP)

    return current, witness
