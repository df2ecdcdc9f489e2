from math import gcd, isqrt

from qform_pipeline.errors import ValidationError
from qform_pipeline.forms.binary_form import Form


def represent_number(form: Form, n: int, primitive: bool = True) -> list[tuple[int, int]]:
    """
    List all ``(x, y)`` with ``form(x, y) == n``, sorted.

    Only pairs with ``gcd(x, y) == 1`` are returned when ``primitive`` is set.
    """

    if not form.is_positive_definite:
        raise ValidationError(f"form [ {form} ] is not positive definite")

    if n < 0:
        return []

    if n == 0:
        return [] if primitive else [(0, 0)]

    a, b = form.a, form.b
    delta = -form.discriminant
    bound = isqrt(4 * a * n // delta)
    solutions = set()

    for y in range(-bound, bound + 1):
        radicand = 4 * a * n - delta * y * y

        if radicand < 0:
            continue

        root = isqrt(radicand)

        if root * root != radicand:
            continue

        for signed_root in {root, -root}:
            numerator = -b * y + signed_root

            if numerator % (2 * a) == 0:
                solutions.add((numerator // (2 * a), y))

    if primitive:
        solutions = {(x, y) for x, y in solutions if gcd(x, y) == 1}

    return sorted(solutions)


def automorph_count(disc: int) -> int:
    """Number of proper automorphs of a primitive positive definite form."""

    if disc == -3:
        return 6

    if disc == -4:
        return 4

    return 2
