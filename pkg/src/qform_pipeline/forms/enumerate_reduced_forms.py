from math import gcd

from qform_pipeline.forms.binary_form import Form, validate_discriminant


def reduced_form_key(form: Form) -> tuple[int, int, int]:
    return (form.a, abs(form.b), -form.b)


def principal_form(disc: int) -> Form:
    """Return the reduced form representing 1 for the given discriminant."""

    validate_discriminant(disc)
    b = disc % 2
    return Form(1, b, (b * b - disc) // 4)


def enumerate_reduced_forms(disc: int) -> list[Form]:
    """
    List every reduced primitive positive definite form of discriminant ``disc``.

    Forms are ordered with the principal form first and then by ``(a, |b|, -b)``.
    """

    validate_discriminant(disc)

    forms = []
    a = 1

    while 3 * a * a <= -disc:
        for b in range(-a + 1, a + 1):
            if (b - disc) % 2 != 0 or (b * b - disc) % (4 * a) != 0:
                continue

            c = (b * b - disc) // (4 * a)

            if c < a or (c == a and b < 0):
                continue

            if gcd(gcd(a, b), c) == 1:
                forms.append(Form(a, b, c))

        a += 1

    return sorted(forms, key=reduced_form_key)
