from math import gcd
from typing import NamedTuple

from qform_pipeline.errors import InvariantError, ValidationError
from qform_pipeline.forms import Form, validate_form


class CompositionCoefficients(NamedTuple):
    """Integer coefficients shared by the substitution and its inverse."""

    k: int
    """Quotient ``(B - b) / 2a``."""

    j: int
    """Quotient ``(B - beta) / 2alpha``."""

    l: int
    """Quotient ``((b + beta) B + Delta - b beta) / 4 a alpha``."""

    g: int
    """Half sum ``(b + beta) / 2``."""


def check_composable(form: Form, target: Form, middle: int) -> None:
    """Raise unless ``form`` and ``target`` compose along the middle coefficient."""

    validate_form(form)
    validate_form(target)

    if form.discriminant != target.discriminant:
        raise ValidationError(
            f"forms [ {form} ] and [ {target} ] have different discriminants "
            f"[ {form.discriminant} ] and [ {target.discriminant} ]"
        )

    a, b, alpha, beta = form.a, form.b, target.a, target.b
    delta = -form.discriminant

    if (b + beta) % 2 != 0 or gcd(gcd(a, alpha), (b + beta) // 2) != 1:
        raise ValidationError(f"gcd(a, alpha, (b + beta)/2) != 1 for [ {form} ] and [ {target} ]")

    if (middle - b) % (2 * a) != 0:
        raise ValidationError(f"B [ {middle} ] violates B = b (mod 2a) with a = [ {a} ]")

    if (middle - beta) % (2 * alpha) != 0:
        raise ValidationError(
            f"B [ {middle} ] violates B = beta (mod 2alpha) with alpha = [ {alpha} ]"
        )

    if (middle * middle + delta) % (4 * a * alpha) != 0:
        raise ValidationError(f"B [ {middle} ] violates B^2 = -Delta (mod 4 a alpha)")


def dirichlet_compose(form: Form, target: Form, middle: int) -> Form:
    """
    Compose ``form`` with ``target`` along the common middle coefficient ``B``.

    Returns ``(a alpha, B, (B^2 + Delta) / (4 a alpha))``, which has the same
    discriminant as both inputs.
    """

    check_composable(form, target, middle)

    product = form.a * target.a
    composite = Form(product, middle, (middle * middle - form.discriminant) // (4 * product))

    if composite.discriminant != form.discriminant:
        raise InvariantError(f"composite [ {composite} ] changed discriminant")

    return composite


def composition_coefficients(form: Form, target: Form, middle: int) -> CompositionCoefficients:
    a, b, alpha, beta = form.a, form.b, target.a, target.b
    delta = -form.discriminant

    numerator = (b + beta) * middle + delta - b * beta

    if (
        (middle - b) % (2 * a) != 0
        or (middle - beta) % (2 * alpha) != 0
        or numerator % (4 * a * alpha) != 0
    ):
        raise InvariantError(f"B [ {middle} ] is inconsistent with [ {form} ] and [ {target} ]")

    return CompositionCoefficients(
        k=(middle - b) // (2 * a),
        j=(middle - beta) // (2 * alpha),
        l=numerator // (4 * a * alpha),
        g=(b + beta) // 2,
    )


def wz_substitution(
    form: Form, target: Form, middle: int, u: int, v: int, x: int, y: int
) -> tuple[int, int]:
    """
    Apply the bilinear substitution underlying composition.

    The returned ``(W, Z)`` satisfy ``form(u, v) * target(x, y) == composite(W, Z)``.
    """

    k, j, l, g = composition_coefficients(form, target, middle)

    w_value = (u - k * v) * x - (j * u + l * v) * y
    z_value = target.a * v * x + (form.a * u + g * v) * y

    return w_value, z_value


def reconstruct_representation(
    form: Form, target: Form, middle: int, u: int, v: int, w: int, z: int
) -> tuple[int, int]:
    """Invert :py:func:`wz_substitution` for a fixed ``(u, v)`` with ``form(u, v) = m``."""

    k, j, l, g = composition_coefficients(form, target, middle)

    x = (form.a * u + g * v) * w + (j * u + l * v) * z
    y = -target.a * v * w + (u - k * v) * z

    return x, y
