import re
from dataclasses import dataclass
from math import gcd
from typing import Sequence, Union

from qform_pipeline.errors import ValidationError

FORM_PATTERN = r"^\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?$"


@dataclass(frozen=True, order=True)
class Form:
    """Integral binary quadratic form ``a*x^2 + b*x*y + c*y^2``."""

    a: int
    """Coefficient of x^2."""

    b: int
    """Coefficient of x*y."""

    c: int
    """Coefficient of y^2."""

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    @property
    def is_positive_definite(self) -> bool:
        return self.a > 0 and self.discriminant < 0

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __call__(self, x: int, y: int) -> int:
        return self.evaluate(x, y)

    def __str__(self) -> str:
        return format_form(self)


def discriminant(form: Form) -> int:
    return form.discriminant


def validate_discriminant(disc: int) -> None:
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValidationError(f"discriminant [ {disc} ] is not a negative discriminant")


def validate_form(form: Form) -> None:
    """Raise if the form is not primitive and positive definite."""

    if not form.is_positive_definite:
        raise ValidationError(f"form [ {form} ] is not positive definite")

    if not form.is_primitive:
        raise ValidationError(f"form [ {form} ] is not primitive")


def parse_form(value: Union[str, Sequence[int], Form]) -> Form:
    """
    Parse a form from ``"a,b,c"``, ``"(a,b,c)"`` or a three-element sequence.
    """

    if isinstance(value, Form):
        return value

    if isinstance(value, str):
        match = re.match(FORM_PATTERN, value.strip())

        if match is None:
            raise ValidationError(f"cannot parse form from [ {value} ]")

        return Form(*(int(group) for group in match.groups()))

    coefficients = list(value)

    if len(coefficients) != 3:
        raise ValidationError(f"form needs three coefficients, got [ {len(coefficients)} ]")

    return Form(*(int(coefficient) for coefficient in coefficients))


def format_form(form: Form) -> str:
    return f"({form.a},{form.b},{form.c})"
