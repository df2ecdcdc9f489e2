import json
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Optional

from sympy import factorint, primorial

from qform_pipeline.forms import Form, UnimodularMap, parse_form

PF_DECIMAL_LIMIT = 10**5


@dataclass(frozen=True)
class Representative:
    """Class representative of prime first coefficient, with its derivation."""

    form: Form
    """Representative form, whose first coefficient is 1 or a prime."""

    reduced: Form
    """Reduced form of the class."""

    point: tuple[int, int]
    """Primitive point at which the reduced form takes the first coefficient."""

    transformation: UnimodularMap
    """Map with ``transform(reduced, transformation) == form``."""


@dataclass(frozen=True)
class CompositionContext:
    """Everything needed to decompose representations by a fixed form ``F``."""

    F: Form

    delta: int

    representatives: tuple[Representative, ...]

    nested_representatives: tuple[Representative, ...]

    B: int

    QF: int

    CF: int

    @property
    def SF(self) -> tuple[Form, ...]:
        return tuple(representative.form for representative in self.representatives)

    @property
    def SFstar(self) -> tuple[Form, ...]:
        return tuple(representative.form for representative in self.nested_representatives)

    @cached_property
    def PF(self) -> int:
        return int(primorial(self.CF, nth=False))

    def fstar(self, form: Form) -> Form:
        product = form.a * self.F.a
        return Form(product, self.B, (self.B * self.B + self.delta) // (4 * product))

    def coprime_to_pf(self, n: int) -> bool:
        """Check that ``n`` has no prime factor at most ``CF``."""

        if n == 0:
            return False

        return all(prime > self.CF for prime in factorint(abs(n)))


def _form_to_list(form: Form) -> list[int]:
    return [form.a, form.b, form.c]


def _representative_to_dict(representative: Representative) -> dict[str, Any]:
    return {
        "form": _form_to_list(representative.form),
        "reduced": _form_to_list(representative.reduced),
        "point": list(representative.point),
        "transformation": list(representative.transformation.as_tuple()),
    }


def _representative_from_dict(contents: dict[str, Any]) -> Representative:
    return Representative(
        form=parse_form(contents["form"]),
        reduced=parse_form(contents["reduced"]),
        point=(int(contents["point"][0]), int(contents["point"][1])),
        transformation=UnimodularMap(*(int(entry) for entry in contents["transformation"])),
    )


def context_to_dict(context: CompositionContext) -> dict[str, Any]:
    pf: Optional[str] = str(context.PF) if context.CF <= PF_DECIMAL_LIMIT else None

    return {
        "F": _form_to_list(context.F),
        "Delta": context.delta,
        "SF": [_representative_to_dict(rep) for rep in context.representatives],
        "SFstar": [_representative_to_dict(rep) for rep in context.nested_representatives],
        "B": context.B,
        "QF": context.QF,
        "CF": context.CF,
        "PF": pf,
    }


def context_from_dict(contents: dict[str, Any]) -> CompositionContext:
    return CompositionContext(
        F=parse_form(contents["F"]),
        delta=int(contents["Delta"]),
        representatives=tuple(_representative_from_dict(rep) for rep in contents["SF"]),
        nested_representatives=tuple(_representative_from_dict(rep) for rep in contents["SFstar"]),
        B=int(contents["B"]),
        QF=int(contents["QF"]),
        CF=int(contents["CF"]),
    )


def context_to_json(context: CompositionContext) -> str:
    return json.dumps(context_to_dict(context), sort_keys=True, indent=2)


def context_from_json(contents: str) -> CompositionContext:
    return context_from_dict(json.loads(contents))
