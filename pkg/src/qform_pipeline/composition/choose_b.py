from typing import Sequence

from sympy.ntheory.modular import solve_congruence

from qform_pipeline.errors import InvariantError
from qform_pipeline.forms import Form


def choose_B(  # pylint: disable=invalid-name
    SF: Sequence[Form], F: Form, SFstar: Sequence[Form] = ()
) -> int:
    """
    Find the least non-negative ``B`` serving as a common middle coefficient.

    ``B`` satisfies ``B = b (mod 2a)`` for every form of ``SF`` and ``SFstar``
    and ``B = beta (mod 2alpha)``. The quadratic conditions then follow from
    the coprimality of the first coefficients and are checked afterwards.
    """

    forms = [*SF, F, *SFstar]
    congruences = [(form.b, 2 * form.a) for form in forms]
    solution = solve_congruence(*congruences, symmetric=False)

    if solution is None:
        moduli = ", ".join(f"{residue} mod {modulus}" for residue, modulus in congruences)
        raise InvariantError(f"no common B for congruences [ {moduli} ]")

    residue, modulus = solution
    middle = int(residue) % int(modulus)
    delta = -F.discriminant

    for form in SF:
        if (middle * middle + delta) % (4 * form.a * F.a) != 0:
            raise InvariantError(
                f"B [ {middle} ] fails B^2 = -Delta (mod 4 a alpha) for [ {form} ]"
            )

        for nested in SFstar:
            if (middle * middle + delta) % (4 * form.a * nested.a * F.a) != 0:
                raise InvariantError(
                    f"B [ {middle} ] fails the nested condition for [ {form} ] and [ {nested} ]"
                )

    return middle
