from functools import lru_cache
from math import log

from sympy import factorint

from qform_pipeline.errors import ValidationError


def mobius(n: int) -> int:
    if n < 1:
        raise ValidationError(f"mobius undefined at [ {n} ]")

    exponents = factorint(n).values()

    if any(exponent > 1 for exponent in exponents):
        return 0

    return -1 if len(exponents) % 2 else 1


@lru_cache(maxsize=1 << 16)
def von_mangoldt(n: int) -> float:
    """Von Mangoldt function, taken as zero for ``n < 2``."""

    if n < 2:
        return 0.0

    factors = factorint(n)

    if len(factors) != 1:
        return 0.0

    return log(next(iter(factors)))
