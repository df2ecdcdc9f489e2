from dataclasses import dataclass
from math import gcd

from qform_pipeline.errors import ValidationError


@dataclass(frozen=True)
class UnimodularMap:
    """
    Integer matrix ``[[p, q], [r, s]]`` with determinant 1.

    The map acts on column vectors, sending ``(x, y)`` to ``(p*x + q*y, r*x + s*y)``.
    """

    p: int

    q: int

    r: int

    s: int

    def __post_init__(self) -> None:
        if self.p * self.s - self.q * self.r != 1:
            raise ValidationError(f"map [ {self.as_tuple()} ] does not have determinant 1")

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return (self.p * x + self.q * y, self.r * x + self.s * y)

    def inverse(self) -> "UnimodularMap":
        return UnimodularMap(self.s, -self.q, -self.r, self.p)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)


IDENTITY = UnimodularMap(1, 0, 0, 1)


def compose_maps(first: UnimodularMap, second: UnimodularMap) -> UnimodularMap:
    """Matrix product ``first * second``, so ``second`` acts on coordinates first."""

    return UnimodularMap(
        first.p * second.p + first.q * second.r,
        first.p * second.q + first.q * second.s,
        first.r * second.p + first.s * second.r,
        first.r * second.q + first.s * second.s,
    )


def complete_to_unimodular(p: int, r: int) -> UnimodularMap:
    """
    Complete a primitive column ``(p, r)`` to a map ``[[p, q], [r, s]]``.

    The second column is normalized so that ``s`` is the least non-negative
    solution of ``p*s = 1 (mod |r|)``. A zero ``r`` requires ``p = +-1``.
    """

    if gcd(p, r) != 1:
        raise ValidationError(f"column [ ({p}, {r}) ] is not primitive")

    if r == 0:
        return UnimodularMap(p, 0, 0, p)

    modulus = abs(r)
    s = pow(p, -1, modulus) if modulus > 1 else 0
    q = (p * s - 1) // r

    return UnimodularMap(p, q, r, s)
