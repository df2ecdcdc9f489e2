from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import gcd, lcm
from typing import Union

import numpy as np
from sympy import factorint, primitive_root, totient
from sympy.ntheory.modular import crt

from qform_pipeline.errors import ValidationError

MAX_MODULUS = 10**6


@dataclass(frozen=True)
class UnitGroup:
    """Decomposition of ``(Z/qZ)^*`` into cyclic factors with discrete logarithm tables."""

    modulus: int
    """Modulus q."""

    generators: tuple[int, ...]
    """Generator of each cyclic factor, as a residue modulo q."""

    orders: tuple[int, ...]
    """Order of each generator."""

    logs: np.ndarray = field(repr=False, compare=False)
    """Array of shape (q, factors) of discrete logarithms, -1 at non-units."""

    @property
    def exponent(self) -> int:
        return lcm(*self.orders) if self.orders else 1

    @property
    def size(self) -> int:
        return int(np.prod(self.orders, dtype=np.int64)) if self.orders else 1


def _local_factors(prime: int, power: int) -> list[tuple[int, int]]:
    """Generators and orders of the unit group modulo ``prime^power``."""

    modulus = prime**power

    if prime != 2:
        return [(int(primitive_root(modulus)), modulus // prime * (prime - 1))]

    if power == 1:
        return []

    if power == 2:
        return [(modulus - 1, 2)]

    return [(modulus - 1, 2), (5, modulus // 4)]


def unit_group(modulus: int) -> UnitGroup:
    """Build generators and logarithm tables for the units modulo ``modulus``."""

    if not 1 <= modulus <= MAX_MODULUS:
        raise ValidationError(f"modulus [ {modulus} ] outside [ 1, {MAX_MODULUS} ]")

    components = [prime**power for prime, power in sorted(factorint(modulus).items())]
    generators = []
    orders = []

    for index, (prime, power) in enumerate(sorted(factorint(modulus).items())):
        for local_generator, order in _local_factors(prime, power):
            residues = [1] * len(components)
            residues[index] = local_generator
            lifted, _ = crt(components, residues) if len(components) > 1 else (local_generator, 0)
            generators.append(int(lifted) % modulus)
            orders.append(order)

    logs = np.full((modulus, len(generators)), -1, dtype=np.int64)

    for exponents in product(*(range(order) for order in orders)):
        residue = 1

        for generator, exponent in zip(generators, exponents):
            residue = residue * pow(generator, exponent, modulus) % modulus

        logs[residue % modulus] = exponents

    if modulus == 1:
        logs = np.zeros((1, 0), dtype=np.int64)

    return UnitGroup(modulus, tuple(generators), tuple(orders), logs)


@dataclass(frozen=True)
class DirichletCharacter:
    """
    Dirichlet character fixed by one exponent per cyclic factor.

    ``chi(g_i) = exp(2 pi i k_i / s_i)`` for generator ``g_i`` of order ``s_i``.
    """

    group: UnitGroup

    indices: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.group.modulus

    @property
    def is_principal(self) -> bool:
        return not any(self.indices)

    def exponent(self, n: int) -> Union[int, None]:
        """Exponent ``t`` with ``chi(n) = exp(2 pi i t / e)``, or None when ``gcd(n, q) > 1``."""

        if gcd(n, self.modulus) != 1:
            return None

        total_exponent = self.group.exponent
        logs = self.group.logs[n % self.modulus]

        return (
            sum(
                int(index) * (total_exponent // order) * int(log)
                for index, order, log in zip(self.indices, self.group.orders, logs)
            )
            % total_exponent
        )

    @cached_property
    def table(self) -> np.ndarray:
        """Complex values indexed by residue modulo q."""

        total_exponent = self.group.exponent
        scales = np.array(
            [
                index * (total_exponent // order)
                for index, order in zip(self.indices, self.group.orders)
            ],
            dtype=np.int64,
        )
        units = np.gcd(np.arange(self.modulus), self.modulus) == 1
        if len(scales) > 0:
            exponents = (self.group.logs @ scales) % total_exponent
        else:
            exponents = np.zeros(self.modulus, dtype=np.int64)
        values = np.exp(2j * np.pi * exponents / total_exponent)
        values[~units] = 0

        return values

    def __call__(self, n: int) -> complex:
        return complex(self.table[n % self.modulus])

    def values(self, numbers: np.ndarray) -> np.ndarray:
        return self.table[np.asarray(numbers) % self.modulus]

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(
            self.group,
            tuple((-index) % order for index, order in zip(self.indices, self.group.orders)),
        )


def characters_mod(modulus: int) -> list[DirichletCharacter]:
    """All ``phi(q)`` characters modulo ``q``, the principal character first."""

    group = unit_group(modulus)
    return [
        DirichletCharacter(group, tuple(indices))
        for indices in product(*(range(order) for order in group.orders))
    ]


def euler_totient(modulus: int) -> int:
    return int(totient(modulus))
