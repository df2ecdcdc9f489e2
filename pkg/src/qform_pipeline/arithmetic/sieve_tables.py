import struct
from dataclasses import dataclass
from math import isqrt

import numpy as np

from qform_pipeline.errors import ValidationError

MAGIC = b"QFSIEVE1"

BYTES_PER_ENTRY = 8 + 1 + 8

MAX_LIMIT = 2**34

DEFAULT_MEMORY_BUDGET = 2**32


def list_primes(limit: int) -> np.ndarray:
    """Primes up to and including ``limit``, by a numpy sieve of Eratosthenes."""

    if limit < 2:
        return np.zeros(0, dtype=np.int64)

    composite = np.zeros(limit + 1, dtype=bool)
    composite[:2] = True

    for prime in range(2, isqrt(limit) + 1):
        if not composite[prime]:
            composite[prime * prime :: prime] = True

    return np.flatnonzero(~composite).astype(np.int64)


@dataclass(frozen=True)
class SieveTables:
    """Arithmetic tables indexed by ``n`` in ``[0, limit]``."""

    limit: int
    """Largest tabulated integer."""

    spf: np.ndarray
    """Smallest prime factor, with ``spf[0] = 0`` and ``spf[1] = 1``."""

    mu: np.ndarray
    """Moebius function, with ``mu[0] = 0``."""

    vm: np.ndarray
    """Von Mangoldt function, zero off prime powers."""

    def is_prime(self, n: int) -> bool:
        return n >= 2 and int(self.spf[n]) == n

    def primes(self) -> np.ndarray:
        indices = np.arange(self.limit + 1)
        return indices[(indices >= 2) & (self.spf == indices)]

    def factorize(self, n: int) -> dict[int, int]:
        """Prime factorization of ``1 <= n <= limit`` read off the smallest prime factors."""

        if not 1 <= n <= self.limit:
            raise ValidationError(f"n [ {n} ] outside table range [ 1, {self.limit} ]")

        factors: dict[int, int] = {}

        while n > 1:
            prime = int(self.spf[n])
            factors[prime] = factors.get(prime, 0) + 1
            n //= prime

        return factors

    def coprime_mask(self, values: np.ndarray, bound: int) -> np.ndarray:
        """Mask of entries with no prime factor at most ``bound``."""

        return (values == 1) | (self.spf[values] > bound)


def build_sieve(limit: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> SieveTables:
    """
    Tabulate smallest prime factors, Moebius and von Mangoldt up to ``limit``.
    """

    if not 2 <= limit <= MAX_LIMIT:
        raise ValidationError(f"sieve limit [ {limit} ] outside [ 2, {MAX_LIMIT} ]")

    if (limit + 1) * BYTES_PER_ENTRY > memory_budget:
        raise ValidationError(
            f"sieve limit [ {limit} ] needs [ {(limit + 1) * BYTES_PER_ENTRY} ] bytes, "
            f"over the memory budget [ {memory_budget} ]"
        )

    root = isqrt(limit)
    spf = np.zeros(limit + 1, dtype=np.int64)

    for prime in range(2, root + 1):
        if spf[prime] != 0:
            continue

        multiples = spf[prime * prime :: prime]
        multiples[multiples == 0] = prime

    indices = np.arange(limit + 1, dtype=np.int64)
    unmarked = spf == 0
    spf[unmarked] = indices[unmarked]
    spf[0], spf[1] = 0, 1

    mu = np.ones(limit + 1, dtype=np.int8)
    remainder = indices.copy()

    for prime in range(2, root + 1):
        if spf[prime] != prime:
            continue

        mu[::prime] *= -1
        mu[:: prime * prime] = 0

        power = prime
        while power <= limit:
            remainder[::power] //= prime
            power *= prime

    mu[remainder > 1] *= -1
    mu[0] = 0

    primes = indices[(indices >= 2) & (spf == indices)]
    vm = np.zeros(limit + 1, dtype=np.float64)
    bases = primes.copy()
    powers = primes.copy()

    while powers.size > 0:
        vm[powers] = np.log(bases)
        keep = powers <= limit // bases
        bases = bases[keep]
        powers = powers[keep] * bases

    return SieveTables(limit=limit, spf=spf, mu=mu, vm=vm)


def sieve_to_bytes(tables: SieveTables) -> bytes:
    """Serialize tables as magic, little-endian limit, then the three arrays."""

    return b"".join(
        [
            MAGIC,
            struct.pack("<Q", tables.limit),
            tables.spf.astype("<i8").tobytes(),
            tables.mu.astype("<i1").tobytes(),
            tables.vm.astype("<f8").tobytes(),
        ]
    )


def sieve_from_bytes(contents: bytes) -> SieveTables:
    if contents[: len(MAGIC)] != MAGIC:
        raise ValidationError("sieve table does not start with the expected magic bytes")

    offset = len(MAGIC)
    (limit,) = struct.unpack_from("<Q", contents, offset)
    offset += 8
    size = limit + 1

    if len(contents) != offset + size * BYTES_PER_ENTRY:
        raise ValidationError(
            f"sieve table for limit [ {limit} ] has wrong length [ {len(contents)} ]"
        )

    spf = np.frombuffer(contents, dtype="<i8", count=size, offset=offset).astype(np.int64)
    offset += 8 * size
    mu = np.frombuffer(contents, dtype="<i1", count=size, offset=offset).astype(np.int8)
    offset += size
    vm = np.frombuffer(contents, dtype="<f8", count=size, offset=offset).astype(np.float64)

    return SieveTables(limit=int(limit), spf=spf, mu=mu, vm=vm)
