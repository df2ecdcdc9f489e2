from math import gcd
from typing import Optional

import numpy as np
from sympy import factorint, legendre_symbol

from qform_pipeline.arithmetic.sieve_tables import SieveTables
from qform_pipeline.errors import ValidationError
from qform_pipeline.forms import Form

BRUTE_FORCE_LIMIT = 10**6


def count_quadratic_roots(c2: int, c1: int, c0: int, prime: int, exponent: int) -> int:
    """
    Count ``nu`` modulo ``prime^exponent`` with ``c2 nu^2 + c1 nu + c0 = 0``.

    Roots are lifted one power of ``prime`` at a time from the roots modulo ``prime``.
    """

    def value(nu: int) -> int:
        return (c2 * nu + c1) * nu + c0

    roots = [nu for nu in range(prime) if value(nu) % prime == 0]
    modulus = prime

    for _ in range(exponent - 1):
        next_modulus = modulus * prime
        roots = [
            root + step * modulus
            for root in roots
            for step in range(prime)
            if value(root + step * modulus) % next_modulus == 0
        ]
        modulus = next_modulus

    return len(roots)


def _factorize(d: int, tables: Optional[SieveTables]) -> dict[int, int]:
    if tables is not None and d <= tables.limit:
        return tables.factorize(d)

    return {int(prime): int(exponent) for prime, exponent in factorint(d).items()}


def prime_power_roots(c2: int, c1: int, c0: int, prime: int, exponent: int) -> int:
    """Root count modulo a prime power, by the Legendre symbol when the roots are simple."""

    disc = c1 * c1 - 4 * c2 * c0

    if prime != 2 and c2 % prime != 0 and disc % prime != 0:
        return 1 + legendre_symbol(disc % prime, prime)

    return count_quadratic_roots(c2, c1, c0, prime, exponent)


def power_mod(base: np.ndarray, exponent: np.ndarray, modulus: np.ndarray) -> np.ndarray:
    """Elementwise ``base^exponent mod modulus`` for moduli below ``2^31``."""

    result = np.ones_like(modulus)
    base = base % modulus
    exponent = exponent.copy()

    while np.any(exponent > 0):
        odd = (exponent & 1) == 1
        result[odd] = result[odd] * base[odd] % modulus[odd]
        base = base * base % modulus
        exponent >>= 1

    return result


def prime_root_counts(F: Form, primes: np.ndarray) -> np.ndarray:
    """
    Values ``rho(p)`` for an array of primes.

    Away from ``2 gamma Delta`` the count is ``1 + (D / p)``, evaluated by Euler's
    criterion for all primes at once. The remaining primes are counted one by one.
    """

    primes = np.asarray(primes, dtype=np.int64)
    disc = F.discriminant
    regular = (primes != 2) & (F.c % primes != 0) & (disc % primes != 0)

    counts = np.empty(primes.size, dtype=np.int64)
    regular_primes = primes[regular]
    symbol = power_mod(disc % regular_primes, (regular_primes - 1) // 2, regular_primes)
    counts[regular] = np.where(symbol == 1, 2, 0)

    for index in np.flatnonzero(~regular):
        counts[index] = prime_power_roots(F.c, F.b, F.a, int(primes[index]), 1)

    return counts


def rho(d: int, F: Form, tables: Optional[SieveTables] = None) -> int:
    """Number of ``nu`` modulo ``d`` with ``F(1, nu) = 0 (mod d)``."""

    if d < 1:
        raise ValidationError(f"rho undefined at [ {d} ]")

    count = 1

    for prime, exponent in _factorize(d, tables).items():
        count *= prime_power_roots(F.c, F.b, F.a, prime, exponent)

        if count == 0:
            break

    return count


def rho_ab(d: int, a: int, b: int, F: Form, tables: Optional[SieveTables] = None) -> int:
    """Number of ``nu`` modulo ``d`` with ``F(b, nu) = a (mod d)``."""

    if d < 1:
        raise ValidationError(f"rho undefined at [ {d} ]")

    c2, c1, c0 = F.c, F.b * b, F.a * b * b - a

    if d <= BRUTE_FORCE_LIMIT:
        nu = np.arange(d, dtype=np.int64)
        values = (c2 % d) * (nu * nu % d) % d + (c1 % d) * nu % d + c0 % d
        return int(np.count_nonzero(values % d == 0))

    count = 1

    for prime, exponent in _factorize(d, tables).items():
        count *= prime_power_roots(c2, c1, c0, prime, exponent)

        if count == 0:
            break

    return count


def is_obstructed(F: Form, prime: int) -> bool:
    """Check whether ``prime`` divides ``2 gamma Delta``."""

    return gcd(2 * F.c * F.discriminant, prime) != 1
