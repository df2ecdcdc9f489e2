import logging
from math import fsum

import mpmath
import numpy as np

from qform_pipeline.arithmetic.root_counts import prime_root_counts, rho
from qform_pipeline.arithmetic.sieve_tables import list_primes
from qform_pipeline.composition import CompositionContext
from qform_pipeline.errors import ValidationError
from qform_pipeline.forms import Form

logger = logging.getLogger(__name__)

PRECISION = 30

DEFAULT_PRIME_BOUND = 10**6


def euler_product(
    F: Form, q: int, excluded: int, prime_bound: int, complete_excluded: bool
) -> tuple[float, float]:
    """
    Partial Euler product over primes up to ``prime_bound`` with a tail estimate.

    Primes dividing ``q`` or at most ``excluded`` contribute ``(1 - 1/p)^-1``
    when ``complete_excluded`` is set and nothing otherwise. The tail estimate
    is the distance between the partial products at ``prime_bound / 2`` and
    ``prime_bound``.
    """

    if q < 1 or prime_bound < 2:
        raise ValidationError(f"q [ {q} ] and prime bound [ {prime_bound} ] must be positive")

    primes = list_primes(prime_bound)
    skipped = (q % primes == 0) | (primes <= excluded)
    kept = primes[~skipped]
    counts = prime_root_counts(F, kept)

    if np.any(counts == kept):
        logger.info("prime %d divides every value of %s", int(kept[counts == kept][0]), F)
        return 0.0, 0.0

    logs = np.zeros(primes.size, dtype=np.float64)
    logs[~skipped] = np.log1p((1 - counts) / (kept - 1))

    if complete_excluded:
        logs[skipped] = -np.log1p(-1.0 / primes[skipped])

    half = primes <= prime_bound // 2

    with mpmath.workdps(PRECISION):
        value = mpmath.exp(mpmath.mpf(fsum(logs)))
        half_value = mpmath.exp(mpmath.mpf(fsum(logs[half])))

        return float(value), float(abs(value - half_value))


def H_Fq(  # pylint: disable=invalid-name
    F: Form, q: int, context: CompositionContext, prime_bound: int = DEFAULT_PRIME_BOUND
) -> tuple[float, float]:
    """Singular series of ``F`` restricted to ``gcd(N, q P_F) = 1``, with tail estimate."""

    if context.F != F:
        raise ValidationError(f"context built for [ {context.F} ] not [ {F} ]")

    if rho(2, F) == 2:
        return 0.0, 0.0

    return euler_product(F, q, context.CF, prime_bound, complete_excluded=True)


def H_q(  # pylint: disable=invalid-name
    F: Form, q: int, prime_bound: int = DEFAULT_PRIME_BOUND
) -> float:
    """Unrestricted singular series, with primes dividing ``q`` omitted."""

    value, _ = euler_product(F, q, 0, prime_bound, complete_excluded=False)
    return value
