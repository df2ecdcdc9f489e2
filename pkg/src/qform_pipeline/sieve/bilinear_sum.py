from math import floor, fsum, log
from typing import Optional

import numpy as np

from qform_pipeline.arithmetic import DirichletCharacter, SieveTables
from qform_pipeline.composition import CompositionContext
from qform_pipeline.errors import ValidationError
from qform_pipeline.forms import Form
from qform_pipeline.sieve.lambda_spec import LambdaSpec
from qform_pipeline.sieve.lattice_sums import LatticeSums, complex_fsum


def large_divisor_weight(d: int, Z: float, tables: SieveTables) -> float:
    """Sum of ``Lambda(c)`` over divisors ``c > Z`` of ``d``."""

    terms = []

    for prime, exponent in tables.factorize(d).items():
        power = 1

        for _ in range(exponent):
            power *= prime

            if power > Z:
                terms.append(log(prime))

    return fsum(terms)


def bilinear_B(  # pylint: disable=invalid-name,too-many-arguments
    F: Form,
    X: int,
    Y: float,
    Z: float,
    chi: Optional[DirichletCharacter],
    lam: LambdaSpec,
    context: CompositionContext,
    tables: SieveTables,
    sums: Optional[LatticeSums] = None,
) -> complex:
    """
    Type II sum over ``N = b d <= X`` with ``b > Y``, Moebius weights on ``b``
    and the divisors ``c > Z`` of ``d`` weighted by von Mangoldt.

    The sum is taken over ``d`` first, with the ``b`` range vectorized.
    """

    if Y <= 0 or Z <= 0:
        raise ValidationError(f"Y [ {Y} ] and Z [ {Z} ] must be positive")

    if sums is None:
        sums = LatticeSums(F, X, lam, context, tables, chi=chi)

    if Y >= X or Z >= X:
        return 0j

    first_b = floor(Y) + 1
    weights = sums.weights
    totals = []

    for d in range(2, X // first_b + 1):
        inner = large_divisor_weight(d, Z, tables)

        if inner == 0.0:
            continue

        b_values = np.arange(first_b, X // d + 1, dtype=np.int64)
        signed = tables.mu[b_values].astype(np.float64) * weights[b_values * d]
        totals.append(inner * complex_fsum(signed))

    return complex_fsum(np.array(totals, dtype=np.complex128))
