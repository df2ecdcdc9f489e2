from math import fsum, gcd
from typing import Optional

import numpy as np

from qform_pipeline.arithmetic import SieveTables
from qform_pipeline.forms import Form, represent_number
from qform_pipeline.sieve.lambda_spec import LambdaSpec
from qform_pipeline.sieve.lattice import EllRange, ell_bound, lattice_iterate


def admissible_mask(F: Form, ell: int, m_values: np.ndarray) -> np.ndarray:
    """Mask of ``gcd(ell, gamma m) = 1``."""

    return np.gcd(ell, F.c * m_values) == 1


def positive_ell_range(F: Form, X: int, ell_range: Optional[EllRange] = None) -> EllRange:
    bound = ell_bound(F, X)

    if ell_range is None:
        return (1, bound)

    return (max(1, ell_range[0]), min(bound, ell_range[1]))


def a_N(  # pylint: disable=invalid-name
    F: Form,
    X: int,
    lam: LambdaSpec,
    tables: Optional[SieveTables] = None,
    ell_range: Optional[EllRange] = None,
) -> np.ndarray:
    """
    Dense array of ``a_N`` for ``0 <= N <= X``.

    ``a_N`` sums ``lambda(ell)`` over representations ``F(ell, m) = N`` with
    ``ell >= 1`` and ``gcd(ell, gamma m) = 1``.
    """

    low, high = positive_ell_range(F, X, ell_range)
    ells = np.arange(low, high + 1, dtype=np.int64)
    weights = dict(zip(ells.tolist(), lam.values(ells, tables).tolist()))

    n_chunks: list[np.ndarray] = []
    weight_chunks: list[np.ndarray] = []

    def collect(ell: int, m_values: np.ndarray, n_values: np.ndarray) -> None:
        weight = weights.get(ell, 0.0)

        if weight == 0.0:
            return

        n_admissible = n_values[admissible_mask(F, ell, m_values)]
        n_chunks.append(n_admissible)
        weight_chunks.append(np.full(len(n_admissible), weight))

    lattice_iterate(F, X, collect, ell_range=(low, high))

    if not n_chunks:
        return np.zeros(X + 1, dtype=np.float64)

    return np.bincount(
        np.concatenate(n_chunks), weights=np.concatenate(weight_chunks), minlength=X + 1
    )


def representation_weight(F: Form, N: int, lam: LambdaSpec) -> float:
    """Single ``a_N`` from the representations of ``N``."""

    return fsum(
        lam(ell) for ell, m in represent_number(F, N, primitive=False) if gcd(ell, F.c * m) == 1
    )
