from math import isqrt
from typing import Callable, Iterator, Optional

import numpy as np

from qform_pipeline.errors import ValidationError
from qform_pipeline.forms import Form

EllRange = tuple[int, int]

Visitor = Callable[[int, np.ndarray, np.ndarray], None]


def ell_bound(F: Form, X: int) -> int:
    """Largest ``|ell|`` with ``F(ell, m) <= X`` for some ``m``."""

    delta = -F.discriminant
    return isqrt(4 * F.c * max(X, 0) // delta)


def m_bounds(F: Form, X: int, ell: int) -> Optional[tuple[int, int]]:
    """Inclusive range of ``m`` with ``F(ell, m) <= X``, or None when empty."""

    radicand = 4 * F.c * X - (-F.discriminant) * ell * ell

    if radicand < 0:
        return None

    root = isqrt(radicand)
    low = -((F.b * ell + root) // (2 * F.c))
    high = (root - F.b * ell) // (2 * F.c)

    return (low, high) if low <= high else None


def lattice_iterate(
    F: Form,
    X: int,
    visitor: Visitor,
    ell_range: Optional[EllRange] = None,
    include_origin: bool = False,
) -> None:
    """
    Visit every ``(ell, m)`` with ``1 <= F(ell, m) <= X`` exactly once.

    Pairs are grouped by ``ell`` in ascending order and passed to the visitor
    as ``visitor(ell, m_values, n_values)`` with ``m`` ascending. An
    ``ell_range`` restricts to ``low <= ell <= high``. The origin is only
    visited when ``include_origin`` is set.
    """

    if not F.is_positive_definite:
        raise ValidationError(f"form [ {F} ] is not positive definite")

    bound = ell_bound(F, X)
    low, high = (-bound, bound) if ell_range is None else ell_range

    for ell in range(max(low, -bound), min(high, bound) + 1):
        limits = m_bounds(F, X, ell)

        if limits is None:
            continue

        m_values = np.arange(limits[0], limits[1] + 1, dtype=np.int64)
        n_values = (F.a * ell * ell) + (F.b * ell) * m_values + F.c * m_values * m_values
        keep = n_values >= 1

        if include_origin:
            keep |= (m_values == 0) & (ell == 0)

        if np.any(keep):
            visitor(ell, m_values[keep], n_values[keep])


def lattice_points(F: Form, X: int) -> Iterator[tuple[int, int, int]]:
    """Scalar ``(ell, m, N)`` triples in the order of :py:func:`lattice_iterate`."""

    points: list[tuple[int, int, int]] = []

    def collect(ell: int, m_values: np.ndarray, n_values: np.ndarray) -> None:
        points.extend((ell, int(m), int(n)) for m, n in zip(m_values, n_values))

    lattice_iterate(F, X, collect)
    return iter(points)


def ell_stripes(F: Form, X: int, partitions: int) -> list[EllRange]:
    """Split the positive ``ell`` range into contiguous stripes."""

    if partitions < 1:
        raise ValidationError(f"partitions [ {partitions} ] must be positive")

    bound = ell_bound(F, X)

    if bound < 1:
        return [(1, 0)]

    edges = np.linspace(0, bound, min(partitions, bound) + 1).round().astype(int)
    return [(int(edges[i]) + 1, int(edges[i + 1])) for i in range(len(edges) - 1)]
