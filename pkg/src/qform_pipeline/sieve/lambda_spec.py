from dataclasses import dataclass
from math import log
from typing import Optional

import numpy as np
from sympy import isprime

from qform_pipeline.arithmetic import SieveTables, von_mangoldt
from qform_pipeline.errors import ValidationError

KINDS = ("one", "von_mangoldt", "prime", "table")


@dataclass(frozen=True)
class LambdaSpec:
    """
    Weight sequence supported on the positive integers.

    The weight vanishes at ``ell <= 0`` and, when ``modulus > 1``, off the
    class ``ell = residue (mod modulus)``.
    """

    kind: str = "one"
    """Sequence kind, one of ``one``, ``von_mangoldt``, ``prime`` or ``table``."""

    table: tuple[float, ...] = ()
    """Values indexed by ell for the ``table`` kind, zero past the end."""

    modulus: int = 1
    """Modulus of the congruence restriction on ell."""

    residue: int = 0
    """Residue of the congruence restriction on ell."""

    log_power: float = 0.0
    """Exponent A of the growth bound ``C log^A ell``."""

    bound_constant: float = 1.0
    """Constant C of the growth bound ``C log^A ell``."""

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValidationError(f"lambda kind [ {self.kind} ] not in {KINDS}")

        if self.kind == "table" and len(self.table) == 0:
            raise ValidationError("lambda kind [ table ] needs a non-empty table")

        if self.modulus < 1:
            raise ValidationError(f"lambda modulus [ {self.modulus} ] must be positive")

    def __call__(self, ell: int) -> float:
        if ell < 1 or (self.modulus > 1 and (ell - self.residue) % self.modulus != 0):
            return 0.0

        if self.kind == "one":
            return 1.0

        if self.kind == "von_mangoldt":
            return von_mangoldt(ell)

        if self.kind == "prime":
            return 1.0 if isprime(ell) else 0.0

        return float(self.table[ell]) if ell < len(self.table) else 0.0

    def values(self, ells: np.ndarray, tables: Optional[SieveTables] = None) -> np.ndarray:
        """Vectorized weights, read from ``tables`` when they cover every entry."""

        ells = np.asarray(ells, dtype=np.int64)

        if tables is None or len(ells) == 0 or ells.max() > tables.limit or self.kind == "table":
            return np.array([self(int(ell)) for ell in ells], dtype=np.float64)

        clipped = np.clip(ells, 0, tables.limit)

        if self.kind == "one":
            weights = np.ones(len(ells), dtype=np.float64)
        elif self.kind == "von_mangoldt":
            weights = tables.vm[clipped].copy()
        else:
            weights = ((clipped >= 2) & (tables.spf[clipped] == clipped)).astype(np.float64)

        weights[ells < 1] = 0.0

        if self.modulus > 1:
            weights[(ells - self.residue) % self.modulus != 0] = 0.0

        return weights

    def check_bound(self, limit: int) -> bool:
        """Check ``|lambda(ell)| <= C max(1, log ell)^A`` for ``1 <= ell <= limit``."""

        for ell in range(1, limit + 1):
            if abs(self(ell)) > self.bound_constant * max(1.0, log(ell)) ** self.log_power:
                return False

        return True

    @classmethod
    def random_table(
        cls, size: int, seed: int, low: int = -3, high: int = 3, integer: bool = True
    ) -> "LambdaSpec":
        """Random table weights, integers in ``[low, high]`` or uniform reals."""

        rng = np.random.default_rng(seed)

        if integer:
            values = rng.integers(low, high + 1, size=size)
        else:
            values = rng.uniform(low, high, size=size)

        bound = float(max(abs(low), abs(high)))
        table = tuple(float(value) for value in values)

        return cls(kind="table", table=table, bound_constant=bound)

    @classmethod
    def from_kind(
        cls, kind: str, modulus: int = 1, residue: int = 0, seed: int = 0, size: int = 0
    ) -> "LambdaSpec":
        """Build weights from flat configuration values, drawing a table when asked."""

        if kind == "table":
            table = cls.random_table(size, seed)
            return cls(
                kind="table",
                table=table.table,
                modulus=modulus,
                residue=residue,
                bound_constant=table.bound_constant,
            )

        return cls(kind=kind, modulus=modulus, residue=residue)
