import json
from dataclasses import dataclass, field
from importlib.metadata import PackageNotFoundError, version
from math import gcd
from typing import Any, Optional

import pandas as pd

from qform_pipeline.errors import ValidationError
from qform_pipeline.forms import Form, format_form
from qform_pipeline.sieve.lambda_spec import LambdaSpec

TREND_DIVISORS = (100, 10, 1)


def package_version() -> str:
    try:
        return version("qform-sieve-pipeline")
    except PackageNotFoundError:
        return "0.0.0"


@dataclass(frozen=True)
class ExperimentConfig:
    """Inputs shared by the sieve experiments."""

    F: Form
    """Positive definite form whose values are sieved."""

    X: int
    """Upper bound on form values."""

    q: int = 1
    """Modulus of the congruence conditions and characters."""

    a: int = 1
    """Residue class of the form values modulo q."""

    b: int = 1
    """Residue class of ell modulo q."""

    lam: LambdaSpec = LambdaSpec()
    """Weights on the first coordinate."""

    D: Optional[int] = None
    """Fixed level for level experiments, capped at each grid bound, or None for ``X^theta``."""

    Y: Optional[float] = None
    """Fixed lower cut on b in bilinear sums, or None for ``X^theta_y``."""

    Z: Optional[float] = None
    """Fixed lower cut on c in bilinear sums, or None for ``X^theta_z``."""

    character: int = 0
    """Index into the characters modulo q, the principal character being 0."""

    theta: float = 0.5
    """Exponent of the level ``D = X^theta`` in level experiments."""

    theta_y: float = 0.25
    """Exponent of ``Y = X^theta_y`` in bilinear experiments."""

    theta_z: float = 0.25
    """Exponent of ``Z = X^theta_z`` in bilinear experiments."""

    prime_bound: int = 10**6
    """Largest prime in truncated Euler products."""

    nested: bool = True
    """Whether the composition context includes the nested representative family."""

    trend: tuple[int, ...] = TREND_DIVISORS
    """Divisors of X giving the trend grid, largest divisor first."""

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValidationError(f"q [ {self.q} ] must be positive")

        if self.X < 1 or self.X < self.q:
            raise ValidationError(f"X [ {self.X} ] must be at least max(1, q) [ {self.q} ]")

        if self.D is not None and not 1 <= self.D <= self.X:
            raise ValidationError(f"D [ {self.D} ] must lie in [ 1, X ]")

        for name in ("Y", "Z"):
            cut = getattr(self, name)

            if cut is not None and cut <= 1:
                raise ValidationError(f"{name} [ {cut} ] must exceed 1")

        if any(divisor < 1 for divisor in self.trend):
            raise ValidationError(f"trend divisors [ {self.trend} ] must be positive")

    def require_coprime(self, *names: str) -> None:
        for name in names:
            if gcd(getattr(self, name), self.q) != 1:
                raise ValidationError(f"gcd({name}, q) != 1 for {name} [ {getattr(self, name)} ]")

    def trend_grid(self) -> list[int]:
        return sorted({max(self.X // divisor, 1) for divisor in self.trend})

    def to_dict(self) -> dict[str, Any]:
        return {
            "F": format_form(self.F),
            "X": self.X,
            "q": self.q,
            "a": self.a,
            "b": self.b,
            "lambda": {
                "kind": self.lam.kind,
                "modulus": self.lam.modulus,
                "residue": self.lam.residue,
                "table_size": len(self.lam.table),
            },
            "D": self.D,
            "Y": self.Y,
            "Z": self.Z,
            "character": self.character,
            "theta": self.theta,
            "theta_y": self.theta_y,
            "theta_z": self.theta_z,
            "prime_bound": self.prime_bound,
            "nested": self.nested,
            "trend": list(self.trend),
        }


def encode_value(value: Any) -> Any:
    """Make results JSON friendly, writing complex numbers as ``[re, im]``."""

    if isinstance(value, complex):
        return [value.real, value.imag]

    if isinstance(value, dict):
        return {str(key): encode_value(item) for key, item in value.items()}

    if isinstance(value, (list, tuple)):
        return [encode_value(item) for item in value]

    if hasattr(value, "item"):
        return encode_value(value.item())

    return value


@dataclass
class ExperimentReport:
    """Results of one experiment with the echoed configuration."""

    experiment: str

    config: dict[str, Any]

    results: dict[str, Any]

    trend: list[dict[str, Any]] = field(default_factory=list)

    runtime_seconds: float = 0.0

    version: str = field(default_factory=package_version)

    def to_dict(self, deterministic: bool = False) -> dict[str, Any]:
        contents = {
            "experiment": self.experiment,
            "version": self.version,
            "config": encode_value(self.config),
            "results": encode_value(self.results),
            "trend": encode_value(self.trend),
        }

        if not deterministic:
            contents["runtime_seconds"] = self.runtime_seconds

        return contents

    def to_json(self, deterministic: bool = False) -> str:
        return json.dumps(self.to_dict(deterministic), sort_keys=True, indent=2)

    def to_dataframe(self) -> pd.DataFrame:
        """Flat table of the trend rows, or a single row of scalar results."""

        rows = self.trend if self.trend else [self.results]
        flat_rows = []

        for row in rows:
            flat_row: dict[str, Any] = {"experiment": self.experiment}

            for key, value in row.items():
                if isinstance(value, complex):
                    flat_row[f"{key}_real"] = value.real
                    flat_row[f"{key}_imag"] = value.imag
                elif not isinstance(value, (dict, list, tuple)):
                    flat_row[key] = value

            flat_rows.append(flat_row)

        return pd.DataFrame(flat_rows)
