from math import fsum, gcd, log
from typing import Callable, Optional

import numpy as np

from qform_pipeline.arithmetic import DirichletCharacter, SieveTables, rho
from qform_pipeline.composition import CompositionContext
from qform_pipeline.errors import ValidationError
from qform_pipeline.forms import Form
from qform_pipeline.sieve.lambda_spec import LambdaSpec
from qform_pipeline.sieve.lattice import EllRange, lattice_iterate
from qform_pipeline.sieve.sequences import admissible_mask, positive_ell_range


def complex_fsum(values: np.ndarray) -> complex:
    """Correctly rounded sum of the real and imaginary parts."""

    values = np.asarray(values, dtype=np.complex128)
    return complex(fsum(values.real.tolist()), fsum(values.imag.tolist()))


class LatticeSums:
    """
    Sieve sums of one configuration ``(F, X, lambda, chi)``.

    The lattice is walked once; ``A_d``, ``M_d`` and their remainders are then
    read off for any ``d``. With ``restrict_pf`` set, only ``N`` coprime to
    ``P_F`` contribute; otherwise the sums run over all ``N <= X``.
    """

    def __init__(
        self,
        F: Form,
        X: int,
        lam: LambdaSpec,
        context: CompositionContext,
        tables: SieveTables,
        chi: Optional[DirichletCharacter] = None,
        restrict_pf: bool = True,
        ell_range: Optional[EllRange] = None,
    ) -> None:
        if context.F != F:
            raise ValidationError(f"context built for [ {context.F} ] not [ {F} ]")

        if tables.limit < X:
            raise ValidationError(f"X [ {X} ] exceeds sieve limit [ {tables.limit} ]")

        self.F = F
        self.X = X
        self.context = context
        self.tables = tables
        self.restrict_pf = restrict_pf
        self.modulus = 1 if chi is None else chi.modulus

        numbers = np.arange(X + 1, dtype=np.int64)

        if restrict_pf:
            self.pf_mask = tables.coprime_mask(numbers, context.CF)
        else:
            self.pf_mask = numbers >= 1

        if chi is None:
            self.chi_values = np.ones(X + 1, dtype=np.complex128)
        else:
            self.chi_values = chi.values(numbers)

        low, high = positive_ell_range(F, X, ell_range)
        ells = np.arange(low, high + 1, dtype=np.int64)
        weights = dict(zip(ells.tolist(), lam.values(ells, tables).tolist()))

        self.stripes: list[tuple[int, np.ndarray, np.ndarray]] = []

        def collect(ell: int, m_values: np.ndarray, n_values: np.ndarray) -> None:
            weight = weights.get(ell, 0.0)

            if weight == 0.0:
                return

            mask = admissible_mask(F, ell, m_values) & self.pf_mask[n_values]
            n_kept = n_values[mask]

            if len(n_kept) > 0:
                self.stripes.append((ell, n_kept, weight * self.chi_values[n_kept]))

        lattice_iterate(F, X, collect, ell_range=(low, high))

        self.ells = np.array([ell for ell, _, _ in self.stripes], dtype=np.int64)
        self.ell_sums = np.array(
            [complex_fsum(values) for _, _, values in self.stripes], dtype=np.complex128
        )
        self.weights = self._bincount(lambda _: True)

    def _bincount(self, include: Callable[[int], bool]) -> np.ndarray:
        """Complex ``sum lambda(ell) chi(N)`` per ``N`` over stripes passing ``include``."""

        chosen = [(n_values, values) for ell, n_values, values in self.stripes if include(ell)]

        if not chosen:
            return np.zeros(self.X + 1, dtype=np.complex128)

        n_all = np.concatenate([n_values for n_values, _ in chosen])
        values_all = np.concatenate([values for _, values in chosen])
        real = np.bincount(n_all, weights=values_all.real, minlength=self.X + 1)
        imag = np.bincount(n_all, weights=values_all.imag, minlength=self.X + 1)

        return real + 1j * imag

    def vanishes(self, d: int) -> bool:
        """Check ``gcd(d, q P_F) > 1``, or ``gcd(d, q) > 1`` without the ``P_F`` filter."""

        if d < 1:
            raise ValidationError(f"d [ {d} ] must be positive")

        if gcd(d, self.modulus) > 1:
            return True

        if not self.restrict_pf or d == 1:
            return False

        if d <= self.tables.limit:
            return int(self.tables.spf[d]) <= self.context.CF

        return not self.context.coprime_to_pf(d)

    def A(self, d: int) -> complex:  # pylint: disable=invalid-name
        if self.vanishes(d):
            return 0j

        return complex_fsum(self.weights[d::d])

    def M(self, d: int) -> complex:  # pylint: disable=invalid-name
        if self.vanishes(d):
            return 0j

        roots = rho(d, self.F, self.tables)

        if roots == 0 or len(self.ells) == 0:
            return 0j

        coprime = np.gcd(self.ells, d) == 1
        return complex_fsum(self.ell_sums[coprime]) * roots / d

    def R(self, d: int) -> complex:  # pylint: disable=invalid-name
        return self.A(d) - self.M(d)

    def R_total(self, D: int) -> float:  # pylint: disable=invalid-name
        return fsum(abs(self.R(d)) for d in range(1, D + 1))

    def P(self) -> complex:  # pylint: disable=invalid-name
        return complex_fsum(self.weights * self.tables.vm[: self.X + 1])

    def A_steps(self, d: int) -> np.ndarray:  # pylint: disable=invalid-name
        """``A_d(n)`` for every integer ``0 <= n <= X``."""

        steps = np.zeros(self.X + 1, dtype=np.complex128)

        if not self.vanishes(d):
            steps[d::d] = self.weights[d::d]

        return np.cumsum(steps)

    def M_steps(self, d: int) -> np.ndarray:  # pylint: disable=invalid-name
        """``M_d(n)`` for every integer ``0 <= n <= X``."""

        if self.vanishes(d):
            return np.zeros(self.X + 1, dtype=np.complex128)

        roots = rho(d, self.F, self.tables)
        return np.cumsum(self._bincount(lambda ell: gcd(ell, d) == 1)) * roots / d

    def R_steps(self, d: int) -> np.ndarray:  # pylint: disable=invalid-name
        return self.A_steps(d) - self.M_steps(d)


def _sums(
    F: Form,
    X: int,
    chi: Optional[DirichletCharacter],
    lam: LambdaSpec,
    context: CompositionContext,
    tables: SieveTables,
    restrict_pf: bool,
) -> LatticeSums:
    return LatticeSums(F, X, lam, context, tables, chi=chi, restrict_pf=restrict_pf)


def A_d(  # pylint: disable=invalid-name,too-many-arguments
    F: Form,
    X: int,
    d: int,
    chi: Optional[DirichletCharacter],
    lam: LambdaSpec,
    context: CompositionContext,
    tables: SieveTables,
    restrict_pf: bool = True,
) -> complex:
    """Sum of ``a_N chi(N)`` over ``N <= X`` divisible by ``d``."""

    return _sums(F, X, chi, lam, context, tables, restrict_pf).A(d)


def M_d(  # pylint: disable=invalid-name,too-many-arguments
    F: Form,
    X: int,
    d: int,
    chi: Optional[DirichletCharacter],
    lam: LambdaSpec,
    context: CompositionContext,
    tables: SieveTables,
    restrict_pf: bool = True,
) -> complex:
    """Expected part ``rho(d)/d`` of the sum over ``gcd(ell, gamma m d) = 1``."""

    return _sums(F, X, chi, lam, context, tables, restrict_pf).M(d)


def R_d(  # pylint: disable=invalid-name,too-many-arguments
    F: Form,
    X: int,
    d: int,
    chi: Optional[DirichletCharacter],
    lam: LambdaSpec,
    context: CompositionContext,
    tables: SieveTables,
    restrict_pf: bool = True,
) -> complex:
    return _sums(F, X, chi, lam, context, tables, restrict_pf).R(d)


def R_total(  # pylint: disable=invalid-name,too-many-arguments
    F: Form,
    X: int,
    D: int,
    chi: Optional[DirichletCharacter],
    lam: LambdaSpec,
    context: CompositionContext,
    tables: SieveTables,
    restrict_pf: bool = True,
) -> float:
    """Sum of ``|R_d|`` over ``d <= D``."""

    if D > X:
        raise ValidationError(f"D [ {D} ] exceeds X [ {X} ]")

    return _sums(F, X, chi, lam, context, tables, restrict_pf).R_total(D)


def P_X_chi(  # pylint: disable=invalid-name
    F: Form,
    X: int,
    chi: Optional[DirichletCharacter],
    lam: LambdaSpec,
    context: CompositionContext,
    tables: SieveTables,
) -> complex:
    """Sum of ``a_N chi(N) Lambda(N)`` over ``N <= X`` coprime to ``P_F``."""

    return _sums(F, X, chi, lam, context, tables, True).P()


def remainder_combination(sums: LatticeSums, Y: int, Z: int) -> dict[str, object]:
    """
    Combine remainders with Moebius and von Mangoldt weights.

    Evaluates ``sum_{b <= Y} mu(b) (R_b(X) log(X/b) - int_1^X R_b(t) dt/t
    - sum_{c <= Z} Lambda(c) R_{bc}(X))`` with the integral taken exactly over
    the integer steps, and the bound ``R(X, YZ) log X + int_1^X R(t, Y) dt/t``.
    """

    X = sums.X

    if Y < 1 or Z < 1 or Y * Z > X:
        raise ValidationError(f"Y [ {Y} ] and Z [ {Z} ] need 1 <= Y, Z and YZ <= X [ {X} ]")

    n_values = np.arange(1, X, dtype=np.float64)
    step_logs = np.log1p(1.0 / n_values)
    terms: list[complex] = []
    absolute_steps = np.zeros(max(X - 1, 0), dtype=np.float64)

    for b in range(1, Y + 1):
        mobius = int(sums.tables.mu[b])

        if mobius == 0 or sums.vanishes(b):
            continue

        steps = sums.R_steps(b)[1:X]
        absolute_steps += np.abs(steps)
        integral = complex_fsum(steps * step_logs)
        tail = complex_fsum(
            np.array(
                [
                    sums.tables.vm[c] * sums.R(b * c)
                    for c in range(2, Z + 1)
                    if sums.tables.vm[c] > 0
                ],
                dtype=np.complex128,
            )
        )
        terms.append(mobius * (sums.R(b) * log(X / b) - integral - tail))

    value = complex_fsum(np.array(terms, dtype=np.complex128))
    bound = sums.R_total(Y * Z) * log(X) + fsum((absolute_steps * step_logs).tolist())

    return {
        "value": value,
        "bound": bound,
        "holds": abs(value) <= bound * (1 + 1e-9) + 1e-9,
    }
