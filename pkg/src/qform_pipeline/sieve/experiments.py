import time
from dataclasses import replace
from math import fsum, log, pi, sqrt
from typing import Optional

import numpy as np

from qform_pipeline.arithmetic import (
    DirichletCharacter,
    H_Fq,
    H_q,
    SieveTables,
    build_sieve,
    characters_mod,
    euler_totient,
    rho_ab,
)
from qform_pipeline.composition import CompositionContext, build_context
from qform_pipeline.errors import ValidationError
from qform_pipeline.sieve.bilinear_sum import bilinear_B
from qform_pipeline.sieve.experiment_report import ExperimentConfig, ExperimentReport
from qform_pipeline.sieve.gaussian_identity import GAUSSIAN_FORM, fi_crosscheck
from qform_pipeline.sieve.lambda_spec import LambdaSpec
from qform_pipeline.sieve.lattice import EllRange, lattice_iterate
from qform_pipeline.sieve.lattice_sums import LatticeSums, complex_fsum, remainder_combination
from qform_pipeline.sieve.sequences import admissible_mask, positive_ell_range

StripeSums = dict[str, list[float]]


def prepare(
    config: ExperimentConfig,
    context: Optional[CompositionContext] = None,
    tables: Optional[SieveTables] = None,
) -> tuple[CompositionContext, SieveTables]:
    """Build whatever of the context and tables is missing."""

    if context is None:
        context = build_context(config.F, nested=config.nested)
    elif context.F != config.F:
        raise ValidationError(f"context built for [ {context.F} ] not [ {config.F} ]")

    if tables is None:
        tables = build_sieve(max(config.X, 2))
    elif tables.limit < config.X:
        raise ValidationError(f"X [ {config.X} ] exceeds sieve limit [ {tables.limit} ]")

    return context, tables


def select_character(config: ExperimentConfig) -> DirichletCharacter:
    characters = characters_mod(config.q)

    if not 0 <= config.character < len(characters):
        raise ValidationError(
            f"character [ {config.character} ] outside "
            f"[ 0, {len(characters) - 1} ] mod [ {config.q} ]"
        )

    return characters[config.character]


def stripe_sums(
    config: ExperimentConfig,
    context: CompositionContext,
    tables: SieveTables,
    ell_range: Optional[EllRange] = None,
) -> StripeSums:
    """
    Per-trend partial sums over one range of ``ell``.

    ``lhs`` sums ``lambda(ell) Lambda(F(ell, m))`` over ``F(ell, m) = a (mod q)``
    and ``main_sum`` sums ``lambda(ell)`` over the same pairs that also satisfy
    ``gcd(ell, gamma m) = 1`` and ``gcd(F(ell, m), P_F) = 1``.
    """

    F, X, q = config.F, config.X, config.q
    grid = config.trend_grid()
    low, high = positive_ell_range(F, X, ell_range)
    ells = np.arange(low, high + 1, dtype=np.int64)
    weights = dict(zip(ells.tolist(), config.lam.values(ells, tables).tolist()))

    lhs_terms: list[list[float]] = [[] for _ in grid]
    main_terms: list[list[float]] = [[] for _ in grid]

    def collect(ell: int, m_values: np.ndarray, n_values: np.ndarray) -> None:
        weight = weights.get(ell, 0.0)

        if weight == 0.0:
            return

        congruent = (n_values - config.a) % q == 0
        admissible = (
            congruent
            & admissible_mask(F, ell, m_values)
            & tables.coprime_mask(n_values, context.CF)
        )

        for index, bound in enumerate(grid):
            below = n_values <= bound
            lhs_terms[index].append(weight * fsum(tables.vm[n_values[congruent & below]].tolist()))
            main_terms[index].append(weight * int(np.count_nonzero(admissible & below)))

    lattice_iterate(F, X, collect, ell_range=(low, high))

    return {
        "lhs": [fsum(terms) for terms in lhs_terms],
        "main_sum": [fsum(terms) for terms in main_terms],
    }


def merge_stripe_sums(partials: list[StripeSums]) -> StripeSums:
    keys = partials[0].keys()
    return {
        key: [fsum(values) for values in zip(*(partial[key] for partial in partials))]
        for key in keys
    }


def _ratio(numerator: float, denominator: float) -> Optional[float]:
    return numerator / denominator if denominator != 0 else None


def theorem1_experiment(
    config: ExperimentConfig,
    context: Optional[CompositionContext] = None,
    tables: Optional[SieveTables] = None,
    partials: Optional[list[StripeSums]] = None,
) -> ExperimentReport:
    """Compare the weighted prime count with ``H_{F,q}`` times the restricted weight sum."""

    start = time.perf_counter()
    config.require_coprime("a")
    context, tables = prepare(config, context, tables)

    singular_series, tail = H_Fq(config.F, config.q, context, config.prime_bound)
    sums = merge_stripe_sums(partials or [stripe_sums(config, context, tables)])

    trend = []

    for bound, lhs, main_sum in zip(config.trend_grid(), sums["lhs"], sums["main_sum"]):
        main_term = singular_series * main_sum
        trend.append(
            {
                "X": bound,
                "lhs": lhs,
                "main_sum": main_sum,
                "main_term": main_term,
                "ratio": _ratio(lhs, main_term),
                "lhs_over_X": lhs / bound,
            }
        )

    results = {**trend[-1], "H_Fq": singular_series, "H_Fq_tail": tail, "C_F": context.CF}

    return ExperimentReport(
        "theorem1", config.to_dict(), results, trend, time.perf_counter() - start
    )


def corollary2_weights(config: ExperimentConfig) -> ExperimentConfig:
    """Switch the weights to von Mangoldt restricted to ``ell = b (mod q)``."""

    lam = LambdaSpec(kind="von_mangoldt", modulus=config.q, residue=config.b)
    return replace(config, lam=lam)


def corollary2_experiment(
    config: ExperimentConfig,
    context: Optional[CompositionContext] = None,
    tables: Optional[SieveTables] = None,
    partials: Optional[list[StripeSums]] = None,
) -> ExperimentReport:
    """Compare the doubly prime count with ``H_q rho(q; a, b) / (q phi(q)) pi X / sqrt(Delta)``."""

    start = time.perf_counter()
    config.require_coprime("a", "b")
    config = corollary2_weights(config)
    context, tables = prepare(config, context, tables)

    delta = -config.F.discriminant
    singular_series = H_q(config.F, config.q, config.prime_bound)
    local_count = rho_ab(config.q, config.a, config.b, config.F, tables)
    density = singular_series * local_count / (config.q * euler_totient(config.q))
    sums = merge_stripe_sums(partials or [stripe_sums(config, context, tables)])

    trend = []

    for bound, lhs in zip(config.trend_grid(), sums["lhs"]):
        main_term = density * pi * bound / sqrt(delta)
        trend.append(
            {"X": bound, "lhs": lhs, "main_term": main_term, "ratio": _ratio(lhs, main_term)}
        )

    results = {**trend[-1], "H_q": singular_series, "rho_q_ab": local_count}

    return ExperimentReport(
        "corollary2", config.to_dict(), results, trend, time.perf_counter() - start
    )


def level_experiment(
    config: ExperimentConfig,
    context: Optional[CompositionContext] = None,
    tables: Optional[SieveTables] = None,
) -> ExperimentReport:
    """
    Normalized remainder ``R(X, D) / (q^3 D^(1/4) X^(3/4))`` over the trend grid.

    The level is ``config.D`` capped at each bound when set and ``X^theta`` otherwise.
    """

    start = time.perf_counter()
    context, tables = prepare(config, context, tables)
    chi = select_character(config)

    trend = []

    for bound in config.trend_grid():
        if config.D is None:
            level = max(1, int(bound**config.theta))
        else:
            level = min(config.D, bound)

        sums = LatticeSums(config.F, bound, config.lam, context, tables, chi=chi)
        remainder = sums.R_total(level)
        normalized = remainder / (config.q**3 * level**0.25 * bound**0.75)
        trend.append({"X": bound, "D": level, "R": remainder, "normalized": normalized})

    normalized_values = [row["normalized"] for row in trend]
    non_increasing = all(
        later <= earlier * (1 + 1e-12)
        for earlier, later in zip(normalized_values, normalized_values[1:])
    )

    results = {**trend[-1], "non_increasing": non_increasing}

    return ExperimentReport("level", config.to_dict(), results, trend, time.perf_counter() - start)


def bilinear_experiment(
    config: ExperimentConfig,
    context: Optional[CompositionContext] = None,
    tables: Optional[SieveTables] = None,
) -> ExperimentReport:
    """
    Type II sum and its remainder combination over the trend grid.

    The cuts are ``config.Y`` and ``config.Z`` when set and ``X^theta_y`` and
    ``X^theta_z`` otherwise.
    """

    start = time.perf_counter()
    context, tables = prepare(config, context, tables)
    chi = select_character(config)

    trend = []

    for bound in config.trend_grid():
        y_cut = bound**config.theta_y if config.Y is None else config.Y
        z_cut = bound**config.theta_z if config.Z is None else config.Z
        sums = LatticeSums(config.F, bound, config.lam, context, tables, chi=chi)
        value = bilinear_B(config.F, bound, y_cut, z_cut, chi, config.lam, context, tables, sums)
        row = {
            "X": bound,
            "Y": y_cut,
            "Z": z_cut,
            "B": value,
            "B_over_X": abs(value) / bound,
            "B_log_over_X": abs(value) * log(max(bound, 2)) / bound,
        }

        y_floor, z_floor = int(y_cut), int(z_cut)

        if y_floor >= 1 and z_floor >= 1 and y_floor * z_floor <= bound:
            combination = remainder_combination(sums, y_floor, z_floor)
            row["combination"] = combination["value"]
            row["combination_bound"] = combination["bound"]
            row["combination_holds"] = combination["holds"]

        trend.append(row)

    return ExperimentReport(
        "bilinear", config.to_dict(), dict(trend[-1]), trend, time.perf_counter() - start
    )


def congruence_reconstruction(
    config: ExperimentConfig,
    context: Optional[CompositionContext] = None,
    tables: Optional[SieveTables] = None,
) -> dict[str, object]:
    """
    Rebuild the congruence-restricted prime sum from its character transforms.

    Returns the average of ``conj(chi(a)) P(X; chi)`` over the characters modulo
    ``q``, the direct sum over ``N = a (mod q)`` and their relative difference.
    """

    config.require_coprime("a")
    context, tables = prepare(config, context, tables)

    sums = LatticeSums(config.F, config.X, config.lam, context, tables)
    base = sums.weights.real * tables.vm[: config.X + 1]
    numbers = np.arange(config.X + 1)

    transforms = [
        np.conj(chi(config.a)) * complex_fsum(base * chi.values(numbers))
        for chi in characters_mod(config.q)
    ]
    reconstructed = complex_fsum(np.array(transforms)) / euler_totient(config.q)
    direct = fsum(base[(numbers - config.a) % config.q == 0].tolist())
    scale = max(abs(direct), 1.0)

    return {
        "reconstructed": reconstructed,
        "direct": direct,
        "relative_error": abs(reconstructed - direct) / scale,
    }


def fi_check_experiment(config: ExperimentConfig) -> ExperimentReport:
    """Check the Gaussian bilinear identity for ``a_{mn}`` up to X."""

    if config.F != GAUSSIAN_FORM:
        raise ValidationError(f"Gaussian identity needs F = (1,0,1), not [ {config.F} ]")

    start = time.perf_counter()
    results = fi_crosscheck(config.X, config.lam)

    return ExperimentReport("fi-check", config.to_dict(), results, [], time.perf_counter() - start)
