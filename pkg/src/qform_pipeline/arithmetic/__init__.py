"""Arithmetic tables, local root counts, Dirichlet characters and singular series."""

from .dirichlet_characters import (
    DirichletCharacter,
    UnitGroup,
    characters_mod,
    euler_totient,
    unit_group,
)
from .oracles import mobius, von_mangoldt
from .root_counts import (
    count_quadratic_roots,
    is_obstructed,
    power_mod,
    prime_power_roots,
    prime_root_counts,
    rho,
    rho_ab,
)
from .sieve_tables import (
    SieveTables,
    build_sieve,
    list_primes,
    sieve_from_bytes,
    sieve_to_bytes,
)
from .singular_series import H_Fq, H_q, euler_product
