"""Lattice sums over values of a form and the experiments built on them."""

from .bilinear_sum import bilinear_B, large_divisor_weight
from .experiment_report import ExperimentConfig, ExperimentReport, encode_value, package_version
from .experiments import (
    StripeSums,
    bilinear_experiment,
    congruence_reconstruction,
    corollary2_experiment,
    corollary2_weights,
    fi_check_experiment,
    level_experiment,
    merge_stripe_sums,
    prepare,
    select_character,
    stripe_sums,
    theorem1_experiment,
)
from .gaussian_identity import GAUSSIAN_FORM, fi_crosscheck, gaussian_representations
from .lambda_spec import KINDS, LambdaSpec
from .lattice import ell_bound, ell_stripes, lattice_iterate, lattice_points, m_bounds
from .lattice_sums import (
    A_d,
    LatticeSums,
    M_d,
    P_X_chi,
    R_d,
    R_total,
    complex_fsum,
    remainder_combination,
)
from .sequences import a_N, admissible_mask, representation_weight
