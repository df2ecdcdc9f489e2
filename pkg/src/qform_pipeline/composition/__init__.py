"""Dirichlet composition and decomposition of representations."""

from .amn_via_decomposition import amn_via_decomposition
from .bilinear_forms import fstar, qf_bilinear, thin_coordinate
from .build_context import build_context, largest_prime_factor
from .build_sf import SEARCH_BUDGET, build_SF, candidate_points, find_representatives
from .choose_b import choose_B
from .compose_classes import class_group_table, compose_classes, coprime_representative
from .composition_context import (
    CompositionContext,
    Representative,
    context_from_dict,
    context_from_json,
    context_to_dict,
    context_to_json,
)
from .decompose_representation import DecompositionTuple, decompose_representation
from .dirichlet_compose import (
    CompositionCoefficients,
    check_composable,
    composition_coefficients,
    dirichlet_compose,
    reconstruct_representation,
    wz_substitution,
)
