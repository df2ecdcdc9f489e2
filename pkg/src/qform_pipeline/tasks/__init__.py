"""Tasks shared by the flows."""

from .calculate_stripe_sums import calculate_stripe_sums
from .check_ratio_trend import check_ratio_trend
from .check_ratio_window import check_ratio_window
from .load_composition_context import load_composition_context, make_context_key
from .load_sieve_tables import load_sieve_tables, make_tables_key, save_sieve_tables
