"""Cycle types of complete cyclotomic mappings over finite fields."""

from .charsum import c_constant, count_carlitz, count_carlitz_gen, count_via_indicators, weil_sum
from .cyclomap import (
    CyclotomicMap,
    NotAPermutation,
    PsiFunction,
    construct_f_omega,
    construct_from_h,
    cycle_type,
    cycle_type_oracle,
    cyclo_new,
    gamma_h,
)
from .ff import FieldCtx, FieldError, field_new, parse_field_spec
from .search import SearchReport, construct_thm3, find_complete_cyclotomic, is_special, realize_coset_maps
from .special import enumerate_special

__version__ = "0.1.0"
