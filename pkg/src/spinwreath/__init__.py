"""Exact spin (projective) character tables of wreath-product double covers."""

from .cyclo import CycloNumber, RadicalValue, sqrt_half_product
from .groups import GroupData, GroupDataError, load_group
from .qfunctions import PowerSumPoly, delta_on_odd, q_direct_eval, q_poly
from .spin_sym import delta_value, spin_sym_table
from .wreath import (SpinTable, full_table, induced_value, inner_product,
                     run_checks, split_classes)

__all__ = [
    "CycloNumber", "RadicalValue", "sqrt_half_product",
    "GroupData", "GroupDataError", "load_group",
    "PowerSumPoly", "delta_on_odd", "q_direct_eval", "q_poly",
    "delta_value", "spin_sym_table",
    "SpinTable", "full_table", "induced_value", "inner_product",
    "run_checks", "split_classes",
]

__version__ = "0.1.0"
