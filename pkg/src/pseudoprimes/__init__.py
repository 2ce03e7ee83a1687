"""Fermat pseudoprime statistics in residue classes and exact densities of
the sets of numbers that are pseudoprime to a divisor base."""

from .arith import (
    Factorization,
    SpfTable,
    carmichael_lambda,
    coprime_part,
    divisors,
    euler_phi,
    factor,
    is_prime,
    jacobi,
    multiplicative_order,
    powmod,
    spf_table,
    tau,
)
from .density import (
    AbelianPGroup,
    ClassSystem,
    GroupBoundReport,
    OrderCensus,
    c1_partial,
    check_group_bounds,
    count_S,
    group_N,
    group_order_census_brute,
    group_order_count,
    is_imprimitive,
    order_census,
    sb_class_system,
    sb_density,
    sb_membership,
    tail_bound,
    tail_bound_term,
    union_density,
    union_density_scan,
    unit_order_counts,
)
from .errors import CapacityError, InputFormatError
from .fermat import (
    D,
    F,
    F_brute,
    F_star,
    F_star_brute,
    PspVerdict,
    is_carmichael,
    is_fermat_psp,
    psp_criterion,
)
from .sieve import (
    ClassConditionReport,
    CountTable,
    EmptyClass,
    JacobiCondition,
    ResidueClass,
    class_conditions,
    count_psp_in_classes,
    count_psp_table,
    emit_table,
    enumerate_even_psp,
    even_psp_brute,
    format_fraction,
    ingest_psp_list,
    iter_psp_values,
    psp_values,
    scan_empty_classes,
)

__all__ = [
    "AbelianPGroup",
    "CapacityError",
    "ClassConditionReport",
    "ClassSystem",
    "CountTable",
    "D",
    "EmptyClass",
    "F",
    "F_brute",
    "F_star",
    "F_star_brute",
    "Factorization",
    "GroupBoundReport",
    "InputFormatError",
    "JacobiCondition",
    "OrderCensus",
    "PspVerdict",
    "ResidueClass",
    "SpfTable",
    "c1_partial",
    "carmichael_lambda",
    "check_group_bounds",
    "class_conditions",
    "coprime_part",
    "count_S",
    "count_psp_in_classes",
    "count_psp_table",
    "divisors",
    "emit_table",
    "enumerate_even_psp",
    "euler_phi",
    "even_psp_brute",
    "factor",
    "format_fraction",
    "group_N",
    "group_order_census_brute",
    "group_order_count",
    "ingest_psp_list",
    "is_carmichael",
    "is_fermat_psp",
    "is_imprimitive",
    "is_prime",
    "iter_psp_values",
    "jacobi",
    "multiplicative_order",
    "order_census",
    "powmod",
    "psp_criterion",
    "psp_values",
    "sb_class_system",
    "sb_density",
    "sb_membership",
    "scan_empty_classes",
    "spf_table",
    "tail_bound",
    "tail_bound_term",
    "tau",
    "union_density",
    "union_density_scan",
    "unit_order_counts",
]
