"""Exact arithmetic for tileable two-parameter integer sequences and the
generalized binomial (T-nomial) coefficients they induce.

A tileable sequence T(p, q) is determined by two integer parameters; its
terms obey a splitting recurrence that makes the factorial-style ratio

    C(n, k) = n_T! / (k_T! * (n-k)_T!)

an integer.  This package evaluates those coefficients along several
independent routes (recurrence, factorial ratio, telescoping product,
weight sums, partial fractions, and symbolically over Z[p, q]), checks
the identities relating them, and cross-checks the combinatorial
interpretations against literal brute-force enumeration.

>>> from tnomial import SeqParams, coeff_recurrence
>>> coeff_recurrence(SeqParams(2, 3), 4, 2)
247
"""

from __future__ import annotations

from .coefficients import (
    ROUTE_NAMES,
    box_weights,
    coeff_factorial,
    coeff_inverse,
    coeff_lambda_multiset,
    coeff_lambda_subset,
    coeff_partial_fractions,
    coeff_product,
    coeff_recurrence,
    coeff_route,
    coeff_symbolic,
    multinomial,
    set_cache_limit,
)
from .errors import (
    BudgetExceededError,
    DegenerateParametersError,
    DivisibilityError,
    IdentityViolation,
    ParameterMismatchError,
    SingularMatrixError,
)
from .identities import (
    alpha_fibonacci,
    binomial_like,
    equal1_check,
    expand_multiset_gf,
    expand_split_gf,
    expand_subset_gf,
    fibonomial,
    fibonomial_suite,
    gaussian_basis_check,
    gaussian_explicit,
    gaussian_inverse_entry,
    orthogonality,
    vandermonde,
    vandermonde_terms,
)
from .oracles import (
    BoxWeights,
    TriMatrix,
    count_acyclic_multidigraphs,
    count_acyclic_multidigraphs_recurrence,
    count_bipartite_multigraphs,
    count_selections,
    enumeration_budget,
    invert_triangular,
    verify_inverse_relation,
    volume_ratio,
)
from .report import IdentityReport, make_report
from .rings import (
    BiPoly,
    QuadElem,
    Rational,
    XSeries,
    exact_div,
    geometric_series,
    series_product,
)
from .sequences import (
    Composition,
    SeqParams,
    check_composition_recurrence,
    check_split_recurrence,
    compositions_of,
    gf_coefficients,
    term_closed,
    term_factorial,
    term_sum,
    term_symbolic,
)
from .suites import pq_grid, run_oracle, run_verify

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "BoxWeights",
    "BudgetExceededError",
    "Composition",
    "DegenerateParametersError",
    "DivisibilityError",
    "IdentityReport",
    "IdentityViolation",
    "ParameterMismatchError",
    "QuadElem",
    "ROUTE_NAMES",
    "Rational",
    "SeqParams",
    "SingularMatrixError",
    "TriMatrix",
    "XSeries",
    "alpha_fibonacci",
    "binomial_like",
    "box_weights",
    "check_composition_recurrence",
    "check_split_recurrence",
    "coeff_factorial",
    "coeff_inverse",
    "coeff_lambda_multiset",
    "coeff_lambda_subset",
    "coeff_partial_fractions",
    "coeff_product",
    "coeff_recurrence",
    "coeff_route",
    "coeff_symbolic",
    "compositions_of",
    "count_acyclic_multidigraphs",
    "count_acyclic_multidigraphs_recurrence",
    "count_bipartite_multigraphs",
    "count_selections",
    "enumeration_budget",
    "equal1_check",
    "exact_div",
    "expand_multiset_gf",
    "expand_split_gf",
    "expand_subset_gf",
    "fibonomial",
    "fibonomial_suite",
    "gaussian_basis_check",
    "gaussian_explicit",
    "gaussian_inverse_entry",
    "geometric_series",
    "gf_coefficients",
    "invert_triangular",
    "make_report",
    "multinomial",
    "orthogonality",
    "pq_grid",
    "run_oracle",
    "run_verify",
    "series_product",
    "set_cache_limit",
    "term_closed",
    "term_factorial",
    "term_sum",
    "term_symbolic",
    "vandermonde",
    "vandermonde_terms",
    "verify_inverse_relation",
    "volume_ratio",
]
