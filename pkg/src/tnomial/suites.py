"""Sweep drivers for the identity and oracle checks.

Each suite walks a parameter grid and an index range, stops at the first
exact mismatch, and returns IdentityReport records.  The CLI and the
acceptance tests both run through these entry points.
"""

from __future__ import annotations

import random
from math import comb

from .coefficients import (
    coeff_factorial,
    coeff_inverse,
    coeff_lambda_multiset,
    coeff_lambda_subset,
    coeff_partial_fractions,
    coeff_product,
    coeff_recurrence,
    coeff_symbolic,
)
from .errors import DegenerateParametersError, IdentityViolation
from .identities import (
    _binom2,
    binomial_like,
    equal1_check,
    expand_multiset_gf,
    expand_split_gf,
    expand_subset_gf,
    fibonomial_suite,
    gaussian_basis_check,
    gaussian_explicit,
    gaussian_inverse_entry,
    orthogonality,
    vandermonde_terms,
)
from .oracles import (
    BoxWeights,
    TriMatrix,
    count_acyclic_multidigraphs,
    count_acyclic_multidigraphs_recurrence,
    count_bipartite_multigraphs,
    count_selections,
    invert_triangular,
    verify_inverse_relation,
    volume_ratio,
)
from .report import IdentityReport, make_report
from .rings import XSeries
from .sequences import SeqParams, term_closed

DEFAULT_GRID_LO = -2
DEFAULT_GRID_HI = 4


def pq_grid(lo: int = DEFAULT_GRID_LO, hi: int = DEFAULT_GRID_HI) -> list[tuple[int, int]]:
    """All integer parameter pairs in the square [lo, hi] x [lo, hi]."""
    return [(p, q) for p in range(lo, hi + 1) for q in range(lo, hi + 1)]


def positive_grid(hi: int = 3) -> list[tuple[int, int]]:
    return pq_grid(1, hi)


def sample_grid(grid: list[tuple[int, int]], size: int, seed: int) -> list[tuple[int, int]]:
    """Deterministic subsample of a parameter grid."""
    if size >= len(grid):
        return list(grid)
    return random.Random(seed).sample(grid, size)


def _grid_label(grid: list[tuple[int, int]]) -> str:
    ps = sorted({p for p, _ in grid})
    qs = sorted({q for _, q in grid})
    return f"p in [{ps[0]}..{ps[-1]}], q in [{qs[0]}..{qs[-1]}]"


def routes_suite(grid: list[tuple[int, int]] | None = None, n_max: int = 12) -> IdentityReport:
    """Agreement of every numeric coefficient route with the recurrence.

    Per-route preconditions: the factorial ratio needs all terms up to n
    nonzero; the product and partial-fraction routes need non-coincident
    denominators/nodes and are skipped where degenerate.  The subset sum
    is compared multiplicatively as subset = C(n, k) * (pq)**C(k,2), the
    multiset sum as C(n + k - 1, k), and the symbolic polynomial through
    integer evaluation.
    """
    if grid is None:
        grid = pq_grid()
    for p, q in grid:
        params = SeqParams(p, q)
        terms = [term_closed(params, i) for i in range(n_max + 1)]
        for n in range(n_max + 1):
            factorial_defined = all(terms[1 : n + 1])
            for k in range(n + 1):
                reference = coeff_recurrence(params, n, k)
                location = {"p": p, "q": q, "n": n, "k": k}

                if factorial_defined:
                    value = coeff_factorial(params, n, k)
                    if value != reference:
                        ce = dict(location, route="factorial", lhs=value, rhs=reference)
                        return make_report("route-agreement", _grid_label(grid), (n_max, n_max), ce)

                try:
                    value = coeff_product(params, n, k)
                except DegenerateParametersError:
                    pass
                else:
                    if value != reference:
                        ce = dict(location, route="product", lhs=value, rhs=reference)
                        return make_report("route-agreement", _grid_label(grid), (n_max, n_max), ce)

                subset = coeff_lambda_subset(params, n, k)
                expected = reference * (p * q) ** _binom2(k)
                if subset != expected:
                    ce = dict(location, route="subset", lhs=subset, rhs=expected)
                    return make_report("route-agreement", _grid_label(grid), (n_max, n_max), ce)

                if n >= 1:
                    multiset = coeff_lambda_multiset(params, n, k)
                    expected = coeff_recurrence(params, n + k - 1, k)
                    if multiset != expected:
                        ce = dict(location, route="multiset", lhs=multiset, rhs=expected)
                        return make_report("route-agreement", _grid_label(grid), (n_max, n_max), ce)

                try:
                    value = coeff_partial_fractions(params, n, k)
                except DegenerateParametersError:
                    pass
                else:
                    if value != reference:
                        ce = dict(location, route="partial-fractions", lhs=str(value), rhs=reference)
                        return make_report("route-agreement", _grid_label(grid), (n_max, n_max), ce)

                evaluated = coeff_symbolic(n, k).eval(p, q)
                if evaluated != reference:
                    ce = dict(location, route="symbolic", lhs=evaluated, rhs=reference)
                    return make_report("route-agreement", _grid_label(grid), (n_max, n_max), ce)
    return make_report("route-agreement", _grid_label(grid), (n_max, n_max))


def gf_suite(
    grid: list[tuple[int, int]] | None = None, n_max: int = 8, order: int = 10
) -> IdentityReport:
    """Coefficient coherence of the three product expansions, plus the
    mutual-inverse check: subset series times multiset series equals 1."""
    if grid is None:
        grid = pq_grid()
    for p, q in grid:
        params = SeqParams(p, q)
        for n in range(n_max + 1):
            try:
                subset = expand_subset_gf(n, params, order)
                expand_split_gf(n, params)
                if n >= 1:
                    multiset = expand_multiset_gf(n, order, params)
                    product = subset * multiset
                    identity = XSeries.one(order)
                    if product != identity:
                        ce = {"p": p, "q": q, "n": n, "lhs": str(product.coefficients), "rhs": "1"}
                        return make_report("gf-coherence", _grid_label(grid), (n_max, order), ce)
            except IdentityViolation as violation:
                ce = {
                    "p": p,
                    "q": q,
                    "identity": violation.identity,
                    "location": violation.location,
                    "lhs": str(violation.lhs),
                    "rhs": str(violation.rhs),
                }
                return make_report("gf-coherence", _grid_label(grid), (n_max, order), ce)
    return make_report("gf-coherence", _grid_label(grid), (n_max, order))


def binomial_suite(n_max: int = 7) -> IdentityReport:
    """Symbolic binomial-like expansion, both forms, over Z[p, q]."""
    for n in range(1, n_max + 1):
        for form in ("y_weights", "split"):
            try:
                binomial_like(n, form)
            except IdentityViolation as violation:
                ce = {
                    "n": n,
                    "form": form,
                    "location": violation.location,
                    "lhs": str(violation.lhs),
                    "rhs": str(violation.rhs),
                }
                return make_report("binomial-like", "symbolic", (n_max, n_max), ce)
    return make_report("binomial-like", "symbolic", (n_max, n_max))


def orthogonality_suite(
    grid: list[tuple[int, int]] | None = None, n_max: int = 8, s_max: int = 8
) -> IdentityReport:
    if grid is None:
        grid = pq_grid()
    for p, q in grid:
        params = SeqParams(p, q)
        for n in range(1, n_max + 1):
            for s in range(1, s_max + 1):
                if not orthogonality(params, n, s):
                    ce = {"p": p, "q": q, "n": n, "s": s, "lhs": "nonzero", "rhs": 0}
                    return make_report("orthogonality", _grid_label(grid), (n_max, s_max), ce)
    return make_report("orthogonality", _grid_label(grid), (n_max, s_max))


def vandermonde_suite(
    grid: list[tuple[int, int]] | None = None, nm_max: int = 5
) -> IdentityReport:
    """Convolution identity sweep; the adopted exponent reading must hold
    everywhere, and the first counterexample to the rejected plain-exponent
    reading is recorded in the notes."""
    if grid is None:
        grid = positive_grid()
    plain_notes: list[str] = []
    interior_found = False
    for p, q in grid:
        params = SeqParams(p, q)
        for n in range(nm_max + 1):
            for m in range(nm_max + 1):
                for k in range(n + m + 1):
                    lhs, rhs_proof, rhs_plain = vandermonde_terms(params, n, m, k)
                    if rhs_proof != lhs:
                        ce = {"p": p, "q": q, "n": n, "m": m, "k": k, "lhs": lhs, "rhs": rhs_proof}
                        return make_report("vandermonde", _grid_label(grid), (nm_max, 2 * nm_max), ce)
                    if rhs_plain != lhs:
                        interior = min(n, m, k) >= 1
                        if not plain_notes or (interior and not interior_found):
                            kind = "interior" if interior else "boundary"
                            plain_notes.append(
                                f"plain-exponent variant fails ({kind}) at p={p}, q={q}, "
                                f"n={n}, m={m}, k={k}: {rhs_plain} != {lhs}"
                            )
                            interior_found = interior_found or interior
    if not plain_notes:
        plain_notes.append("plain-exponent variant never refuted on this grid")
    return make_report("vandermonde", _grid_label(grid), (nm_max, 2 * nm_max), None, tuple(plain_notes))


def equal1_suite(grid: list[tuple[int, int]] | None = None, k_max: int = 8) -> IdentityReport:
    """Partial-fraction sum at n = k must be exactly 1 wherever the nodes
    are pairwise distinct."""
    if grid is None:
        grid = pq_grid()
    checked = 0
    for p, q in grid:
        params = SeqParams(p, q)
        for k in range(k_max + 1):
            try:
                ok = equal1_check(params, k)
            except DegenerateParametersError:
                continue
            checked += 1
            if not ok:
                ce = {
                    "p": p,
                    "q": q,
                    "k": k,
                    "lhs": str(coeff_partial_fractions(params, k, k)),
                    "rhs": 1,
                }
                return make_report("unit-sum", _grid_label(grid), (k_max, k_max), ce)
    notes = (f"{checked} non-degenerate parameter/index points checked",)
    return make_report("unit-sum", _grid_label(grid), (k_max, k_max), None, notes)


def inversion_suite(grid: list[tuple[int, int]] | None = None, order: int = 8) -> IdentityReport:
    """The composition-sum inverse must invert the coefficient triangle on
    both sides and match the exact forward-substitution inverse entrywise."""
    if grid is None:
        grid = pq_grid()
    size = order + 1
    identity = TriMatrix.identity(size)
    for p, q in grid:
        params = SeqParams(p, q)
        triangle = TriMatrix(
            tuple(tuple(coeff_recurrence(params, n, k) for k in range(n + 1)) for n in range(size))
        )
        inverse = TriMatrix(
            tuple(tuple(coeff_inverse(params, n, k) for k in range(n + 1)) for n in range(size))
        )
        substituted = invert_triangular(triangle)
        if inverse != substituted:
            for n in range(size):
                for k in range(n + 1):
                    if inverse.rows[n][k] != substituted.rows[n][k]:
                        ce = {
                            "p": p,
                            "q": q,
                            "n": n,
                            "k": k,
                            "lhs": str(inverse.rows[n][k]),
                            "rhs": str(substituted.rows[n][k]),
                        }
                        return make_report("inversion", _grid_label(grid), (order, order), ce)
        if triangle @ inverse != identity or inverse @ triangle != identity:
            ce = {"p": p, "q": q, "lhs": "triangle @ inverse", "rhs": "identity"}
            return make_report("inversion", _grid_label(grid), (order, order), ce)
    return make_report("inversion", _grid_label(grid), (order, order))


def fibonomial_reports(alphas: tuple[int, ...] = (1, 2), n_max: int = 10) -> list[IdentityReport]:
    return [fibonomial_suite(alpha, n_max) for alpha in alphas]


def specialization_suite(n_max: int = 8) -> IdentityReport:
    """Classical specializations.

    p = q = 1 reduces the triangle to Pascal's; p = 1 gives Gaussian
    coefficients whose explicit sum, basis expansion (n <= 6) and signed
    inverse entries must all line up; and the coefficients must be
    invariant under the sequence scale.
    """
    label = "pascal, gaussian q in {2, 3}, scale in {1, 2, 3}"
    ones = SeqParams(1, 1)
    for n in range(n_max + 1):
        for k in range(n + 1):
            if coeff_recurrence(ones, n, k) != comb(n, k):
                ce = {"case": "pascal", "n": n, "k": k, "lhs": coeff_recurrence(ones, n, k), "rhs": comb(n, k)}
                return make_report("specializations", label, (n_max, n_max), ce)
            if coeff_inverse(ones, n, k) != (-1) ** (n - k) * comb(n, k):
                ce = {
                    "case": "pascal-inverse",
                    "n": n,
                    "k": k,
                    "lhs": coeff_inverse(ones, n, k),
                    "rhs": (-1) ** (n - k) * comb(n, k),
                }
                return make_report("specializations", label, (n_max, n_max), ce)

    for q_val in (2, 3):
        params = SeqParams(1, q_val)
        for n in range(min(n_max, 6) + 1):
            for k in range(n + 1):
                try:
                    gaussian_explicit(q_val, n, k)
                except IdentityViolation as violation:
                    ce = {
                        "case": "gaussian-explicit",
                        "q": q_val,
                        "location": violation.location,
                        "lhs": str(violation.lhs),
                        "rhs": str(violation.rhs),
                    }
                    return make_report("specializations", label, (n_max, n_max), ce)
            if not gaussian_basis_check(q_val, n):
                ce = {"case": "gaussian-basis", "q": q_val, "n": n, "lhs": "mismatch", "rhs": "x**n"}
                return make_report("specializations", label, (n_max, n_max), ce)
        for n in range(n_max + 1):
            for k in range(n + 1):
                expected = gaussian_inverse_entry(q_val, n, k)
                if coeff_inverse(params, n, k) != expected:
                    ce = {
                        "case": "gaussian-inverse",
                        "q": q_val,
                        "n": n,
                        "k": k,
                        "lhs": coeff_inverse(params, n, k),
                        "rhs": expected,
                    }
                    return make_report("specializations", label, (n_max, n_max), ce)

    for p, q in ((2, 3), (1, 2), (2, 2)):
        reference = SeqParams(p, q)
        for scale in (2, 3):
            scaled = SeqParams(p, q, scale)
            for n in range(n_max + 1):
                for k in range(n + 1):
                    base = coeff_factorial(reference, n, k)
                    value = coeff_factorial(scaled, n, k)
                    if value != base or value != coeff_recurrence(scaled, n, k):
                        ce = {
                            "case": "scale",
                            "p": p,
                            "q": q,
                            "scale": scale,
                            "n": n,
                            "k": k,
                            "lhs": value,
                            "rhs": base,
                        }
                        return make_report("specializations", label, (n_max, n_max), ce)
    return make_report("specializations", label, (n_max, n_max))


def selections_oracle_suite(hi: int = 3, n_max: int = 8, k_max: int = 6) -> IdentityReport:
    """Brute-force ball selections against the coefficient formulas."""
    label = f"p, q in [1..{hi}]"
    for p, q in positive_grid(hi):
        params = SeqParams(p, q)
        for n in range(1, n_max + 1):
            boxes = BoxWeights.from_params(params, n)
            for k in range(min(k_max, 6) + 1):
                with_rep = count_selections(boxes, k, repetition=True)
                expected = coeff_recurrence(params, n + k - 1, k)
                if with_rep != expected:
                    ce = {"p": p, "q": q, "n": n, "k": k, "lhs": with_rep, "rhs": expected}
                    return make_report("selections-oracle", label, (n_max, k_max), ce)
                without_rep = count_selections(boxes, k, repetition=False)
                expected = (
                    coeff_recurrence(params, n, k) * (p * q) ** _binom2(k) if k <= n else 0
                )
                if without_rep != expected:
                    ce = {"p": p, "q": q, "n": n, "k": k, "lhs": without_rep, "rhs": expected}
                    return make_report("selections-oracle", label, (n_max, k_max), ce)
    return make_report("selections-oracle", label, (n_max, k_max))


def bipartite_oracle_suite(alpha_max: int = 3, n_max: int = 5) -> IdentityReport:
    """Brute-force bipartite multigraph counts against the diagonal case."""
    label = f"alpha in [1..{alpha_max}]"
    for alpha in range(1, alpha_max + 1):
        params = SeqParams(alpha, alpha)
        for n in range(n_max + 1):
            for k in range(n + 1):
                counted = count_bipartite_multigraphs(alpha, n, k)
                closed = comb(n, k) * alpha ** (k * (n - k))
                triangle = coeff_recurrence(params, n, k)
                if counted != closed or counted != triangle:
                    ce = {"alpha": alpha, "n": n, "k": k, "lhs": counted, "rhs": triangle}
                    return make_report("bipartite-oracle", label, (n_max, n_max), ce)
    return make_report("bipartite-oracle", label, (n_max, n_max))


ACYCLIC_BASE_COUNTS = (1, 1, 3, 25, 543)


def dag_oracle_suite(n_max: int = 4) -> IdentityReport:
    """Brute-force acyclic multi-digraph counts: frozen values for
    multiplicity bound 2, and recurrence agreement for bounds 2 and 3."""
    label = "p in {2, 3}"
    n_max = min(n_max, 4)
    for n in range(n_max + 1):
        brute = count_acyclic_multidigraphs(2, n)
        if brute != ACYCLIC_BASE_COUNTS[n]:
            ce = {"p": 2, "n": n, "lhs": brute, "rhs": ACYCLIC_BASE_COUNTS[n]}
            return make_report("acyclic-oracle", label, (n_max, n_max), ce)
    for p_val in (2, 3):
        for n in range(n_max + 1):
            brute = count_acyclic_multidigraphs(p_val, n)
            recurred = count_acyclic_multidigraphs_recurrence(p_val, n)
            if brute != recurred:
                ce = {"p": p_val, "n": n, "lhs": brute, "rhs": recurred}
                return make_report("acyclic-oracle", label, (n_max, n_max), ce)
    return make_report("acyclic-oracle", label, (n_max, n_max))


def volume_oracle_suite(hi: int = 3, n_max: int = 8) -> IdentityReport:
    """Box-volume ratios against the coefficient triangle."""
    label = f"p, q in [1..{hi}]"
    for p, q in positive_grid(hi):
        params = SeqParams(p, q)
        for n in range(1, n_max + 1):
            for k in range(1, n + 1):
                ratio = volume_ratio(params, k, n)
                expected = coeff_recurrence(params, n, n - k + 1)
                if ratio != expected:
                    ce = {"p": p, "q": q, "n": n, "k": k, "lhs": ratio, "rhs": expected}
                    return make_report("volume-oracle", label, (n_max, n_max), ce)
    return make_report("volume-oracle", label, (n_max, n_max))


def inverse_relation_reports(ps: tuple[int, ...] = (2, 3), n_max: int = 8) -> list[IdentityReport]:
    return [verify_inverse_relation(p_val, n_max) for p_val in ps]


IDENTITY_SUITES = (
    "routes",
    "gf",
    "binomial",
    "orthogonality",
    "vandermonde",
    "equal1",
    "inversion",
    "fibonomial",
    "specializations",
)

ORACLE_SUITES = ("selections", "bipartite", "dag", "volume", "inverse-relation")


def run_verify(
    identity: str,
    grid: list[tuple[int, int]] | None = None,
    n_max: int | None = None,
    order: int | None = None,
) -> list[IdentityReport]:
    """Run one named identity suite (or all of them) and collect reports."""
    if identity == "all":
        reports = []
        for name in IDENTITY_SUITES:
            reports.extend(run_verify(name, grid, n_max, order))
        return reports
    if identity == "routes":
        return [routes_suite(grid, n_max or 12)]
    if identity == "gf":
        return [gf_suite(grid, n_max or 8, order or 10)]
    if identity == "binomial":
        return [binomial_suite(n_max or 7)]
    if identity == "orthogonality":
        return [orthogonality_suite(grid, n_max or 8, n_max or 8)]
    if identity == "vandermonde":
        return [vandermonde_suite(grid, n_max or 5)]
    if identity == "equal1":
        return [equal1_suite(grid, n_max or 8)]
    if identity == "inversion":
        return [inversion_suite(grid, n_max or 8)]
    if identity == "fibonomial":
        return fibonomial_reports(n_max=n_max or 10)
    if identity == "specializations":
        return [specialization_suite(n_max or 8)]
    raise ValueError(f"unknown identity suite {identity!r}")


def run_oracle(which: str, n_max: int | None = None) -> list[IdentityReport]:
    """Run one named oracle cross-check (or all of them)."""
    if which == "all":
        reports = []
        for name in ORACLE_SUITES:
            reports.extend(run_oracle(name, n_max))
        return reports
    if which == "selections":
        return [selections_oracle_suite(n_max=min(n_max or 8, 8))]
    if which == "bipartite":
        return [bipartite_oracle_suite(n_max=min(n_max or 5, 5))]
    if which == "dag":
        return [dag_oracle_suite(n_max or 4)]
    if which == "volume":
        return [volume_oracle_suite(n_max=min(n_max or 8, 8))]
    if which == "inverse-relation":
        return inverse_relation_reports(n_max=min(n_max or 8, 8))
    raise ValueError(f"unknown oracle suite {which!r}")
