"""T-nomial coefficients computed along independent routes.

The coefficient C(n, k) attached to a sequence T(p, q) generalizes the
binomial coefficient (p = q = 1), the Gaussian coefficient (p = 1) and
the diagonal case C(n, k) * p**(k*(n-k)) (p = q).  Each public function
here evaluates it through a different formula so that agreement between
routes is meaningful evidence:

* factorial ratio of term factorials,
* the additive triangle recurrence (also symbolically over Z[p, q]),
* a telescoping product of term ratios accumulated in exact rationals,
* multiset / subset sums of box weights q**(i-1) * p**(n-i),
* an alternating partial-fraction sum over the nodes q**s * p**(k-s).

All routes ignore the sequence ``scale``: the factorial route cancels it
exactly and the others never see it.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .errors import DegenerateParametersError, DivisibilityError
from .rings import BiPoly, exact_div
from .sequences import SeqParams, compositions_of, term_factorial

_lock = threading.Lock()
_numeric_rows: dict[tuple[int, int], list[list[int]]] = {}
_symbolic_rows: list[list[BiPoly]] = [[BiPoly.one()]]
_cache_limit = 128


def set_cache_limit(n_max: int) -> None:
    """Bound the number of memoized triangle rows per parameter pair.

    Queries above the bound still work; they just recompute rows instead
    of caching them.
    """
    global _cache_limit
    if n_max < 0:
        raise ValueError("cache limit must be nonnegative")
    with _lock:
        _cache_limit = n_max


def _check_indices(n: int, k: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"coefficient indices need 0 <= k <= n, got n={n}, k={k}")


def _next_row(prev: list[int], p: int, q: int) -> list[int]:
    n = len(prev)
    row = [1]
    for k in range(1, n):
        row.append(p ** (n - k) * prev[k - 1] + q**k * prev[k])
    row.append(1)
    return row


def coeff_recurrence(params: SeqParams, n: int, k: int) -> int:
    """C(n, k) from C(n, k) = p**(n-k) C(n-1, k-1) + q**k C(n-1, k)."""
    _check_indices(n, k)
    p, q = params.p, params.q
    with _lock:
        rows = _numeric_rows.setdefault((p, q), [[1]])
        while len(rows) - 1 < min(n, _cache_limit):
            rows.append(_next_row(rows[-1], p, q))
        row = rows[min(n, len(rows) - 1)]
    while len(row) - 1 < n:
        row = _next_row(row, p, q)
    return row[k]


def _next_row_symbolic(prev: list[BiPoly]) -> list[BiPoly]:
    n = len(prev)
    row = [BiPoly.one()]
    for k in range(1, n):
        row.append(BiPoly.monomial(n - k, 0) * prev[k - 1] + BiPoly.monomial(0, k) * prev[k])
    row.append(BiPoly.one())
    return row


def coeff_symbolic(n: int, k: int) -> BiPoly:
    """C(n, k) as a polynomial in Z[p, q] via the same triangle recurrence."""
    _check_indices(n, k)
    with _lock:
        rows = _symbolic_rows
        while len(rows) - 1 < min(n, _cache_limit):
            rows.append(_next_row_symbolic(rows[-1]))
        row = rows[min(n, len(rows) - 1)]
    while len(row) - 1 < n:
        row = _next_row_symbolic(row)
    return row[k]


def coeff_factorial(params: SeqParams, n: int, k: int) -> int:
    """C(n, k) as term_factorial(n) / (term_factorial(k) * term_factorial(n - k)).

    Requires every term 1..n to be nonzero, otherwise the ratio is not
    defined and a DivisibilityError surfaces.
    """
    _check_indices(n, k)
    numerator = term_factorial(params, n)
    denominator = term_factorial(params, k) * term_factorial(params, n - k)
    return exact_div(numerator, denominator)


def coeff_product(params: SeqParams, n: int, k: int) -> int:
    """C(n, k) as the product over i = 1..k of the term ratios.

    For p != q each factor is (p**(n-i+1) - q**(n-i+1)) / (p**i - q**i);
    the factors are accumulated in exact rationals without reordering and
    the final value must come out integral.  On the diagonal p = q the
    product collapses to comb(n, k) * p**(k*(n-k)).
    """
    _check_indices(n, k)
    p, q = params.p, params.q
    if p == q:
        return comb(n, k) * p ** (k * (n - k))
    acc = Fraction(1)
    for i in range(1, k + 1):
        denominator = p**i - q**i
        if denominator == 0:
            raise DegenerateParametersError(
                f"p**{i} == q**{i} for p={p}, q={q}: product route undefined"
            )
        acc *= Fraction(p ** (n - i + 1) - q ** (n - i + 1), denominator)
    if acc.denominator != 1:
        raise DivisibilityError(acc.numerator, acc.denominator)
    return acc.numerator


def box_weights(params: SeqParams, n: int) -> list[int]:
    """The n box weights q**(i-1) * p**(n-i) for i = 1..n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p, q = params.p, params.q
    return [q ** (i - 1) * p ** (n - i) for i in range(1, n + 1)]


def coeff_lambda_multiset(params: SeqParams, n: int, k: int) -> int:
    """Sum of weight products over all k-multisets of the n box weights.

    Evaluates sum over 1 <= b_1 <= ... <= b_k <= n of w(b_1) * ... * w(b_k)
    by the complete homogeneous recursion h(i, j) = h(i-1, j) + w_i * h(i, j-1);
    the value equals C(n + k - 1, k).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    weights = box_weights(params, n)
    h = [0] * (k + 1)
    h[0] = 1
    for w in weights:
        for j in range(1, k + 1):
            h[j] += w * h[j - 1]
    return h[k]


def coeff_lambda_subset(params: SeqParams, n: int, k: int) -> int:
    """Sum of weight products over all k-subsets of the n box weights.

    Evaluates sum over 1 <= b_1 < ... < b_k <= n of w(b_1) * ... * w(b_k)
    by the elementary recursion e(i, j) = e(i-1, j) + w_i * e(i-1, j-1);
    the value equals C(n, k) * (p*q)**(k*(k-1)/2), and 0 when k > n.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    weights = box_weights(params, n)
    e = [0] * (k + 1)
    e[0] = 1
    for w in weights:
        for j in range(k, 0, -1):
            e[j] += w * e[j - 1]
    return e[k]


def coeff_partial_fractions(params: SeqParams, n: int, k: int) -> Fraction:
    """C(n, k) as the alternating partial-fraction sum over the k + 1 nodes
    mu_s = q**s * p**(k-s).

    Valid for any integer n (including n < k, where the value is 0 for
    0 <= n < k, and negative n, where it is a genuine rational).  Requires
    the nodes to be pairwise distinct, so p != q and in particular no
    parameter pair with |p| == |q| or a zero parameter when k >= 2.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    p, q = params.p, params.q
    if p == q:
        raise DegenerateParametersError(f"p == q == {p}: partial fractions undefined")
    nodes = [q**s * p ** (k - s) for s in range(k + 1)]
    if len(set(nodes)) != len(nodes):
        raise DegenerateParametersError(
            f"coincident nodes {nodes} for p={p}, q={q}, k={k}"
        )
    if n < 0 and any(node == 0 for node in nodes):
        raise DegenerateParametersError("negative power of a zero node")
    total = Fraction(0)
    for i, node in enumerate(nodes):
        denominator = 1
        for j in range(i):
            denominator *= node - nodes[j]
        for j in range(i + 1, k + 1):
            denominator *= nodes[j] - node
        total += (-1) ** (k - i) * Fraction(node) ** n / denominator
    return total


def multinomial(params: SeqParams, n: int, parts: tuple[int, ...]) -> int:
    """Multinomial value as the telescoping product of coefficients.

    C(n; i_1, ..., i_r) = C(n, i_1) * C(n - i_1, i_2) * ... with the parts
    required to be nonnegative and sum to at most n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if any(part < 0 for part in parts):
        raise ValueError("parts must be nonnegative")
    if sum(parts) > n:
        raise ValueError(f"parts {parts} sum beyond n={n}")
    value = 1
    remaining = n
    for part in parts:
        value *= coeff_recurrence(params, remaining, part)
        remaining -= part
    return value


def coeff_inverse(params: SeqParams, n: int, k: int) -> int:
    """Entry (n, k) of the inverse of the lower-triangular matrix [C(n, k)].

    Computed as C(n, k) times the alternating sum, over all compositions
    (i_1, ..., i_s) of n - k, of (-1)**s * C(n - k; i_1, ..., i_s); the
    diagonal entry is 1.  Multiplying the resulting triangle against the
    coefficient triangle gives the identity matrix on either side.
    """
    _check_indices(n, k)
    if k == n:
        return 1
    r = n - k
    alternating = 0
    for s in range(1, r + 1):
        sign = -1 if s % 2 else 1
        for composition in compositions_of(r, s):
            alternating += sign * multinomial(params, r, composition.parts)
    return coeff_recurrence(params, n, k) * alternating


ROUTE_NAMES = (
    "recurrence",
    "factorial",
    "product",
    "subset",
    "multiset",
    "partial-fractions",
    "inverse",
)


def coeff_route(params: SeqParams, n: int, k: int, route: str = "recurrence") -> int | Fraction:
    """Evaluate one triangle entry by a named route.

    The subset and multiset routes normalize their weight sums back to
    C(n, k): the subset sum is divided by (p*q)**(k*(k-1)/2), which needs
    p*q != 0 once k >= 2, and the multiset sum is taken over n - k + 1
    boxes.  The partial-fraction route may return a Fraction for n < 0;
    every other route returns an int.  The inverse route returns the
    entry of the inverse triangle rather than C(n, k) itself.
    """
    if route == "recurrence":
        return coeff_recurrence(params, n, k)
    if route == "factorial":
        return coeff_factorial(params, n, k)
    if route == "product":
        return coeff_product(params, n, k)
    if route == "subset":
        shift = k * (k - 1) // 2
        weight = (params.p * params.q) ** shift
        if weight == 0:
            raise DegenerateParametersError(
                f"p*q == 0 with k={k}: subset sum vanishes identically"
            )
        return exact_div(coeff_lambda_subset(params, n, k), weight)
    if route == "multiset":
        if n < 0 or k < 0:
            raise ValueError("indices must be nonnegative")
        if n < k:
            return 0
        return coeff_lambda_multiset(params, n - k + 1, k)
    if route == "partial-fractions":
        value = coeff_partial_fractions(params, n, k)
        return int(value) if value.denominator == 1 else value
    if route == "inverse":
        return coeff_inverse(params, n, k)
    raise ValueError(f"unknown route {route!r}; expected one of {ROUTE_NAMES}")
