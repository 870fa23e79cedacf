"""Expansion and verification of the coefficient identities.

Three families of product generating functions tie the coefficients to
the box weights w_i = q**(i-1) * p**(n-i):

* subset form: prod (1 - w_i x), whose x**k coefficient is the signed
  elementary weight sum (-1)**k (pq)**C(k,2) C(n, k);
* multiset form: prod 1/(1 - w_i x), whose x**k coefficient is the
  complete weight sum C(n + k - 1, k);
* split form: prod (p**(i-1) - q**(i-1) x), with x**k coefficient
  (-1)**k q**C(k,2) p**C(n-k,2) C(n, k).

On top of these sit the binomial-like expansion of weighted products of
linear forms in (x, y), the orthogonality of the subset and multiset
series (their product is 1), a Vandermonde-style convolution in two
exponent variants, an alternating partial-fraction sum that collapses to
1, and the classical specializations: Gaussian coefficients with their
interpolation basis, and generalized Fibonomial coefficients checked
inside the quadratic ring Z[t]/(t^2 - alpha*t - 1).

Every expansion function asserts the expected coefficients as it goes and
raises IdentityViolation on the first mismatch.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .coefficients import (
    box_weights,
    coeff_inverse,
    coeff_partial_fractions,
    coeff_recurrence,
    coeff_symbolic,
)
from .errors import DegenerateParametersError, IdentityViolation
from .report import IdentityReport, make_report
from .rings import BiPoly, QuadElem, XSeries, exact_div, geometric_series, series_product
from .sequences import SeqParams


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


def _coeff_or_zero(params: SeqParams, n: int, k: int) -> int:
    return coeff_recurrence(params, n, k) if 0 <= k <= n else 0


def expand_subset_gf(n: int, params: SeqParams | None = None, order: int | None = None) -> XSeries:
    """Expand prod_{i=1..n} (1 - w_i x) and assert its coefficients.

    With ``params=None`` the expansion runs over Z[p, q] and is compared
    against the symbolic coefficients; otherwise over the integers.
    Coefficients beyond degree n must vanish.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if order is None:
        order = n + 1
    if params is None:
        one: BiPoly | int = BiPoly.one()
        weights = [BiPoly.monomial(n - i, i - 1) for i in range(1, n + 1)]
    else:
        one = 1
        weights = box_weights(params, n)
    factors = [XSeries([one, -w], order, zero=one * 0) for w in weights]
    series = series_product(factors, order, one=one)
    for k in range(order):
        if k > n:
            expected: BiPoly | int = one * 0
        elif params is None:
            expected = (-1) ** k * BiPoly.monomial(_binom2(k), _binom2(k)) * coeff_symbolic(n, k)
        else:
            expected = (-1) ** k * (params.p * params.q) ** _binom2(k) * coeff_recurrence(params, n, k)
        if series[k] != expected:
            raise IdentityViolation("subset-gf", (n, k), series[k], expected)
    return series


def expand_multiset_gf(n: int, order: int, params: SeqParams | None = None) -> XSeries:
    """Expand prod_{i=1..n} 1/(1 - w_i x) to ``order`` and assert coefficients.

    Each reciprocal factor is expanded as the geometric series before
    multiplication; coefficient k must equal C(n + k - 1, k).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if order < 1:
        raise ValueError("order must be positive")
    if params is None:
        one: BiPoly | int = BiPoly.one()
        weights = [BiPoly.monomial(n - i, i - 1) for i in range(1, n + 1)]
    else:
        one = 1
        weights = box_weights(params, n)
    factors = [geometric_series(w, order) for w in weights]
    series = series_product(factors, order, one=one)
    for k in range(order):
        if params is None:
            expected: BiPoly | int = coeff_symbolic(n + k - 1, k)
        else:
            expected = coeff_recurrence(params, n + k - 1, k)
        if series[k] != expected:
            raise IdentityViolation("multiset-gf", (n, k), series[k], expected)
    return series


def expand_split_gf(n: int, params: SeqParams | None = None, order: int | None = None) -> XSeries:
    """Expand prod_{i=1..n} (p**(i-1) - q**(i-1) x) and assert coefficients.

    Coefficient k must equal (-1)**k q**C(k,2) p**C(n-k,2) C(n, k).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if order is None:
        order = n + 1
    if params is None:
        one: BiPoly | int = BiPoly.one()
        factors = [
            XSeries([BiPoly.monomial(i - 1, 0), -BiPoly.monomial(0, i - 1)], order, zero=BiPoly.zero())
            for i in range(1, n + 1)
        ]
    else:
        one = 1
        p, q = params.p, params.q
        factors = [XSeries([p ** (i - 1), -(q ** (i - 1))], order, zero=0) for i in range(1, n + 1)]
    series = series_product(factors, order, one=one)
    for k in range(order):
        if k > n:
            expected: BiPoly | int = one * 0
        elif params is None:
            expected = (-1) ** k * BiPoly.monomial(_binom2(n - k), _binom2(k)) * coeff_symbolic(n, k)
        else:
            expected = (
                (-1) ** k
                * params.q ** _binom2(k)
                * params.p ** _binom2(n - k)
                * coeff_recurrence(params, n, k)
            )
        if series[k] != expected:
            raise IdentityViolation("split-gf", (n, k), series[k], expected)
    return series


def binomial_like(n: int, form: str = "y_weights", params: SeqParams | None = None) -> bool:
    """Verify the binomial-like expansion of a weighted product of linear forms.

    Both forms are homogeneous of degree n in (x, y), so the product is
    represented as a series in x alone; the x**(n-k) coefficient carries an
    implicit y**k.

    * ``"y_weights"``: prod_{i=1..n} (x + p**(n-i) q**(i-1) y); the
      x**(n-k) coefficient must be C(n, k) * q**C(k,2) * p**C(k,2).
    * ``"split"``: prod_{i=0..n-1} (p**i x + q**i y); the x**(n-k)
      coefficient must be C(n, k) * q**C(k,2) * p**C(n-k,2).

    Returns True; raises IdentityViolation at the first mismatched k.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if form not in ("y_weights", "split"):
        raise ValueError(f"unknown form {form!r}")
    order = n + 1
    symbolic = params is None
    if symbolic:
        one: BiPoly | int = BiPoly.one()
        if form == "y_weights":
            factors = [
                XSeries([BiPoly.monomial(n - i, i - 1), one], order, zero=BiPoly.zero())
                for i in range(1, n + 1)
            ]
        else:
            factors = [
                XSeries([BiPoly.monomial(0, i), BiPoly.monomial(i, 0)], order, zero=BiPoly.zero())
                for i in range(n)
            ]
    else:
        one = 1
        p, q = params.p, params.q
        if form == "y_weights":
            factors = [XSeries([p ** (n - i) * q ** (i - 1), 1], order, zero=0) for i in range(1, n + 1)]
        else:
            factors = [XSeries([q**i, p**i], order, zero=0) for i in range(n)]
    series = series_product(factors, order, one=one)
    for k in range(n + 1):
        # x**(n-k) coefficient, i.e. the y**k slot of the homogeneous expansion
        actual = series[n - k]
        if symbolic:
            q_exp = _binom2(k)
            p_exp = _binom2(k) if form == "y_weights" else _binom2(n - k)
            expected: BiPoly | int = BiPoly.monomial(p_exp, q_exp) * coeff_symbolic(n, k)
        else:
            p, q = params.p, params.q
            p_exp = _binom2(k) if form == "y_weights" else _binom2(n - k)
            expected = q ** _binom2(k) * p**p_exp * coeff_recurrence(params, n, k)
        if actual != expected:
            raise IdentityViolation(f"binomial-like/{form}", (n, k), actual, expected)
    return True


def orthogonality(params: SeqParams, n: int, s: int) -> bool:
    """Check that the subset and multiset series annihilate each other.

    Evaluates the alternating convolution
    sum_{k=0..s} (-1)**k (pq)**C(k,2) C(n, k) C(n+s-k-1, n-1) directly,
    confirms the same coefficient through the truncated series product,
    and for s = n additionally evaluates the reversed arrangement
    sum_{k=0..n} C(n+k-1, k) (-1)**(n-k) (pq)**C(n-k,2) C(n, k).
    Returns False on any nonzero value.
    """
    if n < 1 or s < 1:
        raise ValueError("n and s must be positive")
    p, q = params.p, params.q
    direct = sum(
        (-1) ** k
        * (p * q) ** _binom2(k)
        * _coeff_or_zero(params, n, k)
        * coeff_recurrence(params, n + s - k - 1, n - 1)
        for k in range(s + 1)
    )
    ok = direct == 0
    order = s + 1
    product = expand_subset_gf(n, params, order) * expand_multiset_gf(n, order, params)
    ok = ok and product[0] == 1 and product[s] == 0
    if s == n:
        reversed_form = sum(
            coeff_recurrence(params, n + k - 1, k)
            * (-1) ** (n - k)
            * (p * q) ** _binom2(n - k)
            * coeff_recurrence(params, n, k)
            for k in range(n + 1)
        )
        ok = ok and reversed_form == 0
    return ok


def vandermonde_terms(params: SeqParams, n: int, m: int, k: int) -> tuple[int, int, int]:
    """Left side and both right-side variants of the convolution identity.

    Returns (C(n+m, k), proof-exponent sum, plain-exponent sum) where the
    summand is p**E * q**((n-s)(k-s)) * C(n, s) * C(m, k-s) with
    E = (m+s-k)*s for the proof-exponent variant and E = m+s-k for the
    plain one.  Only the proof-exponent variant is an identity.
    """
    if n < 0 or m < 0 or k < 0 or k > n + m:
        raise ValueError("need 0 <= k <= n + m")
    p, q = params.p, params.q
    lhs = coeff_recurrence(params, n + m, k)
    rhs_proof = 0
    rhs_plain = 0
    for s in range(max(0, k - m), min(k, n) + 1):
        base = (
            coeff_recurrence(params, n, s)
            * coeff_recurrence(params, m, k - s)
            * q ** ((n - s) * (k - s))
        )
        rhs_proof += p ** ((m + s - k) * s) * base
        rhs_plain += p ** (m + s - k) * base
    return lhs, rhs_proof, rhs_plain


def vandermonde(params: SeqParams, n: int, m: int, k: int) -> IdentityReport:
    """Report on the convolution identity at one point, both variants.

    The adopted reading uses exponent (m+s-k)*s; the report's status
    reflects it.  The plain-exponent reading is evaluated alongside and
    its outcome recorded in the notes, counterexample included.
    """
    lhs, rhs_proof, rhs_plain = vandermonde_terms(params, n, m, k)
    label = f"p={params.p} q={params.q}"
    counterexample = None
    if rhs_proof != lhs:
        counterexample = {"n": n, "m": m, "k": k, "lhs": lhs, "rhs": rhs_proof}
    if rhs_plain == lhs:
        note = f"plain-exponent variant also holds at n={n}, m={m}, k={k}"
    else:
        note = (
            f"plain-exponent variant fails at n={n}, m={m}, k={k}: "
            f"{rhs_plain} != {lhs}"
        )
    return make_report("vandermonde", label, (max(n, m), k), counterexample, (note,))


def equal1_check(params: SeqParams, k: int) -> bool:
    """Does the alternating partial-fraction sum at n = k collapse to 1?"""
    return coeff_partial_fractions(params, k, k) == 1


def alpha_fibonacci(alpha: int, n: int) -> int:
    """n-th generalized Fibonacci number: f(0) = 0, f(1) = 1,
    f(n) = alpha * f(n-1) + f(n-2)."""
    if alpha < 1:
        raise ValueError("alpha must be a positive integer")
    if n < 0:
        raise ValueError("index must be nonnegative")
    prev, cur = 1, 0
    for _ in range(n):
        prev, cur = cur, alpha * cur + prev
    return cur


def fibonomial(alpha: int, n: int, k: int) -> int:
    """Fibonomial coefficient: the ratio of generalized Fibonacci factorials."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")

    def factorial(m: int) -> int:
        out = 1
        for i in range(1, m + 1):
            out *= alpha_fibonacci(alpha, i)
        return out

    return exact_div(factorial(n), factorial(k) * factorial(n - k))


def fibonomial_suite(alpha: int, n_max: int) -> IdentityReport:
    """Verify the Fibonomial identity family up to n_max.

    (a) sequence splitting: f(k+m) = f(m-1) f(k) + f(k+1) f(m);
    (b) triangle recurrence: C(n,k) = f(n-k-1) C(n-1,k-1) + f(k+1) C(n-1,k)
        against the factorial ratio;
    (c) in Z[t]/(t^2 - alpha*t - 1), with u = t and v = alpha - t, the
        product prod_{s=1..n} (1 - v**(s-1) u**(n-s) x) expands with
        t-free coefficients equal to (-1)**C(k+1,2) C(n, k).
    """
    if alpha < 1 or n_max < 1:
        raise ValueError("alpha and n_max must be positive")
    label = f"alpha={alpha}"
    fib = [alpha_fibonacci(alpha, i) for i in range(n_max + 2)]

    for n in range(2, n_max + 1):
        for k in range(1, n):
            m = n - k
            if fib[n] != fib[m - 1] * fib[k] + fib[k + 1] * fib[m]:
                ce = {"n": n, "k": k, "lhs": fib[n], "rhs": fib[m - 1] * fib[k] + fib[k + 1] * fib[m]}
                return make_report("fibonomial", label, (n_max, n_max), ce)

    for n in range(1, n_max + 1):
        for k in range(1, n):
            m = n - k
            recurrence = fib[m - 1] * fibonomial(alpha, n - 1, k - 1) + fib[k + 1] * fibonomial(
                alpha, n - 1, k
            )
            direct = fibonomial(alpha, n, k)
            if recurrence != direct:
                ce = {"n": n, "k": k, "lhs": direct, "rhs": recurrence}
                return make_report("fibonomial", label, (n_max, n_max), ce)

    u = QuadElem.root(alpha)
    v = QuadElem.conjugate_root(alpha)
    one = QuadElem.from_int(1, alpha)
    for n in range(1, n_max + 1):
        weights = [v ** (s - 1) * u ** (n - s) for s in range(1, n + 1)]
        factors = [XSeries([one, -w], n + 1, zero=one * 0) for w in weights]
        series = series_product(factors, n + 1, one=one)
        for k in range(n + 1):
            coefficient = series[k]
            expected = (-1) ** _binom2(k + 1) * fibonomial(alpha, n, k)
            if not coefficient.is_integer() or coefficient.a != expected:
                ce = {"n": n, "k": k, "lhs": str(coefficient), "rhs": expected}
                return make_report("fibonomial", label, (n_max, n_max), ce)

    return make_report("fibonomial", label, (n_max, n_max))


def gaussian_explicit(q_val: int, n: int, k: int) -> int:
    """Gaussian coefficient via the alternating explicit sum.

    Evaluates sum_{i=0..k} (-1)**i q**((k-i)(n-i) - C(k-i,2)) /
    (prod_{j=1..i} (q**j - 1) * prod_{j=1..k-i} (q**j - 1)) in exact
    rationals, asserts integrality and agreement with the coefficient at
    p = 1, and returns the integer.
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if q_val == 1:
        raise DegenerateParametersError("q = 1 zeroes the denominators")
    if q_val == -1 and k >= 2:
        raise DegenerateParametersError("q = -1 zeroes the denominators for k >= 2")
    total = Fraction(0)
    for i in range(k + 1):
        denominator = 1
        for j in range(1, i + 1):
            denominator *= q_val**j - 1
        for j in range(1, k - i + 1):
            denominator *= q_val**j - 1
        exponent = (k - i) * (n - i) - _binom2(k - i)
        total += (-1) ** i * Fraction(q_val**exponent, denominator)
    if total.denominator != 1:
        raise IdentityViolation("gaussian-explicit", (q_val, n, k), total, "an integer")
    value = total.numerator
    reference = coeff_recurrence(SeqParams(1, q_val), n, k)
    if value != reference:
        raise IdentityViolation("gaussian-explicit", (q_val, n, k), value, reference)
    return value


def gaussian_inverse_entry(q_val: int, n: int, k: int) -> int:
    """Entry (n, k) of the inverse Gaussian triangle:
    (-1)**(n-k) * q**C(n-k,2) * C(n, k) at p = 1."""
    return (-1) ** (n - k) * q_val ** _binom2(n - k) * coeff_recurrence(SeqParams(1, q_val), n, k)


def gaussian_basis_check(q_val: int, n: int) -> bool:
    """Check the interpolation-basis expansions at p = 1.

    With Phi_k(x) = prod_{s=0..k-1} (x - q**s):
    (a) expanding Phi_n gives the inverse-triangle entries
        (-1)**(n-j) q**C(n-j,2) C(n, j) as x**j coefficients, and
    (b) sum_{k=0..n} C(n, k) Phi_k(x) reassembles x**n exactly.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    params = SeqParams(1, q_val)
    order = n + 1

    def phi(k: int) -> XSeries:
        factors = [XSeries([-(q_val**s), 1], order, zero=0) for s in range(k)]
        return series_product(factors, order, one=1)

    phi_n = phi(n)
    for j in range(n + 1):
        if phi_n[j] != gaussian_inverse_entry(q_val, n, j):
            return False

    assembled = XSeries([0], order, zero=0)
    for k in range(n + 1):
        assembled = assembled + phi(k).scale(coeff_recurrence(params, n, k))
    monomial = XSeries([0] * n + [1], order, zero=0)
    return assembled == monomial
