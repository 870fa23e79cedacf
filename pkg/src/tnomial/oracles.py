"""Brute-force combinatorial oracles.

Everything here counts or computes by direct enumeration or plain exact
linear algebra, deliberately avoiding the coefficient formulas, so that
agreement between an oracle and a formula route is evidence rather than
tautology.  Only the exact-arithmetic cores and the sequence term
functions are imported at module scope.

Enumerations carry hard input caps plus a global budget on the number of
enumerated objects, configurable through the TNOMIAL_MAX_BUDGET
environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb, prod
from typing import Callable

from .errors import BudgetExceededError, SingularMatrixError
from .report import IdentityReport, make_report
from .rings import exact_div
from .sequences import SeqParams, term_closed

DEFAULT_BUDGET = 5_000_000


def enumeration_budget() -> int:
    """Cap on enumerated objects; override with TNOMIAL_MAX_BUDGET."""
    raw = os.environ.get("TNOMIAL_MAX_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"TNOMIAL_MAX_BUDGET must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError("TNOMIAL_MAX_BUDGET must be positive")
    return value


def _check_budget(size: int, what: str) -> None:
    budget = enumeration_budget()
    if size > budget:
        raise BudgetExceededError(f"{what} would enumerate {size} objects, budget is {budget}")


@dataclass(frozen=True)
class BoxWeights:
    """Positive ball counts for a row of boxes."""

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        if any(w < 1 for w in self.weights):
            raise ValueError("box weights must be positive integers")

    @property
    def n(self) -> int:
        return len(self.weights)

    @classmethod
    def from_params(cls, params: SeqParams, n: int) -> BoxWeights:
        """Weights q**(i-1) * p**(n-i) for i = 1..n; needs p, q >= 1."""
        if params.p < 1 or params.q < 1:
            raise ValueError("box weights need p >= 1 and q >= 1")
        if n < 0:
            raise ValueError("n must be nonnegative")
        p, q = params.p, params.q
        return cls(tuple(q ** (i - 1) * p ** (n - i) for i in range(1, n + 1)))


def count_selections(boxes: BoxWeights, k: int, repetition: bool) -> int:
    """Number of ways to pick k balls, one from each chosen box.

    Enumerates every multiset (``repetition=True``) or subset of box
    indices and sums the products of the chosen boxes' weights.  Hard
    caps: at most 8 boxes and k <= 6.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = boxes.n
    if n > 8 or k > 6:
        raise BudgetExceededError(f"selection oracle capped at n <= 8, k <= 6, got n={n}, k={k}")
    if repetition:
        size = comb(n + k - 1, k) if n + k >= 1 else 1
    else:
        size = comb(n, k)
    _check_budget(size, "selection counting")
    chooser = combinations_with_replacement if repetition else combinations
    total = 0
    for indices in chooser(range(n), k):
        ways = 1
        for i in indices:
            ways *= boxes.weights[i]
        total += ways
    return total


def count_bipartite_multigraphs(alpha: int, n: int, k: int) -> int:
    """Labeled bipartite multigraphs on n vertices with a distinguished
    k-vertex side and every cross pair joined by at most alpha - 1 edges.

    Enumerates each choice of the k-set and every edge-multiplicity
    assignment explicitly.  Hard caps: n <= 5 and alpha <= 3.
    """
    if alpha < 1:
        raise ValueError("alpha must be a positive integer")
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n > 5 or alpha > 3:
        raise BudgetExceededError(f"bipartite oracle capped at n <= 5, alpha <= 3, got n={n}, alpha={alpha}")
    _check_budget(comb(n, k) * alpha ** (k * (n - k)), "bipartite counting")
    total = 0
    for side in combinations(range(n), k):
        rest = [v for v in range(n) if v not in side]
        pair_count = len(side) * len(rest)
        for _assignment in product(range(alpha), repeat=pair_count):
            total += 1
    return total


def _is_acyclic(n: int, arcs: list[tuple[int, int]]) -> bool:
    indegree = [0] * n
    outgoing: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        outgoing[u].append(v)
        indegree[v] += 1
    stack = [v for v in range(n) if indegree[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for v in outgoing[u]:
            indegree[v] -= 1
            if indegree[v] == 0:
                stack.append(v)
    return seen == n


def count_acyclic_multidigraphs(p_val: int, n: int) -> int:
    """Labeled acyclic multi-digraphs on n vertices, arc multiplicities
    in {0, ..., p_val - 1}.

    Enumerates every support digraph over the n(n-1) ordered pairs with a
    cycle check; each present arc then carries one of p_val - 1 nonzero
    multiplicities independently.  Hard cap: n <= 4.
    """
    if p_val < 2:
        raise ValueError("p_val must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 4:
        raise BudgetExceededError(f"acyclic-digraph oracle capped at n <= 4, got n={n}")
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    _check_budget(2 ** len(pairs), "acyclic-digraph counting")
    total = 0
    for present in product((0, 1), repeat=len(pairs)):
        arcs = [pair for pair, bit in zip(pairs, present) if bit]
        if _is_acyclic(n, arcs):
            total += (p_val - 1) ** len(arcs)
    return total


def count_acyclic_multidigraphs_recurrence(p_val: int, n: int) -> int:
    """Same count through inclusion-exclusion over the nonempty source set:
    a(m) = sum_{k=1..m} (-1)**(k+1) comb(m, k) p**(k*(m-k)) a(m-k), a(0) = 1."""
    if p_val < 2:
        raise ValueError("p_val must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    values = [1]
    for m in range(1, n + 1):
        total = 0
        for k in range(1, m + 1):
            sign = 1 if (k + 1) % 2 == 0 else -1
            total += sign * comb(m, k) * p_val ** (k * (m - k)) * values[m - k]
        values.append(total)
    return values[n]


@dataclass(frozen=True)
class TriMatrix:
    """Lower-triangular matrix of exact rationals; row i holds i + 1 entries."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        coerced = tuple(tuple(Fraction(entry) for entry in row) for row in self.rows)
        object.__setattr__(self, "rows", coerced)
        for i, row in enumerate(self.rows):
            if len(row) != i + 1:
                raise ValueError(f"row {i} has {len(row)} entries, expected {i + 1}")

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        if not 0 <= i < self.order or not 0 <= j < self.order:
            raise IndexError(f"entry ({i}, {j}) outside order {self.order}")
        return self.rows[i][j] if j <= i else Fraction(0)

    @classmethod
    def identity(cls, order: int) -> TriMatrix:
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(i + 1)) for i in range(order)))

    def __matmul__(self, other: TriMatrix) -> TriMatrix:
        if not isinstance(other, TriMatrix):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("order mismatch")
        rows = []
        for i in range(self.order):
            rows.append(
                tuple(
                    sum((self.rows[i][m] * other.rows[m][j] for m in range(j, i + 1)), Fraction(0))
                    for j in range(i + 1)
                )
            )
        return TriMatrix(tuple(rows))


def invert_triangular(matrix: TriMatrix) -> TriMatrix:
    """Exact inverse of a lower-triangular matrix by forward substitution."""
    order = matrix.order
    for i in range(order):
        if matrix.rows[i][i] == 0:
            raise SingularMatrixError(f"zero diagonal entry at row {i}")
    inverse: list[list[Fraction]] = []
    for i in range(order):
        row = []
        for j in range(i + 1):
            if j == i:
                row.append(1 / matrix.rows[i][i])
            else:
                acc = sum(
                    (matrix.rows[i][m] * inverse[m][j] for m in range(j, i)), Fraction(0)
                )
                row.append(-acc / matrix.rows[i][i])
        inverse.append(row)
    return TriMatrix(tuple(tuple(row) for row in inverse))


def volume_ratio(seq: SeqParams | Callable[[int], int], k: int, n: int) -> int:
    """Ratio of discrete box volumes, which is again a coefficient.

    The volume over levels k..n is the product of those terms; dividing by
    the volume of the 1..(n-k+1) box must be exact.  ``seq`` is either
    sequence parameters or a term callable on positive indices.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if isinstance(seq, SeqParams):
        term = lambda i: term_closed(seq, i)  # noqa: E731
    else:
        term = seq
    m = n - k + 1
    numerator = prod(term(s) for s in range(k, n + 1))
    denominator = prod(term(s) for s in range(1, m + 1))
    return exact_div(numerator, denominator)


def verify_inverse_relation(p_val: int, n_max: int) -> IdentityReport:
    """Check the diagonal-case inverse against the acyclic-digraph counts:
    inverse entry (n, k) must equal (-1)**(n-k) * a(n-k) * comb(n, k) *
    p**(k*(n-k)), with a() from the inclusion-exclusion recurrence."""
    # Imported here so the enumeration code paths above stay independent
    # of the coefficient formulas; this function exists to compare the two.
    from .coefficients import coeff_inverse

    if p_val < 2:
        raise ValueError("p_val must be at least 2")
    if n_max < 0 or n_max > 8:
        raise ValueError("n_max capped at 8")
    params = SeqParams(p_val, p_val)
    label = f"p=q={p_val}"
    dag_counts = [count_acyclic_multidigraphs_recurrence(p_val, r) for r in range(n_max + 1)]
    for n in range(n_max + 1):
        for k in range(n + 1):
            expected = (-1) ** (n - k) * dag_counts[n - k] * comb(n, k) * p_val ** (k * (n - k))
            actual = coeff_inverse(params, n, k)
            if actual != expected:
                ce = {"n": n, "k": k, "lhs": actual, "rhs": expected}
                return make_report("inverse-relation", label, (n_max, n_max), ce)
    return make_report("inverse-relation", label, (n_max, n_max))
