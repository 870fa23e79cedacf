"""Tileable two-parameter integer sequences.

A sequence T(p, q) is defined by the ordinary generating function
``scale * x / ((1 - p*x) * (1 - q*x))``.  Its n-th term is the
homogeneous sum of q**(n-i) * p**(i-1) over i = 1..n, which collapses to
(q**n - p**n) / (q - p) for p != q and to n * q**(n-1) on the diagonal.
p = q = 1 gives the natural numbers, p = 1 the base-q repunits, and
tuning scale rescales every term by the same positive integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .rings import BiPoly, exact_div, geometric_series


@dataclass(frozen=True)
class SeqParams:
    """Sequence parameters; ``scale`` is the value of the first term."""

    p: int
    q: int
    scale: int = 1

    def __post_init__(self) -> None:
        if self.scale < 1:
            raise ValueError("scale must be a positive integer")


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive integer parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("a composition needs at least one part")
        if any(part < 1 for part in self.parts):
            raise ValueError("composition parts must be positive integers")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def term_closed(params: SeqParams, n: int) -> int:
    """n-th term via the closed form; index 0 maps to 0."""
    if n < 0:
        raise ValueError("term index must be nonnegative")
    if n == 0:
        return 0
    p, q = params.p, params.q
    if p == q:
        base = n * q ** (n - 1)
    else:
        base = exact_div(q**n - p**n, q - p)
    return params.scale * base


def term_sum(params: SeqParams, n: int) -> int:
    """n-th term as the homogeneous power sum over q**(n-i) * p**(i-1)."""
    if n < 0:
        raise ValueError("term index must be nonnegative")
    p, q = params.p, params.q
    return params.scale * sum(q ** (n - i) * p ** (i - 1) for i in range(1, n + 1))


def term_symbolic(n: int) -> BiPoly:
    """n-th term with p and q left as indeterminates (scale fixed at 1)."""
    if n < 0:
        raise ValueError("term index must be nonnegative")
    return BiPoly({(i - 1, n - i): 1 for i in range(1, n + 1)})


def term_factorial(params: SeqParams, n: int) -> int:
    """Product of the first n terms; the empty product for n = 0."""
    if n < 0:
        raise ValueError("term index must be nonnegative")
    out = 1
    for i in range(1, n + 1):
        out *= term_closed(params, i)
    return out


def gf_coefficients(params: SeqParams, count: int) -> list[int]:
    """Terms 0..count read off the generating-function expansion.

    Expands scale * x / ((1 - p*x)(1 - q*x)) as a truncated series product
    of the two geometric factors, shifted by one.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count == 0:
        return [0]
    prod = geometric_series(params.p, count) * geometric_series(params.q, count)
    return [0] + [params.scale * c for c in prod.coefficients[:count]]


def check_split_recurrence(params: SeqParams, k: int, m: int) -> bool:
    """Does term(k + m) equal p**m * term(k) + q**k * term(m)?"""
    if k < 1 or m < 1:
        raise ValueError("both split indices must be positive")
    lhs = term_closed(params, k + m)
    rhs = params.p**m * term_closed(params, k) + params.q**k * term_closed(params, m)
    return lhs == rhs


def check_composition_recurrence(params: SeqParams, composition: Composition) -> bool:
    """Does the composition-indexed expansion reproduce term(total)?

    For parts (b_1, ..., b_r) the candidate value is the sum over i of
    p**(b_{i+1} + ... + b_r) * q**(b_1 + ... + b_{i-1}) * term(b_i).
    """
    parts = composition.parts
    total = 0
    for i, part in enumerate(parts):
        p_exp = sum(parts[i + 1 :])
        q_exp = sum(parts[:i])
        total += params.p**p_exp * params.q**q_exp * term_closed(params, part)
    return total == term_closed(params, composition.total)


def compositions_of(n: int, parts: int) -> Iterator[Composition]:
    """All compositions of n into exactly ``parts`` positive parts.

    Yields in ascending lexicographic order; the count is the ordinary
    binomial coefficient of (n - 1) over (parts - 1).
    """
    if n < 1 or parts < 1:
        raise ValueError("n and parts must be positive")
    return _compositions(n, parts, ())


def _compositions(n: int, parts: int, prefix: tuple[int, ...]) -> Iterator[Composition]:
    if parts == 1:
        yield Composition(prefix + (n,))
        return
    for first in range(1, n - parts + 2):
        yield from _compositions(n - first, parts - 1, prefix + (first,))
