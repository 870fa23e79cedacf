"""Sequence terms, their factorials and the splitting recurrences."""

from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tnomial.sequences import (
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

params_23 = SeqParams(2, 3)

param_ints = st.integers(-4, 4)
indices = st.integers(0, 10)


class TestTerms:
    def test_frozen_values(self):
        assert [term_closed(params_23, n) for n in range(6)] == [0, 1, 5, 19, 65, 211]

    def test_sum_route_agrees(self):
        for p in range(-3, 4):
            for q in range(-3, 4):
                params = SeqParams(p, q)
                for n in range(9):
                    assert term_sum(params, n) == term_closed(params, n)

    def test_diagonal_closed_form(self):
        params = SeqParams(3, 3)
        assert [term_closed(params, n) for n in range(5)] == [0, 1, 6, 27, 108]

    def test_scale_multiplies_terms(self):
        scaled = SeqParams(2, 3, scale=4)
        assert [term_closed(scaled, n) for n in range(4)] == [0, 4, 20, 76]

    def test_gf_route_agrees(self):
        for p, q in ((2, 3), (1, 1), (-2, 3), (0, 5), (2, 2)):
            params = SeqParams(p, q)
            assert gf_coefficients(params, 8) == [term_closed(params, n) for n in range(9)]

    def test_gf_respects_scale(self):
        assert gf_coefficients(SeqParams(2, 3, scale=2), 3) == [0, 2, 10, 38]

    @given(param_ints, param_ints, indices)
    def test_symbolic_term_evaluates_to_closed_form(self, p, q, n):
        assert term_symbolic(n).eval(p, q) == term_closed(SeqParams(p, q), n)

    def test_symbolic_term_is_homogeneous(self):
        for n in range(1, 8):
            poly = term_symbolic(n)
            assert poly.is_homogeneous(n - 1)
            assert poly.swap_vars() == poly

    def test_factorial_frozen(self):
        assert term_factorial(params_23, 0) == 1
        assert term_factorial(params_23, 4) == 1 * 5 * 19 * 65

    def test_factorial_scale(self):
        assert term_factorial(SeqParams(2, 3, scale=2), 3) == (2 * 1) * (2 * 5) * (2 * 19)

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            term_closed(params_23, -1)


class TestParams:
    def test_scale_must_be_positive(self):
        with pytest.raises(ValueError):
            SeqParams(2, 3, scale=0)
        with pytest.raises(ValueError):
            SeqParams(2, 3, scale=-1)

    def test_frozen(self):
        with pytest.raises(AttributeError):
            params_23.p = 5


class TestSplitRecurrence:
    @given(param_ints, param_ints, st.integers(0, 8), st.integers(0, 8))
    def test_identity_holds_everywhere(self, p, q, k, m):
        params = SeqParams(p, q)
        lhs = term_closed(params, k + m)
        rhs = p**m * term_closed(params, k) + q**k * term_closed(params, m)
        assert lhs == rhs

    @given(param_ints, param_ints, st.integers(1, 8), st.integers(1, 8))
    def test_checker_agrees(self, p, q, k, m):
        assert check_split_recurrence(SeqParams(p, q), k, m)

    def test_checker_rejects_zero_indices(self):
        with pytest.raises(ValueError):
            check_split_recurrence(params_23, 0, 3)

    @given(param_ints, param_ints, st.lists(st.integers(1, 4), min_size=1, max_size=4))
    def test_composition_form_holds(self, p, q, parts):
        assert check_composition_recurrence(SeqParams(p, q), Composition(tuple(parts)))


class TestCompositions:
    def test_lexicographic_order(self):
        got = [c.parts for c in compositions_of(4, 2)]
        assert got == [(1, 3), (2, 2), (3, 1)]

    def test_count(self):
        for n in range(1, 9):
            for parts in range(1, n + 1):
                assert sum(1 for _ in compositions_of(n, parts)) == comb(n - 1, parts - 1)

    def test_parts_sum_and_positivity(self):
        for c in compositions_of(6, 3):
            assert c.total == 6
            assert len(c) == 3
            assert all(part >= 1 for part in c.parts)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            list(compositions_of(3, 0))
        with pytest.raises(ValueError):
            list(compositions_of(0, 1))

    def test_more_parts_than_total_is_empty(self):
        assert list(compositions_of(2, 3)) == []

    def test_composition_validation(self):
        with pytest.raises(ValueError):
            Composition(())
        with pytest.raises(ValueError):
            Composition((1, 0, 2))
        assert Composition([2, 1]).parts == (2, 1)
