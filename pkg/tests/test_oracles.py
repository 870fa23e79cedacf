"""Brute-force counters and the exact triangular-matrix machinery."""

from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from tnomial.errors import BudgetExceededError, SingularMatrixError
from tnomial.identities import alpha_fibonacci
from tnomial.oracles import (
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
from tnomial.coefficients import coeff_recurrence
from tnomial.sequences import SeqParams

params_23 = SeqParams(2, 3)


class TestBoxWeights:
    def test_from_params(self):
        assert BoxWeights.from_params(params_23, 3).weights == (4, 6, 9)

    def test_positive_parameters_required(self):
        with pytest.raises(ValueError):
            BoxWeights.from_params(SeqParams(0, 3), 3)
        with pytest.raises(ValueError):
            BoxWeights.from_params(SeqParams(2, -1), 3)

    def test_weights_validated(self):
        with pytest.raises(ValueError):
            BoxWeights((1, 0, 2))


class TestSelections:
    def test_frozen_counts(self):
        boxes = BoxWeights.from_params(params_23, 3)
        assert count_selections(boxes, 2, repetition=True) == 247
        assert count_selections(boxes, 2, repetition=False) == 114

    def test_empty_selection(self):
        boxes = BoxWeights.from_params(params_23, 4)
        assert count_selections(boxes, 0, repetition=True) == 1
        assert count_selections(boxes, 0, repetition=False) == 1

    def test_more_picks_than_boxes(self):
        boxes = BoxWeights.from_params(SeqParams(1, 1), 2)
        assert count_selections(boxes, 3, repetition=False) == 0
        assert count_selections(boxes, 3, repetition=True) == comb(4, 3)

    def test_cap(self):
        boxes = BoxWeights.from_params(SeqParams(1, 1), 8)
        with pytest.raises(BudgetExceededError):
            count_selections(boxes, 7, repetition=False)
        with pytest.raises(BudgetExceededError):
            count_selections(BoxWeights.from_params(SeqParams(1, 1), 9), 2, repetition=False)


class TestBudget:
    def test_default(self, monkeypatch):
        monkeypatch.delenv("TNOMIAL_MAX_BUDGET", raising=False)
        assert enumeration_budget() == 5_000_000

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("TNOMIAL_MAX_BUDGET", "10")
        assert enumeration_budget() == 10
        boxes = BoxWeights.from_params(SeqParams(1, 1), 6)
        with pytest.raises(BudgetExceededError):
            count_selections(boxes, 3, repetition=False)

    def test_env_validation(self, monkeypatch):
        monkeypatch.setenv("TNOMIAL_MAX_BUDGET", "lots")
        with pytest.raises(ValueError):
            enumeration_budget()
        monkeypatch.setenv("TNOMIAL_MAX_BUDGET", "0")
        with pytest.raises(ValueError):
            enumeration_budget()


class TestBipartite:
    def test_frozen_counts(self):
        assert count_bipartite_multigraphs(2, 3, 1) == 12
        assert count_bipartite_multigraphs(2, 4, 2) == 96

    def test_closed_form(self):
        for alpha in (1, 2, 3):
            for n in range(5):
                for k in range(n + 1):
                    assert count_bipartite_multigraphs(alpha, n, k) == comb(n, k) * alpha ** (
                        k * (n - k)
                    )

    def test_cap(self):
        with pytest.raises(BudgetExceededError):
            count_bipartite_multigraphs(2, 6, 3)
        with pytest.raises(BudgetExceededError):
            count_bipartite_multigraphs(4, 4, 2)


class TestAcyclicMultidigraphs:
    def test_frozen_base_counts(self):
        assert [count_acyclic_multidigraphs(2, n) for n in range(5)] == [1, 1, 3, 25, 543]

    def test_higher_multiplicity(self):
        assert count_acyclic_multidigraphs(3, 2) == 5
        assert count_acyclic_multidigraphs(3, 3) == 109
        assert count_acyclic_multidigraphs(3, 4) == 9449

    def test_recurrence_matches_brute_force(self):
        for p_val in (2, 3):
            for n in range(5):
                assert count_acyclic_multidigraphs_recurrence(
                    p_val, n
                ) == count_acyclic_multidigraphs(p_val, n)

    def test_recurrence_extends_past_cap(self):
        assert count_acyclic_multidigraphs_recurrence(2, 5) == 29281

    def test_cap(self):
        with pytest.raises(BudgetExceededError):
            count_acyclic_multidigraphs(2, 5)


class TestTriMatrix:
    def test_entries_become_fractions(self):
        m = TriMatrix(((1,), (2, 3)))
        assert m.entry(1, 0) == Fraction(2)
        assert isinstance(m.rows[1][1], Fraction)

    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            TriMatrix(((1,), (2, 3, 4)))

    def test_identity_and_matmul(self):
        m = TriMatrix(((1,), (5, 1), (7, 2, 1)))
        eye = TriMatrix.identity(3)
        assert m @ eye == m
        assert eye @ m == m

    def test_inversion_is_two_sided(self):
        triangle = TriMatrix(
            tuple(tuple(coeff_recurrence(params_23, n, k) for k in range(n + 1)) for n in range(7))
        )
        inverse = invert_triangular(triangle)
        eye = TriMatrix.identity(7)
        assert triangle @ inverse == eye
        assert inverse @ triangle == eye

    def test_singular_rejected(self):
        with pytest.raises(SingularMatrixError):
            invert_triangular(TriMatrix(((1,), (2, 0))))


class TestVolumeRatio:
    def test_frozen_value(self):
        assert volume_ratio(SeqParams(1, 2), 3, 4) == 35

    def test_matches_triangle(self):
        for p in range(1, 4):
            for q in range(1, 4):
                params = SeqParams(p, q)
                for n in range(1, 8):
                    for k in range(1, n + 1):
                        assert volume_ratio(params, k, n) == coeff_recurrence(
                            params, n, n - k + 1
                        )

    def test_accepts_a_term_callable(self):
        fib = lambda n: alpha_fibonacci(1, n)
        assert volume_ratio(fib, 2, 5) == 5

    def test_index_validation(self):
        with pytest.raises(ValueError):
            volume_ratio(params_23, 0, 4)
        with pytest.raises(ValueError):
            volume_ratio(params_23, 5, 4)


class TestInverseRelation:
    def test_holds(self):
        assert verify_inverse_relation(2, 8).holds
        assert verify_inverse_relation(3, 6).holds

    def test_bounds_validated(self):
        with pytest.raises(ValueError):
            verify_inverse_relation(1, 4)
        with pytest.raises(ValueError):
            verify_inverse_relation(2, 9)
