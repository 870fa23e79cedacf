"""Sweep drivers: every suite must hold on reduced bounds, and the
dispatchers must reject unknown names."""

from __future__ import annotations

import pytest

from tnomial.suites import (
    IDENTITY_SUITES,
    ORACLE_SUITES,
    pq_grid,
    run_oracle,
    run_verify,
    sample_grid,
    vandermonde_suite,
)


def test_grid_shape():
    grid = pq_grid()
    assert len(grid) == 49
    assert (-2, -2) in grid and (4, 4) in grid
    assert pq_grid(1, 3) == [(p, q) for p in (1, 2, 3) for q in (1, 2, 3)]


def test_sample_grid_deterministic():
    grid = pq_grid()
    assert sample_grid(grid, 5, seed=1) == sample_grid(grid, 5, seed=1)
    assert len(sample_grid(grid, 5, seed=1)) == 5
    assert sample_grid(grid, 500, seed=1) == grid


def test_every_identity_suite_holds_small():
    small = pq_grid(-1, 2)
    for name in IDENTITY_SUITES:
        for report in run_verify(name, grid=small, n_max=4):
            assert report.holds, (name, report.first_counterexample)


def test_every_oracle_suite_holds_small():
    for name in ORACLE_SUITES:
        for report in run_oracle(name, n_max=4):
            assert report.holds, (name, report.first_counterexample)


def test_vandermonde_notes_document_rejected_variant():
    report = vandermonde_suite()
    assert report.holds
    assert any("fails" in note for note in report.notes)
    assert any("interior" in note for note in report.notes)


def test_unknown_names_rejected():
    with pytest.raises(ValueError):
        run_verify("numerology")
    with pytest.raises(ValueError):
        run_oracle("numerology")
