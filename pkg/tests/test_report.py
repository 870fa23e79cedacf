"""Report record invariants and serialization."""

from __future__ import annotations

import pytest

from tnomial.report import IdentityReport, make_report


def test_status_counterexample_consistency():
    with pytest.raises(ValueError):
        IdentityReport("x", "grid", (3, 3), "fails", None)
    with pytest.raises(ValueError):
        IdentityReport("x", "grid", (3, 3), "holds", {"n": 1})
    with pytest.raises(ValueError):
        IdentityReport("x", "grid", (3, 3), "maybe", None)


def test_make_report_infers_status():
    assert make_report("x", "grid", (3, 3)).holds
    failing = make_report("x", "grid", (3, 3), {"n": 1, "lhs": 2, "rhs": 3})
    assert not failing.holds
    assert failing.status == "fails"


def test_to_dict_stringifies_numbers():
    report = make_report("x", "grid", (4, 5), {"n": 1, "lhs": 2, "rhs": 3}, ("note",))
    d = report.to_dict()
    assert d["n_max"] == "4"
    assert d["k_max"] == "5"
    assert d["counterexample"] == {"n": "1", "lhs": "2", "rhs": "3"}
    assert d["notes"] == ["note"]


def test_holds_report_serializes_null_counterexample():
    d = make_report("x", "grid", (1, 1)).to_dict()
    assert d["counterexample"] is None
    assert d["status"] == "holds"
