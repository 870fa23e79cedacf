"""Verification outcome record shared by the identity and oracle suites."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IdentityReport:
    """Result of sweeping one identity over a parameter and index range.

    ``first_counterexample`` maps location labels (``n``, ``k``, ``p``, ...)
    and the two mismatched sides (``lhs``, ``rhs``) to their values; it is
    present exactly when ``status`` is ``"fails"``.  ``notes`` carries
    informational findings that do not affect the status, e.g. a documented
    counterexample to a rejected variant of the identity.
    """

    identity_id: str
    params: str
    bounds: tuple[int, int]
    status: str
    first_counterexample: dict | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.status not in ("holds", "fails"):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == "fails") != (self.first_counterexample is not None):
            raise ValueError("status 'fails' must come with a counterexample and 'holds' without")

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def to_dict(self) -> dict:
        """JSON-friendly dict with every number rendered as a decimal string."""
        ce = None
        if self.first_counterexample is not None:
            ce = {key: str(value) for key, value in self.first_counterexample.items()}
        return {
            "identity": self.identity_id,
            "params": self.params,
            "n_max": str(self.bounds[0]),
            "k_max": str(self.bounds[1]),
            "status": self.status,
            "counterexample": ce,
            "notes": list(self.notes),
        }


def make_report(
    identity_id: str,
    params: str,
    bounds: tuple[int, int],
    counterexample: dict | None = None,
    notes: tuple[str, ...] = (),
) -> IdentityReport:
    status = "fails" if counterexample is not None else "holds"
    return IdentityReport(identity_id, params, bounds, status, counterexample, tuple(notes))
