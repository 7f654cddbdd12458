"""Verification reports and the coefficient comparison behind them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .series import SeriesError, TruncatedSeries

PASS = "pass"
FAIL = "fail"


@dataclass
class VerificationReport:
    """Outcome of one claim.

    ``status`` is derived from ``counterexamples`` so the two cannot disagree.
    Composite claims keep their pieces in ``parts``; their counterexamples
    are folded into the parent.
    """

    claim: str
    range_checked: int
    counterexamples: list[tuple[int, int, int]] = field(default_factory=list)
    modulus: int = 0
    statement: str = ""
    parts: list[VerificationReport] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return FAIL if self.counterexamples else PASS

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def first_failure(self) -> int | None:
        return min((c[0] for c in self.counterexamples), default=None)

    def to_dict(self, name: str | None = None) -> dict:
        return {
            "name": name or self.claim,
            "paper_ref": self.statement or self.claim,
            "modulus": self.modulus,
            "range": self.range_checked,
            "status": self.status,
            # decimal strings, like every other coefficient we emit
            "counterexamples": [[n, str(x), str(y)] for n, x, y in self.counterexamples],
            "notes": list(self.notes),
        }

    def line(self) -> str:
        text = f"{self.status.upper():4}  {self.claim}  (range {self.range_checked}, mod {self.modulus or 'exact'})"
        if self.counterexamples:
            text += f"  first failure at n={self.first_failure}"
        return text


def combine(claim: str, parts: Sequence[VerificationReport], statement: str = "") -> VerificationReport:
    ces = [c for p in parts for c in p.counterexamples]
    return VerificationReport(
        claim=claim,
        range_checked=min((p.range_checked for p in parts), default=0),
        counterexamples=ces,
        modulus=max((p.modulus for p in parts), default=0),
        statement=statement,
        parts=list(parts),
        notes=[n for p in parts for n in p.notes],
    )


def compare_series(
    claim: str,
    lhs: TruncatedSeries,
    rhs: TruncatedSeries,
    modulus: int = 0,
    upto: int | None = None,
    statement: str = "",
    max_counterexamples: int = 20,
) -> VerificationReport:
    """Coefficient-wise comparison; modulus 0 means exact equality."""
    if modulus == 1 or modulus < 0:
        raise SeriesError(f"modulus must be 0 or >= 2, got {modulus}")
    n = min(lhs.order, rhs.order) if upto is None else upto
    if n > min(lhs.order, rhs.order):
        raise SeriesError(f"cannot compare {n} coefficients of orders {lhs.order}, {rhs.order}")
    bad = []
    for i in range(n):
        x, y = lhs[i], rhs[i]
        diff = x - y
        if (diff % modulus if modulus else diff) != 0:
            bad.append((i, x, y))
            if len(bad) >= max_counterexamples:
                break
    return VerificationReport(claim, n, bad, modulus, statement)


def check_indices(
    claim: str,
    values: dict[int, int] | Sequence[tuple[int, int]],
    modulus: int,
    range_checked: int,
    statement: str = "",
    max_counterexamples: int = 20,
) -> VerificationReport:
    """Every (index, value) pair must vanish modulo ``modulus``."""
    items = values.items() if isinstance(values, dict) else values
    bad = []
    for idx, v in items:
        if v % modulus:
            bad.append((idx, v, 0))
            if len(bad) >= max_counterexamples:
                break
    return VerificationReport(claim, range_checked, bad, modulus, statement)
