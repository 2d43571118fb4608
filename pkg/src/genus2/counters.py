"""Field-operation accounting for the benchmark harness.

Counters tally coefficient-level multiplications and inversions actually
performed by the addition paths (additions and small-constant doublings
are not charged).  A counter is always passed explicitly; nothing in the
library keeps shared mutable tallies, so parallel sweeps can own one
counter per worker and merge at the end.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


@dataclass
class OpCounters:
    """Monotone tallies of field mults/invs plus a per-case histogram."""

    field_mults: int = 0
    field_invs: int = 0
    case_tally: Counter = field(default_factory=Counter)

    def add_mults(self, n: int = 1) -> None:
        self.field_mults += n

    def add_invs(self, n: int = 1) -> None:
        self.field_invs += n

    def record_case(self, label: str) -> None:
        self.case_tally[label] += 1

    def merge(self, other: "OpCounters") -> None:
        self.field_mults += other.field_mults
        self.field_invs += other.field_invs
        self.case_tally.update(other.case_tally)

    def as_dict(self) -> dict:
        return {
            "field_mults": self.field_mults,
            "field_invs": self.field_invs,
            "case_tally": dict(sorted(self.case_tally.items())),
        }
