"""Structured pass/fail records shared by the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

__all__ = ["PASS", "FAIL", "SKIPPED", "CheckRecord", "VerificationReport"]


@dataclass
class CheckRecord:
    """One verified inequality/identity: name, status and the two sides.

    ``witness`` is present on failures and carries whatever is needed to
    replay the check (see ``suites.replay_check``); informational entries may
    use it too.
    """

    name: str
    status: str
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        d: dict[str, Any] = {
            "name": self.name,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class VerificationReport:
    suite: str
    params: dict
    seed: int
    checks: list[CheckRecord] = field(default_factory=list)
    wall_time_ms: float = 0.0

    @property
    def violations(self) -> int:
        return sum(1 for c in self.checks if c.status == FAIL)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        # key order is part of the report contract
        return {
            "suite": self.suite,
            "params": self.params,
            "seed": self.seed,
            "checks": [c.to_dict() for c in self.checks],
            "violations": self.violations,
            "wall_time_ms": self.wall_time_ms,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def summary(self) -> str:
        n_skip = sum(1 for c in self.checks if c.status == SKIPPED)
        return (
            f"{self.suite}: {len(self.checks)} checks, "
            f"{self.violations} violations, {n_skip} skipped"
        )
