"""Verification report records shared by the checking operations."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerifyReport:
    """Outcome of one verification run; failures are reported, not raised."""

    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_payload(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}
