"""Uniform verdict records for checks and suites.

A report is a frozen value object; suites emit lists of them and the CLI
serializes them. JSON output is deterministic (sorted keys, no whitespace
drift) so identical runs are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

STATUSES = ("holds", "fails", "inconclusive")


@dataclass(frozen=True)
class VerdictReport:
    """Outcome of one check or one suite row.

    `expected` stays True for ordinary rows; a False marks a recorded
    divergence that is kept on purpose, so suite exit codes can skip it.
    """

    claim: str
    status: str
    hypothesis_true_count: int = 0
    instance_count: int = 0
    witnesses: tuple = ()
    budget: tuple[tuple[str, object], ...] = ()
    expected: bool = True

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"status {self.status!r} not in {STATUSES}")
        if self.status == "fails" and not self.witnesses:
            raise ValueError("a failing report needs at least one witness")

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "status": self.status,
            "hypothesis_true_count": self.hypothesis_true_count,
            "instance_count": self.instance_count,
            "witnesses": _plain(self.witnesses),
            "budget": dict((k, _plain(v)) for k, v in self.budget),
            "expected": self.expected,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def suite_to_json(reports: list[VerdictReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], sort_keys=True)


def fam_tag(x) -> str:
    """Claim fragment naming a space by its open family."""
    return ",".join(str(m) for m in x.opens.members)


def pair_tag(y, z) -> str:
    """Claim fragment naming a pair; enough to replay the instance."""
    return f"y={fam_tag(y)} z={fam_tag(z)}"


def _plain(value):
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    if isinstance(value, (list, dict, str, int, float, bool)) or value is None:
        return value
    return str(value)
