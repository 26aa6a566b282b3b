"""Structured pass/fail records."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, List, Optional

PASS, FAIL, FLAGGED = "pass", "fail", "flagged"
PLUMBING = "plumbing"


@dataclass
class Check:
    name: str
    status: str
    expected: Any = None
    actual: Any = None
    anchor: str = PLUMBING

    def __post_init__(self):
        if self.status not in (PASS, FAIL, FLAGGED):
            raise ValueError(f"bad status {self.status!r}")


@dataclass
class VerificationReport:
    command: str = ""
    params: dict = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    timing_ms: float = 0.0

    def add(self, name: str, ok: Optional[bool], expected=None, actual=None, anchor: str = PLUMBING,
            flagged: bool = False) -> Check:
        status = FLAGGED if flagged or ok is None else (PASS if ok else FAIL)
        chk = Check(name, status, _plain(expected), _plain(actual), anchor)
        self.checks.append(chk)
        return chk

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.expected, c.actual, c.anchor))

    @property
    def passed(self) -> bool:
        """No failed check (flagged checks do not count as failures)."""
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "checks": [asdict(c) for c in self.checks],
            "timing_ms": self.timing_ms,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(d["command"], d["params"], [Check(**c) for c in d["checks"]], d["timing_ms"])


def _plain(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return str(x)


def emit_report(report: VerificationReport, format: str = "json") -> str:
    """Deterministic JSON (sorted keys) or a fixed-width table."""
    if format == "json":
        return json.dumps(report.to_dict(), sort_keys=True, indent=2)
    if format != "table":
        raise ValueError(f"unknown format {format!r}")
    rows = [("status", "check", "expected", "actual")]
    for c in report.checks:
        rows.append((c.status.upper(), c.name, json.dumps(c.expected), json.dumps(c.actual)))
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    lines = [f"# {report.command}  {json.dumps(report.params, sort_keys=True)}"]
    for r in rows:
        lines.append("  ".join(r[i].ljust(widths[i]) for i in range(3)) + "  " + r[3])
    return "\n".join(lines)
