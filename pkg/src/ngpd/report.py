"""Verdict reports with deterministic text and JSON renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS, FAIL, ERROR = "PASS", "FAIL", "ERROR"


@dataclass(frozen=True)
class Check:
    id: str
    status: str
    witness: str = ""

    def __post_init__(self):
        if self.status not in (PASS, FAIL, ERROR):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status != PASS and not self.witness:
            raise ValueError(f"check {self.id} is {self.status} without a witness")


def check(id: str, ok: bool, witness: str = "", detail: str = "") -> Check:
    """PASS/FAIL from a boolean; ``detail`` is kept on PASS, ``witness`` on FAIL."""
    return Check(id, PASS, detail) if ok else Check(id, FAIL, witness or "failed")


@dataclass(frozen=True)
class Report:
    name: str
    checks: tuple = ()
    not_checked: tuple = ()
    facts: tuple = field(default=())  # (key, value) string pairs

    @property
    def verdict(self) -> str:
        statuses = {c.status for c in self.checks}
        if ERROR in statuses:
            return ERROR
        if FAIL in statuses:
            return FAIL
        return PASS

    @property
    def ok(self) -> bool:
        return self.verdict == PASS

    def failures(self) -> tuple:
        return tuple(c for c in self.checks if c.status != PASS)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "checks": [{"id": c.id, "status": c.status, "witness": c.witness} for c in self.checks],
            "not_checked": list(self.not_checked),
            "facts": {k: v for k, v in self.facts},
        }

    def render_text(self, witness: bool = True) -> str:
        lines = [f"{self.name}: {self.verdict}"]
        for k, v in self.facts:
            lines.append(f"  {k} = {v}")
        for c in self.checks:
            line = f"  [{c.status}] {c.id}"
            if c.witness and (witness or c.status != PASS):
                line += f": {c.witness}"
            lines.append(line)
        for item in self.not_checked:
            lines.append(f"  [NOT CHECKED] {item}")
        return "\n".join(lines)

    def render_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def merge(name: str, reports, not_checked=()) -> Report:
    """Fold several reports into one, one check per sub-report verdict."""
    checks = []
    for r in reports:
        bad = r.failures()
        checks.append(Check(r.name, r.verdict,
                            "; ".join(f"{c.id}: {c.witness}" for c in bad) if bad else ""))
    return Report(name, tuple(checks), tuple(not_checked))
