"""Structured check results shared by the checkers, the sweep and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Literal, Optional

from . import config

Verdict = Literal["pass", "fail", "skipped", "error"]
VERDICTS = ("pass", "fail", "skipped", "error")


@dataclass
class Report:
    graph_id: str
    check: str
    verdict: Verdict
    s: Optional[int] = None
    computed: Dict[str, Any] = field(default_factory=dict)
    reason: Optional[str] = None        # machine-readable for skipped/error
    witness: Optional[Any] = None       # required for fail

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "schema": config.REPORT_SCHEMA,
            "graph_id": self.graph_id,
            "check": self.check,
            "verdict": self.verdict,
            "computed": self.computed,
        }
        if self.s is not None:
            out["s"] = self.s
        if self.reason is not None:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def verdict_of(ok: bool) -> Verdict:
    return "pass" if ok else "fail"
