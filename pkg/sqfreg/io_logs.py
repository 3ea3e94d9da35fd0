# io_logs.py
# =============================================================================
# sqfreg report output:
# - JSONL report stream (stdout or a file given by --out)
# - Run summaries under <SQFR_LOGS_DIR>/runs/<run_id>.md
#
# HOW IT WORKS (high level):
# 1) A ReportSink writes one JSON object per line, keys sorted, so two runs
#    over the same input produce byte-identical output.
# 2) The sink counts verdicts as it goes; `close()` emits the summary line
#    {"summary": {"pass": .., "fail": .., "skipped": .., "error": ..}}.
# 3) write_run_summary() keeps a short human-readable note per run next to the
#    diagnostics events.
#
# Config via environment (all optional):
#       SQFR_LOGS_DIR        default: "sqfreg_logs"
# =============================================================================

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Any, Dict, Mapping, Optional

from . import config
from .report import VERDICTS, Report


def dumps(record: Mapping[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, ensure_ascii=False)


@dataclass
class ReportSink:
    """JSONL writer for reports; ``out_path=None`` means stdout."""
    out_path: Optional[str] = None
    counts: Dict[str, int] = field(default_factory=lambda: {v: 0 for v in VERDICTS})
    _fh: Optional[IO[str]] = field(default=None, init=False, repr=False)

    def __enter__(self) -> "ReportSink":
        if self.out_path:
            p = Path(self.out_path)
            p.parent.mkdir(parents=True, exist_ok=True)
            self._fh = p.open("w", encoding="utf-8")
        else:
            self._fh = sys.stdout
        return self

    def __exit__(self, *exc) -> None:
        if self._fh is not None and self._fh is not sys.stdout:
            self._fh.close()
        self._fh = None

    def write(self, record: Mapping[str, Any]) -> None:
        assert self._fh is not None, "ReportSink used outside its context"
        self._fh.write(dumps(record) + "\n")
        self._fh.flush()

    def emit(self, report: Report) -> None:
        self.counts[report.verdict] = self.counts.get(report.verdict, 0) + 1
        self.write(report.to_json())

    def summary(self) -> Dict[str, Dict[str, int]]:
        return {"summary": {v: self.counts.get(v, 0) for v in VERDICTS}}

    def close(self) -> Dict[str, Dict[str, int]]:
        """Write the summary line and return it."""
        s = self.summary()
        self.write(s)
        return s


def run_summary_path(run_id: str) -> Path:
    base = Path(config.logs_dir())
    return base / "runs" / f"{run_id}.md"


def write_run_summary(run_id: str, lines: Mapping[str, Any]) -> Optional[Path]:
    """Best-effort markdown note for a finished sweep."""
    try:
        p = run_summary_path(run_id)
        p.parent.mkdir(parents=True, exist_ok=True)
        body = [f"# sqfreg run {run_id}", ""]
        body += [f"- **{k}**: {v}" for k, v in lines.items()]
        p.write_text("\n".join(body) + "\n", encoding="utf-8")
        return p
    except Exception as e:
        print(f"[io_logs] could not write run summary: {e!r}", file=sys.stderr)
        return None
