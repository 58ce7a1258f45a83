"""Check records and their serializations."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, List, Optional


@dataclass
class CheckResult:
    check: str
    params: dict
    status: str  # "pass" or "fail"
    slice: Optional[dict] = None
    cap: Optional[int] = None
    detail: Any = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"check": self.check, "params": self.params, "slice": self.slice,
                "cap": self.cap, "status": self.status, "detail": self.detail}


def status(ok: bool) -> str:
    return "pass" if ok else "fail"


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def results_json(results: Iterable[CheckResult]) -> str:
    return dumps([r.to_json() for r in results])


def results_csv(results: Iterable[CheckResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check", "params", "slice", "cap", "status", "detail"])
    for r in results:
        w.writerow([r.check, json.dumps(r.params, sort_keys=True),
                    json.dumps(r.slice, sort_keys=True) if r.slice is not None else "",
                    "" if r.cap is None else r.cap, r.status,
                    json.dumps(r.detail, sort_keys=True, ensure_ascii=False)])
    return buf.getvalue()


def results_text(results: List[CheckResult]) -> str:
    lines = []
    for r in results:
        where = f" {r.slice}" if r.slice else ""
        cap = f" cap={r.cap}" if r.cap is not None else ""
        lines.append(f"[{r.status.upper()}] {r.check} {r.params}{where}{cap}")
        if not r.ok or isinstance(r.detail, str):
            lines.append(f"    {r.detail}")
    return "\n".join(lines) + "\n"
