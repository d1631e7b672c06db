"""Claim reports and their JSON-lines / CSV / text serialization."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bound_evaluator import render

VERIFIED = "verified"
VIOLATED = "violated"
AUDITED_PASS = "audited-pass"
AUDITED_FAIL = "audited-fail"

FAILING = {VIOLATED, AUDITED_FAIL}
CSV_COLUMNS = ("claim", "status", "parameters", "evidence", "timing")


@dataclass
class ClaimReport:
    claim: str
    status: str
    parameters: dict = field(default_factory=dict)
    evidence: dict = field(default_factory=dict)
    timing: float | None = None

    @property
    def failed(self) -> bool:
        return self.status in FAILING


def theorem(claim: str, ok: bool, parameters: dict, evidence: dict | None = None) -> ClaimReport:
    """A statement that must hold; failure means a bug or a broken input."""
    return ClaimReport(claim, VERIFIED if ok else VIOLATED, parameters, evidence or {})


def audit(claim: str, ok: bool, parameters: dict, evidence: dict | None = None) -> ClaimReport:
    """An asserted-but-unproven statement; failure is a finding, not a crash."""
    return ClaimReport(claim, AUDITED_PASS if ok else AUDITED_FAIL, parameters, evidence or {})


def plain(obj):
    """Recursively convert to JSON-safe values with a stable layout."""
    if isinstance(obj, Fraction):
        return {"value": f"{obj.numerator}/{obj.denominator}", "decimal": render(obj)}
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [plain(v) for v in sorted(obj)]
    if isinstance(obj, np.ndarray):
        return [plain(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


def _dumps(obj) -> str:
    return json.dumps(plain(obj), sort_keys=True, separators=(",", ":"))


def to_record(report: ClaimReport) -> dict:
    rec = {
        "claim": report.claim,
        "status": report.status,
        "parameters": report.parameters,
        "evidence": report.evidence,
    }
    if report.timing is not None:
        rec["timing"] = round(report.timing, 3)
    return rec


def emit(reports, fmt: str = "json") -> str:
    """Serialize reports; identical inputs give identical bytes."""
    reports = list(reports)
    if fmt == "json":
        return "".join(_dumps(to_record(r)) + "\n" for r in reports)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in reports:
            timing = "" if r.timing is None else f"{r.timing:.3f}"
            w.writerow([r.claim, r.status, _dumps(r.parameters), _dumps(r.evidence), timing])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        for r in reports:
            params = " ".join(f"{k}={_dumps(v)}" for k, v in sorted(r.parameters.items()))
            ev = _dumps(r.evidence)
            line = f"[{r.status}] {r.claim} {params} {ev}".replace("  ", " ")
            if r.timing is not None:
                line += f" ({r.timing:.3f}s)"
            lines.append(line)
        return "\n".join(lines) + ("\n" if lines else "")
    raise ValueError(f"unknown report format {fmt!r}")


def exit_status(reports) -> int:
    return 2 if any(r.failed for r in reports) else 0
