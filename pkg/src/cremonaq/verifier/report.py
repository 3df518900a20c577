"""Running suites and rendering reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .checks import ERRATUM, FAIL, PASS, TABLE, Context, Check, checks_for


@dataclass(frozen=True)
class CheckResult:
    id: str
    paper_ref: str
    expected: Any
    actual: Any
    status: str
    runtime_ms: float


@dataclass
class VerificationReport:
    suite: str
    seed: int
    checks: list = field(default_factory=list)

    def summary(self) -> dict[str, int]:
        counts = {PASS: 0, FAIL: 0, ERRATUM: 0}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        return not any(c.status == FAIL for c in self.checks)

    def table(self) -> list[dict]:
        by_id = {c.id: c for c in self.checks}
        rows = []
        for row in TABLE:
            if row.check_id in by_id:
                rows.append({"surface": row.surface, "structure": row.structure,
                             "order": row.order, "status": by_id[row.check_id].status})
        return rows


def _plain(x):
    """JSON-friendly copy: Fractions and other scalars become strings, dict keys strings."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


def run_check(check: Check, ctx: Context) -> CheckResult:
    start = time.perf_counter()
    try:
        actual = check.compute(ctx)
    except Exception as exc:  # a crashing check is a failing check
        actual = f"error: {type(exc).__name__}: {exc}"
    ms = round((time.perf_counter() - start) * 1000, 3)
    expected, actual = _plain(check.expected), _plain(actual)
    if expected == actual:
        status = PASS
    elif check.erratum and not str(actual).startswith("error:"):
        status = ERRATUM
    else:
        status = FAIL
    return CheckResult(check.id, check.paper_ref, expected, actual, status, ms)


def run_suite(selection: str, seed: int = 1, cap: int = 100_000) -> VerificationReport:
    ctx = Context(seed, cap)
    results = [run_check(c, ctx) for c in checks_for(selection)]
    results.sort(key=lambda r: r.id)
    return VerificationReport(selection, seed, results)


def to_dict(report: VerificationReport) -> dict:
    return {
        "suite": report.suite,
        "seed": report.seed,
        "checks": [
            {"id": c.id, "paper_ref": c.paper_ref, "expected": c.expected, "actual": c.actual,
             "status": c.status, "runtime_ms": c.runtime_ms}
            for c in report.checks
        ],
        "table": report.table(),
    }


def _cell(x) -> str:
    text = x if isinstance(x, str) else json.dumps(x, ensure_ascii=False)
    return text.replace("|", "\\|")


def render_markdown(report: VerificationReport) -> str:
    lines = ["| Surface | Structure | Order | Status |", "|---|---|---|---|"]
    for row in report.table():
        lines.append(f"| {row['surface']} | {row['structure']} | {row['order']} | {row['status']} |")
    if report.checks:
        s = report.summary()
        lines += ["", f"Suite `{report.suite}`, seed {report.seed}: "
                      f"{s[PASS]} pass, {s[FAIL]} fail, {s[ERRATUM]} erratum-note", "",
                  "| Check | Expected | Actual | Status |", "|---|---|---|---|"]
        for c in report.checks:
            lines.append(f"| {c.id} | {_cell(c.expected)} | {_cell(c.actual)} | {c.status} |")
    return "\n".join(lines) + "\n"


def render_report(report: VerificationReport, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(to_dict(report), indent=2, ensure_ascii=False) + "\n"
    if fmt in ("md", "markdown"):
        return render_markdown(report)
    raise ValueError(f"unknown format {fmt!r}")
