"""Verification suites, reports and the command line interface."""

from .checks import REGISTRY, SUITES, TABLE, Check, Context, checks_for
from .cli import main
from .report import CheckResult, VerificationReport, render_report, run_suite, to_dict

__all__ = [
    "REGISTRY", "SUITES", "TABLE", "Check", "CheckResult", "Context", "VerificationReport",
    "checks_for", "main", "render_report", "run_suite", "to_dict",
]
