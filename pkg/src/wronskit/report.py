"""Structured pass/fail records shared by every verifier in the package."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exact check.

    ``passed`` is defined as exact equality of the rendered ``expected`` and
    ``computed`` strings, so a report can never claim success while showing a
    mismatch.  ``note`` carries side observations (empirical status, exponent
    bookkeeping) that do not affect the verdict.
    """

    check: str
    params: dict[str, Any]
    expected: str
    computed: str
    passed: bool
    millis: float
    note: str = ""

    def line(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
        out = f"{self.check} [{ps}]: expected {self.expected}, computed {self.computed} -> {verdict}"
        if self.note:
            out += f"  ({self.note})"
        return out


def finish_report(check: str, params: dict[str, Any], expected: Any, computed: Any,
                  started: float, note: str = "") -> VerificationReport:
    """Close a timed check; pass iff the two values render identically."""
    expected_s = str(expected)
    computed_s = str(computed)
    return VerificationReport(
        check=check,
        params=dict(params),
        expected=expected_s,
        computed=computed_s,
        passed=expected_s == computed_s,
        millis=(time.perf_counter() - started) * 1000.0,
        note=note,
    )
