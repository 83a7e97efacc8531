"""Verification reports: named checks with expected value, computed value and provenance."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

TAGS = ("PUBLISHED", "DERIVED", "TRIVIAL")


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any
    tag: str
    passed: bool
    report_only: bool = False
    seconds: float = 0.0

    @property
    def status(self) -> str:
        if self.report_only:
            return "INFO"
        return "PASS" if self.passed else "FAIL"

    def as_dict(self, timings: bool = True) -> dict:
        d = {
            "name": self.name,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "tag": self.tag,
            "passed": self.passed,
            "report_only": self.report_only,
            "status": self.status,
        }
        if timings:
            d["seconds"] = round(self.seconds, 6)
        return d


def _jsonable(v):
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def _text(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_text(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ",".join(f"{k}:{_text(x)}" for k, x in v.items()) + "}"
    return str(v)


@dataclass
class VerificationReport:
    command: str
    metadata: Dict[str, Any] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    figures: List[str] = field(default_factory=list)

    def add(self, name, expected, computed, tag, passed=None, report_only=False, seconds=0.0) -> Check:
        if tag not in TAGS:
            raise ValueError(f"unknown provenance tag {tag!r}")
        if passed is None:
            passed = computed == expected
        c = Check(name, expected, computed, tag, bool(passed), report_only, seconds)
        self.checks.append(c)
        return c

    def run(
        self,
        name: str,
        expected,
        compute: Callable[[], Any],
        tag: str,
        report_only: bool = False,
        compare: Optional[Callable[[Any, Any], bool]] = None,
    ) -> Check:
        """Time ``compute()`` and record it; exceptions become failed checks."""
        t0 = time.perf_counter()
        try:
            value = compute()
            passed = compare(value, expected) if compare else value == expected
        except Exception as exc:  # a check that crashes is a failed check
            value = f"error: {type(exc).__name__}: {exc}"
            passed = False
        return self.add(name, expected, value, tag, passed, report_only, time.perf_counter() - t0)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks if not c.report_only)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self, timings: bool = True) -> str:
        doc = {
            "command": self.command,
            "metadata": _jsonable(self.metadata),
            "checks": [c.as_dict(timings) for c in self.checks],
            "figures": list(self.figures),
            "passed": self.ok,
        }
        if timings:
            doc["total_seconds"] = round(sum(c.seconds for c in self.checks), 6)
        return json.dumps(doc, sort_keys=True, indent=2)

    def to_text(self, timings: bool = True) -> str:
        lines = [f"# command\t{self.command}"]
        for k in sorted(self.metadata):
            lines.append(f"# {k}\t{_text(self.metadata[k])}")
        header = ["status", "check", "expected", "computed", "provenance"]
        if timings:
            header.append("seconds")
        lines.append("\t".join(header))
        for c in self.checks:
            row = [c.status, c.name, _text(c.expected), _text(c.computed), f"[{c.tag}]"]
            if timings:
                row.append(f"{c.seconds:.4f}")
            lines.append("\t".join(row))
        for f in self.figures:
            lines.append(f"# figure\t{f}")
        n_fail = sum(1 for c in self.checks if not c.passed and not c.report_only)
        n_req = sum(1 for c in self.checks if not c.report_only)
        lines.append(f"# result\t{'PASS' if self.ok else 'FAIL'}\t{n_req - n_fail}/{n_req} required checks passed")
        return "\n".join(lines) + "\n"
