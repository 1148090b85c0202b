"""Pass/fail tables for the reproduction checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import SkewGoppaError


@dataclass
class Check:
    name: str
    expected: str
    actual: str
    ok: bool


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, expected: object, actual: object, ok: bool | None = None) -> bool:
        expected, actual = str(expected), str(actual)
        passed = expected == actual if ok is None else ok
        self.checks.append(Check(name, expected, actual, passed))
        return passed

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            line = f"{'PASS' if c.ok else 'FAIL'}  {c.name}"
            if not c.ok:
                line += f"\n      expected: {c.expected}\n      actual:   {c.actual}"
            out.append(line)
        return out


def guarded(build: Callable[[Report, dict], None], constants: dict) -> Report:
    """Run the checks; an exception becomes one failing check instead of a crash."""
    rep = Report()
    try:
        build(rep, constants)
    except (SkewGoppaError, ArithmeticError, LookupError, ValueError) as exc:
        rep.add("computation completes", "no error", f"{type(exc).__name__}: {exc}", False)
    return rep
