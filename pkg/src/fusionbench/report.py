"""Structured pass/fail reports used by every validator and checker."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    """One named check: pass/fail, a human-readable witness on failure,
    and an optional numeric residual."""

    name: str
    passed: bool
    witness: str = ""
    residual: float | None = None

    def to_dict(self):
        d = {"name": self.name, "passed": self.passed, "witness": self.witness}
        if self.residual is not None:
            d["residual"] = self.residual
        return d


@dataclass(frozen=True)
class Report:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    @property
    def max_residual(self) -> float | None:
        residuals = [c.residual for c in self.checks if c.residual is not None]
        return max(residuals) if residuals else None

    def to_dict(self):
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            line = f"{'PASS' if c.passed else 'FAIL'}  {c.name}"
            if c.residual is not None:
                line += f"  residual={c.residual:.12g}"
            if c.witness and not c.passed:
                line += f"  [{c.witness}]"
            out.append(line)
        return out


class ReportBuilder:
    """Accumulates checks; `first_witness` style validators record only the
    first violating tuple per check."""

    def __init__(self):
        self._checks: list[Check] = []

    def add(self, name, passed, witness="", residual=None):
        if residual is not None:
            residual = float(residual)
        self._checks.append(Check(name, bool(passed), witness, residual))
        return self

    def build(self) -> Report:
        return Report(tuple(self._checks))
