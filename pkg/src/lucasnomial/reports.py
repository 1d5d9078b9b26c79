"""Structured pass/fail bookkeeping for identity verification runs."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import BivariatePolynomial


@dataclass(frozen=True)
class CaseResult:
    """Outcome of one identity instance: family name plus the parameters."""

    key: tuple
    label: str
    passed: bool
    lhs: BivariatePolynomial
    rhs: BivariatePolynomial

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.label}"


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    parameter_range: str
    cases: tuple[CaseResult, ...]

    @property
    def failures(self) -> tuple[CaseResult, ...]:
        return tuple(c for c in self.cases if not c.passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def cases_checked(self) -> int:
        return len(self.cases)

    def summary(self) -> str:
        return (
            f"{self.identity}: {self.cases_checked} cases over "
            f"{self.parameter_range}, {len(self.failures)} failed"
        )

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "parameter_range": self.parameter_range,
            "cases_checked": self.cases_checked,
            "passed": self.passed,
            "failures": [
                {
                    "case": c.label,
                    "lhs": c.lhs.canonical_text(),
                    "rhs": c.rhs.canonical_text(),
                }
                for c in self.failures
            ],
        }
