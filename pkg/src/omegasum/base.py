"""Shared vocabulary: approximation levels, three-valued equality, check outcomes."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

Element = Any


class Inconclusive(Exception):
    """A budgeted computation could not settle its result either way."""


@dataclass(frozen=True)
class ApproxLevel:
    """Inspection depth for semi-decidable equalities: number of dyadic
    fraction bits guaranteed / stream stages inspected."""

    bits: int

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("bits must be >= 0")


def as_level(level: ApproxLevel | int) -> ApproxLevel:
    return level if isinstance(level, ApproxLevel) else ApproxLevel(level)


class TriState(enum.Enum):
    EQUAL = "equal"
    UNEQUAL = "unequal"
    UNKNOWN = "unknown"


class Outcome(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    INVALID = "invalid-test"


@dataclass(frozen=True)
class CheckResult:
    outcome: Outcome
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASS


def from_tristate(t: TriState, context: str = "") -> CheckResult:
    if t is TriState.EQUAL:
        return CheckResult(Outcome.PASS, context)
    if t is TriState.UNEQUAL:
        return CheckResult(Outcome.FAIL, context)
    return CheckResult(Outcome.INCONCLUSIVE, context)


def merge_results(results, context: str = "") -> CheckResult:
    """Aggregate: any FAIL dominates, then INVALID, then INCONCLUSIVE."""
    results = list(results)
    for bad in (Outcome.FAIL, Outcome.INVALID, Outcome.INCONCLUSIVE):
        for r in results:
            if r.outcome is bad:
                detail = r.message or context
                return CheckResult(bad, detail)
    return CheckResult(Outcome.PASS, context)
