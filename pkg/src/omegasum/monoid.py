"""The series-monoid interface: a carrier with a countable sum, plus the
operations every instance derives from it (subset sums, binary addition,
order witnesses).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .base import ApproxLevel, Element, TriState, as_level
from .families import (
    CountableFamily,
    FiniteSupport,
    Subset,
    finite_family,
    restrict,
)


@dataclass(frozen=True)
class SeriesMonoidDescriptor:
    """A set with a zero and a countable sum, packaged with the equality
    and sampling hooks the law harness needs.

    eq_at is three-valued: analytic carriers can only certify equality to
    a requested number of bits.  repeat_forever(x), when provided, is the
    exact value of the constantly-x sum (used for orbit tails).
    """

    name: str
    zero: Element
    sum: Callable[[CountableFamily], Element]
    eq_at: Callable[[Element, Element, ApproxLevel], TriState]
    is_zero: Callable[[Element], bool]
    sample: Callable[[random.Random], Element]
    idempotent: bool = False
    analytic: bool = False
    enum: Optional[Callable[[], Iterator[Element]]] = None
    leq_oracle: Optional[Callable[[Element, Element], tuple[TriState, Optional[Element]]]] = None
    repeat_forever: Optional[Callable[[Element], Element]] = None

    def eq(self, a: Element, b: Element, level: ApproxLevel | int) -> TriState:
        return self.eq_at(a, b, as_level(level))

    def family(self, pairs) -> FiniteSupport:
        return finite_family(pairs, self.zero, self.is_zero)

    def family_of(self, values) -> FiniteSupport:
        return finite_family(list(enumerate(values)), self.zero, self.is_zero)


def series_sum(inst: SeriesMonoidDescriptor, fam: CountableFamily) -> Element:
    return inst.sum(fam)


def sum_over_subset(
    inst: SeriesMonoidDescriptor, fam: CountableFamily, subset: Subset
) -> Element:
    """Sum of the family extended by zero off the subset."""
    return inst.sum(restrict(fam, subset, inst.zero, inst.is_zero))


def binary_add(inst: SeriesMonoidDescriptor, a: Element, b: Element) -> Element:
    """a + b as the subset sum over {1, 2}."""
    return inst.sum(inst.family([(1, a), (2, b)]))


def add_all(inst: SeriesMonoidDescriptor, values) -> Element:
    return inst.sum(inst.family_of(list(values)))


def times(inst: SeriesMonoidDescriptor, n, a: Element) -> Element:
    """n-fold sum of a; n is a natural or an ExtNat (infinity uses the
    instance's constantly-a sum)."""
    from .numbers import ExtNat

    if isinstance(n, ExtNat):
        if n.is_infinite:
            return repeat_forever(inst, a)
        n = n.n
    if n < 0:
        raise ValueError("negative multiplicity")
    result = inst.zero
    doubling = a
    while n:
        if n & 1:
            result = binary_add(inst, result, doubling)
        n >>= 1
        if n:
            doubling = binary_add(inst, doubling, doubling)
    return result


def repeat_forever(inst: SeriesMonoidDescriptor, a: Element) -> Element:
    """The sum a + a + ... (exact via the instance hook)."""
    if inst.is_zero(a):
        return inst.zero
    if inst.repeat_forever is None:
        raise ValueError(f"{inst.name} cannot sum a constant infinite family")
    return inst.repeat_forever(a)


@dataclass(frozen=True)
class WitnessOutcome:
    """Result of searching for u with a + u = b.  `disproved` distinguishes
    a definite refutation from an exhausted budget."""

    found: bool
    witness: Optional[Element] = None
    disproved: bool = False


def leq_witness(
    inst: SeriesMonoidDescriptor,
    a: Element,
    b: Element,
    search_budget: int = 1000,
    level: ApproxLevel | int = 32,
) -> WitnessOutcome:
    """Decide a <= b in the preorder (exists u with a + u = b) via the
    instance's subtraction oracle or element enumerator."""
    level = as_level(level)
    if inst.leq_oracle is not None:
        verdict, witness = inst.leq_oracle(a, b)
        if verdict is TriState.EQUAL:
            return WitnessOutcome(True, witness)
        if verdict is TriState.UNEQUAL:
            return WitnessOutcome(False, disproved=True)
        return WitnessOutcome(False)
    if inst.enum is not None:
        exhausted_all = True
        count = 0
        for u in inst.enum():
            if count >= search_budget:
                exhausted_all = False
                break
            count += 1
            if inst.eq(binary_add(inst, a, u), b, level) is TriState.EQUAL:
                return WitnessOutcome(True, u)
        return WitnessOutcome(False, disproved=exhausted_all)
    return WitnessOutcome(False)
