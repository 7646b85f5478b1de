"""Rigs inside the summation world: the subset-product operation P that
turns multiplication into a new countable sum, geometric inverses, the
logarithm monoid, and omega-indexed general associativity.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .base import (
    ApproxLevel,
    CheckResult,
    Element,
    Outcome,
    TriState,
    as_level,
    from_tristate,
    merge_results,
)
from .families import CountableFamily, FiniteSupport, materialize
from .monoid import SeriesMonoidDescriptor, binary_add
from .numbers import DYADIC_ONE, DyadicExt, LowerReal, floor_to_bits


@dataclass(frozen=True)
class RigDescriptor:
    """A summation carrier with a multiplication distributing over it.
    `one` may be None for unitless omega-style use; `commutative` False
    switches P to index-order products only."""

    base: SeriesMonoidDescriptor
    mul: Callable[[Element, Element], Element]
    one: Optional[Element] = None
    commutative: bool = True
    name: str = ""


def check_rig_laws(
    rig: RigDescriptor,
    triples: Sequence[tuple[Element, Element, Element]],
    level: ApproxLevel | int = 32,
) -> CheckResult:
    """Sampled rig axioms: associative (commutative unless flagged off)
    multiplication distributing over binary addition, with zero absorbing."""
    level = as_level(level)
    inst, mul = rig.base, rig.mul
    results = []
    for k, (a, b, c) in enumerate(triples):
        results.append(
            from_tristate(
                inst.eq(mul(mul(a, b), c), mul(a, mul(b, c)), level),
                f"mul assoc {k}",
            )
        )
        if rig.commutative:
            results.append(
                from_tristate(inst.eq(mul(a, b), mul(b, a), level), f"mul comm {k}")
            )
        lhs = mul(a, binary_add(inst, b, c))
        rhs = binary_add(inst, mul(a, b), mul(a, c))
        results.append(from_tristate(inst.eq(lhs, rhs, level), f"distrib {k}"))
        results.append(
            from_tristate(
                inst.eq(mul(a, inst.zero), inst.zero, level), f"absorb {k}"
            )
        )
        if rig.one is not None:
            results.append(
                from_tristate(inst.eq(mul(rig.one, a), a, level), f"unit {k}")
            )
    return merge_results(results, "rig laws")


def _p_fold(rig: RigDescriptor, values: Sequence[Element]) -> Element:
    """P over an explicit tuple by the recurrence
    P(x :: rest) = x + P(rest) + x * P(rest), folded right to left so
    subset products stay in index order."""
    inst = rig.base
    acc = inst.zero
    for x in reversed(values):
        acc = binary_add(inst, binary_add(inst, x, acc), rig.mul(x, acc))
    return acc


def p_sum(rig: RigDescriptor, fam: CountableFamily) -> Element:
    """Sum over all non-empty finite subsets of the products of the family.

    Exact on certified-finite support.  On an undeclared lazy family over
    an analytic carrier, the monotone limit of prefix values (valid since
    every contribution is additively non-negative)."""
    inst = rig.base
    try:
        fin = materialize(fam, inst.zero, inst.is_zero)
    except ValueError:
        fin = None
    if fin is not None:
        return _p_fold(rig, fin.values())
    if not inst.analytic:
        raise ValueError(f"lazy P over {inst.name} needs a finite-support certificate")

    prefixes: dict[int, Element] = {}

    def prefix(k: int) -> Element:
        if k not in prefixes:
            prefixes[k] = _p_fold(rig, [fam.at(i) for i in range(k + 1)])
        return prefixes[k]

    return LowerReal(lambda k: prefix(k).bound(k))


def p_sum_by_subsets(rig: RigDescriptor, fam: CountableFamily) -> Element:
    """Direct subset enumeration of the defining formula; exponential, used
    as the cross-check route for the recurrence."""
    inst = rig.base
    fin = materialize(fam, inst.zero, inst.is_zero)
    values = fin.values()
    total = inst.zero
    for n in range(1, len(values) + 1):
        for subset in itertools.combinations(values, n):
            prod = subset[0]
            for v in subset[1:]:
                prod = rig.mul(prod, v)
            total = binary_add(inst, total, prod)
    return total


def p_monoid(rig: RigDescriptor) -> SeriesMonoidDescriptor:
    """The summation structure (zero, P) induced on the rig's carrier."""
    base = rig.base
    return SeriesMonoidDescriptor(
        name=f"P-{rig.name or base.name}",
        zero=base.zero,
        sum=lambda fam: p_sum(rig, fam),
        eq_at=base.eq_at,
        is_zero=base.is_zero,
        sample=base.sample,
        analytic=base.analytic,
        leq_oracle=None,
        repeat_forever=None,
    )


# ---------------------------------------------------------------------------
# Geometric inverses in [0, inf]


def _tail_index(u: DyadicExt, a: DyadicExt, bits: int) -> int:
    """Smallest power index found by doubling with u^j <= a * 2^-bits,
    so the geometric tail after j terms is at most 2^-bits."""
    target = a * DyadicExt(1, bits)
    if u.is_zero:
        return 1
    j = 1
    p = u
    while not (p <= target):
        j *= 2
        p = p * p
        if j > 1 << 40:
            raise ValueError("geometric tail does not shrink")
    return j


def geometric_inverse(a: DyadicExt) -> LowerReal:
    """v = 1 + u + u^2 + ... for u = 1 - a, defined for dyadic 0 < a <= 1;
    then a*v = 1 (cancellation holds for finite positive values).

    The bound schedule jumps straight to the closed form: bound(k) is the
    partial geometric sum with tail below 2^-(k+2), floored to k+2 bits,
    hence within 2^-k of v (a modulus the result carries).
    """
    if a.is_infinite or a.is_zero or not (a <= DYADIC_ONE):
        raise ValueError("geometric inverse needs dyadic a with 0 < a <= 1")
    u = DYADIC_ONE.minus(a)
    if u.is_zero:
        return LowerReal.embed(DYADIC_ONE)

    def fn(k: int) -> DyadicExt:
        n = _tail_index(u, a, k + 2)
        # sum_{i <= n} u^i = (1 - u^(n+1)) / a, floored to k+2 bits
        power = u.pow(n + 1)
        partial = (Fraction(1) - power.value()) / a.value()
        return floor_to_bits(partial, k + 2)

    return LowerReal(fn, modulus=lambda k: k)


# ---------------------------------------------------------------------------
# The logarithm monoid: a fresh copy of the rig carrier whose addition is
# the rig multiplication.


@dataclass(frozen=True)
class LogElem:
    base: Element

    def __repr__(self) -> str:
        return f"log({self.base})"


def log_of(a: Element) -> LogElem:
    return LogElem(a)


def log_zero(rig: RigDescriptor) -> LogElem:
    if rig.one is None:
        raise ValueError("log monoid needs a rig unit")
    return LogElem(rig.one)


def log_bottom(rig: RigDescriptor) -> LogElem:
    """The absorbing minus-infinity element, which is log of the rig zero."""
    return LogElem(rig.base.zero)


def log_add(rig: RigDescriptor, x: LogElem, y: LogElem) -> LogElem:
    return LogElem(rig.mul(x.base, y.base))


def log_eq(rig: RigDescriptor, x: LogElem, y: LogElem, level: ApproxLevel | int = 32) -> TriState:
    return rig.base.eq(x.base, y.base, as_level(level))


def log_series_sum(
    rig: RigDescriptor,
    elems: Sequence[LogElem],
    certificates: Sequence[Element],
    level: ApproxLevel | int = 32,
) -> LogElem:
    """Countable sums of non-negative log elements: each element must come
    with its 1+u decomposition certificate, and the total is
    log(1 + P(u)) = log of the product of the factors."""
    if rig.one is None:
        raise ValueError("log series need a rig unit")
    if len(elems) != len(certificates):
        raise ValueError("one certificate per element")
    level = as_level(level)
    inst = rig.base
    for e, u in zip(elems, certificates):
        decomposed = binary_add(inst, rig.one, u)
        if inst.eq(e.base, decomposed, level) is not TriState.EQUAL:
            raise ValueError(f"{e!r} does not match its 1+u certificate")
    p = p_sum(rig, inst.family_of(list(certificates)))
    return LogElem(binary_add(inst, rig.one, p))


# ---------------------------------------------------------------------------
# Omega monoids: order-indexed products with general associativity


@dataclass(frozen=True)
class OrderPreservingMap:
    """An order-preserving self-map of omega encoded by its fibre sizes.
    Sizes list the fibres over 0, 1, ...; beyond the list every fibre is a
    singleton (an identity tail).  final_infinite marks the last listed
    fibre as a final segment, which forces a finite image."""

    fiber_sizes: tuple[int, ...]
    final_infinite: bool = False

    def __post_init__(self):
        if any(s < 0 for s in self.fiber_sizes):
            raise ValueError("fibre sizes are naturals")
        if self.final_infinite and not self.fiber_sizes:
            raise ValueError("a final infinite fibre must be listed")


@dataclass(frozen=True)
class OmegaMonoid:
    """An omega-indexed product with unit; general associativity along
    order-preserving reindexings is the law to check, not an assumption."""

    name: str
    unit: Element
    tensor: Callable[[CountableFamily], Element]
    eq_at: Callable[[Element, Element, ApproxLevel], TriState]
    is_unit: Callable[[Element], bool]
    sample: Callable[[random.Random], Element]

    def family_of(self, values) -> FiniteSupport:
        return FiniteSupport(
            tuple((i, v) for i, v in enumerate(values) if not self.is_unit(v)),
            self.unit,
        )


def omega_from_series(inst: SeriesMonoidDescriptor) -> OmegaMonoid:
    return OmegaMonoid(
        name=f"omega-{inst.name}",
        unit=inst.zero,
        tensor=inst.sum,
        eq_at=inst.eq_at,
        is_unit=inst.is_zero,
        sample=inst.sample,
    )


def omega_from_rig(rig: RigDescriptor) -> OmegaMonoid:
    base = rig.base
    return OmegaMonoid(
        name=f"omega-P-{rig.name or base.name}",
        unit=base.zero,
        tensor=lambda fam: p_sum(rig, fam),
        eq_at=base.eq_at,
        is_unit=base.is_zero,
        sample=base.sample,
    )


def omega_assoc_check(
    om: OmegaMonoid,
    fam: CountableFamily,
    xi: OrderPreservingMap,
    level: ApproxLevel | int = 32,
) -> CheckResult:
    """Tensor the fibres of xi, then tensor the results; the law asks this
    to agree with tensoring the family directly.  Off-support entries equal
    the unit here (the unit of a P-structure is the additive zero), so a
    final-infinite fibre over a finite-support family is exact."""
    level = as_level(level)
    if not isinstance(fam, FiniteSupport):
        return CheckResult(Outcome.INVALID, "family must be finite-support")
    sizes = xi.fiber_sizes
    grouped: list[Element] = []
    offset = 0
    last = len(sizes) - 1
    for idx, size in enumerate(sizes):
        if xi.final_infinite and idx == last:
            tail_indices = [i for i in fam.support() if i >= offset]
            values = [fam.at(i) for i in sorted(tail_indices)]
            grouped.append(om.tensor(om.family_of(values)))
            offset = fam.max_index() + 1
        else:
            values = [fam.at(offset + j) for j in range(size)]
            grouped.append(om.tensor(om.family_of(values)))
            offset += size
    if not xi.final_infinite:
        # identity tail: remaining entries pass through as singletons
        for i in sorted(fam.support()):
            if i >= offset:
                grouped.append(fam.at(i))
    lhs = om.tensor(om.family_of(grouped))
    rhs = om.tensor(fam)
    return from_tristate(om.eq_at(lhs, rhs, level), f"general associativity {xi}")
