"""Halving structure: orbit sums of endomorphisms, Zeno verification, the
free magnitude module as normalized coefficient codes, binary expansions,
and the derived scalar action and multiplication on [0, inf].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .base import (
    ApproxLevel,
    CheckResult,
    Element,
    Inconclusive,
    Outcome,
    as_level,
    from_tristate,
    merge_results,
)
from .families import Lazy
from .laws import check_morphism
from .monoid import SeriesMonoidDescriptor, binary_add, repeat_forever, times
from .numbers import (
    DYADIC_INF,
    DYADIC_ONE,
    DYADIC_ZERO,
    DyadicExt,
    EXTNAT_INF,
    EXTNAT_ZERO,
    ExtNat,
    LowerReal,
    as_lower,
)


@dataclass(frozen=True)
class Endo:
    """An endomorphism of one instance's carrier; expected to preserve zero
    and commute with the sum (verify with laws.check_morphism)."""

    inst: SeriesMonoidDescriptor
    fn: Callable[[Element], Element]
    name: str = ""

    def __call__(self, a: Element) -> Element:
        return self.fn(a)


ORBIT_BUDGET = 512


def orbit_sum(endo: Endo, a: Element, budget: int = ORBIT_BUDGET) -> Element:
    """The sum f(a) + f(f(a)) + ... of the forward orbit.

    Analytic carriers get the lazy limit.  Exact carriers resolve via the
    orbit itself: a zero iterate truncates the sum, a cycle contributes the
    constantly-repeating tail exactly, and anything unresolved within the
    budget raises Inconclusive.
    """
    inst = endo.inst
    if inst.analytic:
        memo: dict[int, Element] = {0: a}

        def iterate(n: int) -> Element:
            if n in memo:
                return memo[n]
            k = n
            while k not in memo:
                k -= 1
            v = memo[k]
            for j in range(k + 1, n + 1):
                v = endo(v)
                memo[j] = v
            return v

        return inst.sum(Lazy(lambda n: iterate(n + 1)))

    prefix: list[Element] = []
    seen: dict = {}
    x = a
    for _ in range(budget):
        x = endo(x)
        if inst.is_zero(x):
            return inst.sum(inst.family_of(prefix))
        if x in seen:
            cycle = prefix[seen[x]:]
            head = inst.sum(inst.family_of(prefix))
            for c in set(cycle):
                head = binary_add(inst, head, repeat_forever(inst, c))
            return head
        seen[x] = len(prefix)
        prefix.append(x)
    raise Inconclusive(f"orbit of {endo.name or 'endo'} unresolved after {budget} steps")


def check_orbit_equation(
    endo: Endo, samples: Sequence[Element], level: ApproxLevel | int = 32
) -> CheckResult:
    """f(a) + f(orbit_sum(a)) agrees with orbit_sum(a) on the samples."""
    level = as_level(level)
    inst = endo.inst
    results = []
    for i, a in enumerate(samples):
        try:
            t = orbit_sum(endo, a)
            lhs = binary_add(inst, endo(a), endo(t))
        except Inconclusive as exc:
            results.append(CheckResult(Outcome.INCONCLUSIVE, str(exc)))
            continue
        results.append(from_tristate(inst.eq(lhs, t, level), f"sample {i}"))
    return merge_results(results, "orbit equation")


def zeno_verify(
    endo: Endo, samples: Sequence[Element], level: ApproxLevel | int = 32
) -> CheckResult:
    """Halving laws on the samples: h(a) + h(a) = a, and the orbit sum of
    h returns a itself."""
    level = as_level(level)
    inst = endo.inst
    results = []
    for i, a in enumerate(samples):
        half = endo(a)
        doubled = binary_add(inst, half, half)
        results.append(from_tristate(inst.eq(doubled, a, level), f"h+h at {i}"))
        try:
            t = orbit_sum(endo, a)
        except Inconclusive as exc:
            results.append(CheckResult(Outcome.INCONCLUSIVE, str(exc)))
            continue
        results.append(from_tristate(inst.eq(t, a, level), f"orbit sum at {i}"))
    return merge_results(results, f"zeno check for {endo.name or 'endo'}")


def halve(x: DyadicExt | LowerReal):
    """The halving map on [0, inf]: m/2^e -> m/2^(e+1), inf -> inf; on a
    lower real every bound is halved."""
    return x.halve()


def halving_endo(inst: SeriesMonoidDescriptor) -> Endo:
    return Endo(inst, lambda x: x.halve(), "halve")


def identity_endo(inst: SeriesMonoidDescriptor) -> Endo:
    return Endo(inst, lambda x: x, "identity")


def zero_endo(inst: SeriesMonoidDescriptor) -> Endo:
    return Endo(inst, lambda x: inst.zero, "zero")


# ---------------------------------------------------------------------------
# The free magnitude module: finite-support codes over generators chi_n
# (chi_n carrying weight 2^-n), normalized by upward carry propagation.


@dataclass(frozen=True)
class FormalMagnitude:
    """Finite-support coefficients N -> ExtNat on the halving generators."""

    coeffs: tuple[tuple[int, ExtNat], ...]

    @staticmethod
    def of(mapping: dict[int, ExtNat | int]) -> "FormalMagnitude":
        items = []
        for n, c in mapping.items():
            if n < 0:
                raise ValueError("negative generator index")
            if isinstance(c, int):
                c = ExtNat(c)
            if not c.is_zero:
                items.append((n, c))
        return FormalMagnitude(tuple(sorted(items)))

    def coeff(self, n: int) -> ExtNat:
        for i, c in self.coeffs:
            if i == n:
                return c
        return EXTNAT_ZERO

    @property
    def is_infinite_form(self) -> bool:
        return self.coeffs == ((0, EXTNAT_INF),)


FORMAL_ZERO = FormalMagnitude(())
FORMAL_INF = FormalMagnitude(((0, EXTNAT_INF),))


def chi(n: int) -> FormalMagnitude:
    return FormalMagnitude.of({n: 1})


def formal_add(x: FormalMagnitude, y: FormalMagnitude) -> FormalMagnitude:
    acc: dict[int, ExtNat] = {}
    for n, c in x.coeffs + y.coeffs:
        acc[n] = acc.get(n, EXTNAT_ZERO) + c
    return FormalMagnitude.of(acc)


def formal_normalize(x: FormalMagnitude) -> FormalMagnitude:
    """Canonical representative under the halving congruence: a pair at
    position n+1 carries up to one at position n, leaving coefficients in
    {0, 1} beyond position 0; an infinite coefficient anywhere collapses to
    the infinity-marked form."""
    if any(c.is_infinite for _, c in x.coeffs):
        return FORMAL_INF
    work = {n: c.n for n, c in x.coeffs}
    top = max(work, default=0)
    for n in range(top, 0, -1):
        c = work.get(n, 0)
        if c >= 2:
            work[n - 1] = work.get(n - 1, 0) + c // 2
            work[n] = c % 2
    return FormalMagnitude.of({n: ExtNat(c) for n, c in work.items()})


def formal_value(x: FormalMagnitude) -> DyadicExt:
    """Evaluation along generator n -> 2^-n, with infinity absorbing."""
    if any(c.is_infinite for _, c in x.coeffs):
        return DYADIC_INF
    total = DYADIC_ZERO
    for n, c in x.coeffs:
        total = total + DyadicExt(c.n, n)
    return total


def formal_halve(x: FormalMagnitude) -> FormalMagnitude:
    """The successor-induced halving on codes (generator shift)."""
    if x.is_infinite_form:
        return FORMAL_INF
    return FormalMagnitude(tuple((n + 1, c) for n, c in x.coeffs))


def formal_congruent(x: FormalMagnitude, y: FormalMagnitude) -> bool:
    return formal_normalize(x) == formal_normalize(y)


# ---------------------------------------------------------------------------
# Binary expansions


@dataclass(frozen=True)
class BinaryExpansion:
    """integer part plus the positions of 1-bits after the point; a set
    ones_from marks an all-ones tail from that position on (the
    non-terminating rewrite)."""

    integer: ExtNat
    positions: tuple[int, ...]
    ones_from: Optional[int] = None

    def __post_init__(self):
        prev = 0
        for p in self.positions:
            if p <= prev:
                raise ValueError("positions must be strictly increasing and positive")
            prev = p
        if self.ones_from is not None and self.ones_from <= prev:
            raise ValueError("all-ones tail must start after the listed positions")


def binary_expand(x: DyadicExt, nonterminating: bool = False) -> BinaryExpansion:
    """Exact expansion of a finite dyadic.  The non-terminating form
    rewrites the last 1-bit via 1.000... = 0.111..., so zero is rejected
    there (it has no such form)."""
    if x.is_infinite:
        raise ValueError("infinity has no binary expansion")
    m, e = x.num, x.exp
    integer = m >> e
    rest = m - (integer << e)
    positions = [j for j in range(1, e + 1) if (rest >> (e - j)) & 1]
    if not nonterminating:
        return BinaryExpansion(ExtNat(integer), tuple(positions))
    if x.is_zero:
        raise ValueError("zero has no non-terminating expansion")
    if positions:
        last = positions.pop()
        return BinaryExpansion(ExtNat(integer), tuple(positions), ones_from=last + 1)
    return BinaryExpansion(ExtNat(integer - 1), (), ones_from=1)


def expansion_value(b: BinaryExpansion) -> DyadicExt:
    """Exact evaluation: an all-ones tail from j contributes 2^-(j-1)."""
    if b.integer.is_infinite:
        return DYADIC_INF
    total = DyadicExt(b.integer.n, 0)
    for p in b.positions:
        total = total + DyadicExt(1, p)
    if b.ones_from is not None:
        total = total + DyadicExt(1, b.ones_from - 1)
    return total


def render_expansion(b: BinaryExpansion, max_digits: int = 24) -> str:
    """Text form: "<int> + 0.<bits> pos:[...]" with an ellipsis for an
    all-ones tail."""
    if not b.positions and b.ones_from is None:
        return str(b.integer)
    limit = b.positions[-1] if b.positions else 0
    if b.ones_from is not None:
        limit = max(limit, b.ones_from + 2)
    limit = min(max(limit, 1), max_digits)
    bits = []
    for j in range(1, limit + 1):
        one = j in b.positions or (b.ones_from is not None and j >= b.ones_from)
        bits.append("1" if one else "0")
    tail = "…" if (b.ones_from is not None or limit < (b.positions[-1] if b.positions else 0)) else ""
    pos = ",".join(str(p) for p in b.positions)
    if b.ones_from is not None:
        pos = f"{pos},ones>={b.ones_from}" if pos else f"ones>={b.ones_from}"
    return f"{b.integer} + 0.{''.join(bits)}{tail} pos:[{pos}]"


# ---------------------------------------------------------------------------
# Scalar action of [0, inf] on any carrier with a verified halving


@dataclass(frozen=True)
class ZenoModule:
    """A carrier together with a Zeno endomorphism that passed verification."""

    inst: SeriesMonoidDescriptor
    half: Endo
    verified: bool


def verify_zeno_module(
    inst: SeriesMonoidDescriptor,
    half: Endo,
    samples: Sequence[Element],
    level: ApproxLevel | int = 32,
) -> ZenoModule:
    morph = check_morphism(half.fn, inst, inst, [inst.family_of(list(samples))], level)
    zeno = zeno_verify(half, samples, level)
    ok = morph.outcome is Outcome.PASS and zeno.outcome is Outcome.PASS
    return ZenoModule(inst, half, ok)


def iterate_endo(endo: Endo, a: Element, n: int) -> Element:
    for _ in range(n):
        a = endo(a)
    return a


def scalar_action(
    alpha: DyadicExt | BinaryExpansion, a: Element, module: ZenoModule
) -> Element:
    """alpha . a: the integer part as an iterated sum plus one halving
    orbit term per 1-bit of alpha; an all-ones tail from j contributes
    h^(j-1)(a) (the tail is a full halving orbit, which sums back to the
    element)."""
    if not module.verified:
        raise ValueError("scalar action needs a verified Zeno structure")
    inst, h = module.inst, module.half
    if isinstance(alpha, DyadicExt) and alpha.is_infinite:
        return repeat_forever(inst, a)
    b = alpha if isinstance(alpha, BinaryExpansion) else binary_expand(alpha)
    terms = [times(inst, b.integer, a)]
    for p in b.positions:
        terms.append(iterate_endo(h, a, p))
    if b.ones_from is not None:
        terms.append(iterate_endo(h, a, b.ones_from - 1))
    return inst.sum(inst.family_of(terms))


def mul_extended(alpha, beta):
    """Multiplication on [0, inf]: exact on dyadics (zero absorbs, even
    against infinity); lower reals multiply stagewise."""
    if isinstance(alpha, DyadicExt) and isinstance(beta, DyadicExt):
        return alpha * beta
    return as_lower(alpha) * as_lower(beta)


def check_action_laws(
    module: ZenoModule,
    scalars: Sequence[DyadicExt],
    samples: Sequence[Element],
    level: ApproxLevel | int = 32,
) -> CheckResult:
    """Module laws at the approximation level: 1.a = a, (s+t).a = s.a + t.a,
    s.(a+b) = s.a + s.b, and on dyadic pairs s.(t.a) = (st).a."""
    level = as_level(level)
    inst = module.inst
    results = []
    for i, a in enumerate(samples):
        results.append(
            from_tristate(
                inst.eq(scalar_action(DYADIC_ONE, a, module), a, level),
                f"unit on {i}",
            )
        )
    pairs = list(zip(scalars, scalars[1:] + scalars[:1]))
    for i, ((s, t), a) in enumerate(zip(pairs, samples)):
        lhs = scalar_action(s + t, a, module)
        rhs = binary_add(
            inst, scalar_action(s, a, module), scalar_action(t, a, module)
        )
        results.append(from_tristate(inst.eq(lhs, rhs, level), f"scalar add {i}"))
        if not (s.is_infinite or t.is_infinite):
            lhs = scalar_action(s, scalar_action(t, a, module), module)
            rhs = scalar_action(s * t, a, module)
            results.append(
                from_tristate(inst.eq(lhs, rhs, level), f"scalar mul {i}")
            )
    for i, (s, (a, b)) in enumerate(zip(scalars, zip(samples, samples[1:] + samples[:1]))):
        lhs = scalar_action(s, binary_add(inst, a, b), module)
        rhs = binary_add(
            inst, scalar_action(s, a, module), scalar_action(s, b, module)
        )
        results.append(from_tristate(inst.eq(lhs, rhs, level), f"distributes {i}"))
    return merge_results(results, "action laws")
