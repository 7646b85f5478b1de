"""Concrete summation carriers: extended naturals, the exact dyadic core,
lower-approximated [0, inf], countable-sup lattices, biproducts, and free
instances with their generator evaluation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .base import ApproxLevel, CheckResult, Element, TriState, as_level, from_tristate, merge_results
from .families import CountableFamily, FiniteSupport, Lazy
from .monoid import SeriesMonoidDescriptor, times
from .numbers import (
    DYADIC_INF,
    DYADIC_ZERO,
    DyadicExt,
    EXTNAT_INF,
    EXTNAT_ZERO,
    ExtNat,
    LowerReal,
)

DEFAULT_SCAN_BUDGET = 4096

# eq_at for lower reals inspects this many stages beyond the requested
# bits, so that diagonal summation schedules have caught up with every
# desk-scale support index before the tolerance comparison.
EQ_DEPTH_MARGIN = 16


@dataclass(frozen=True)
class SumOutcome:
    """A budgeted sum: the value reached and whether it is exact."""

    value: Element
    exact: bool


def exact_eq(a: Element, b: Element, level: ApproxLevel) -> TriState:
    return TriState.EQUAL if a == b else TriState.UNEQUAL


# ---------------------------------------------------------------------------
# Extended naturals


def extnat_sum_outcome(
    fam: CountableFamily, budget: int = DEFAULT_SCAN_BUDGET
) -> SumOutcome:
    """Sum over N u {inf}: the arithmetic total on certified-finite support,
    infinity on an infinite-support claim or an infinite entry; otherwise a
    budgeted scan returning a partial lower bound."""
    if isinstance(fam, FiniteSupport):
        total = EXTNAT_ZERO
        for _, v in fam.entries:
            total = total + v
        return SumOutcome(total, True)
    assert isinstance(fam, Lazy)
    if fam.infinite_support:
        # Infinitely many non-zero extended naturals, each at least 1.
        return SumOutcome(EXTNAT_INF, True)
    total = EXTNAT_ZERO
    limit = fam.support_bound if fam.support_bound is not None else budget
    for n in range(limit):
        v = fam.at(n)
        if v.is_infinite:
            return SumOutcome(EXTNAT_INF, True)
        total = total + v
    return SumOutcome(total, fam.support_bound is not None)


def extnat_sum(fam: CountableFamily, budget: int = DEFAULT_SCAN_BUDGET) -> ExtNat:
    return extnat_sum_outcome(fam, budget).value


def _extnat_sample(rnd: random.Random) -> ExtNat:
    if rnd.random() < 0.08:
        return EXTNAT_INF
    return ExtNat(rnd.randrange(0, 50))


def _extnat_leq(a: ExtNat, b: ExtNat):
    u = b.minus(a)
    if u is None:
        return (TriState.UNEQUAL, None)
    return (TriState.EQUAL, u)


def extnat_monoid() -> SeriesMonoidDescriptor:
    return SeriesMonoidDescriptor(
        name="extnat",
        zero=EXTNAT_ZERO,
        sum=extnat_sum,
        eq_at=exact_eq,
        is_zero=lambda a: a.is_zero,
        sample=_extnat_sample,
        leq_oracle=_extnat_leq,
        repeat_forever=lambda a: EXTNAT_ZERO if a.is_zero else EXTNAT_INF,
    )


def extnat_monoid_alt() -> SeriesMonoidDescriptor:
    """Same carrier and zero, independent summation route (scans entries
    highest index first).  Used to exercise the two-structure agreement law."""

    def sum_alt(fam: CountableFamily) -> ExtNat:
        if isinstance(fam, FiniteSupport):
            total = EXTNAT_ZERO
            for _, v in reversed(fam.entries):
                total = total + v
            return total
        return extnat_sum(fam)

    base = extnat_monoid()
    return SeriesMonoidDescriptor(
        name="extnat-alt",
        zero=base.zero,
        sum=sum_alt,
        eq_at=base.eq_at,
        is_zero=base.is_zero,
        sample=base.sample,
        leq_oracle=base.leq_oracle,
        repeat_forever=base.repeat_forever,
    )


# ---------------------------------------------------------------------------
# Exact dyadic core of [0, inf]: sums are exact on certified-finite
# support and rejected otherwise (the analytic carrier handles the rest).


def dyadic_sum(fam: CountableFamily) -> DyadicExt:
    if isinstance(fam, Lazy):
        if fam.infinite_support:
            return DYADIC_INF
        if fam.support_bound is None:
            raise ValueError("dyadic core sums need a finite-support certificate")
        entries = [fam.at(n) for n in range(fam.support_bound)]
    else:
        entries = [v for _, v in fam.entries]
    total = DYADIC_ZERO
    for v in entries:
        total = total + v
    return total


def _dyadic_sample(rnd: random.Random) -> DyadicExt:
    if rnd.random() < 0.05:
        return DYADIC_INF
    return DyadicExt(rnd.randrange(0, 256), rnd.randrange(0, 9))


def _dyadic_leq(a: DyadicExt, b: DyadicExt):
    u = b.minus(a)
    if u is None:
        return (TriState.UNEQUAL, None)
    return (TriState.EQUAL, u)


def dyadic_core() -> SeriesMonoidDescriptor:
    return SeriesMonoidDescriptor(
        name="dyadic",
        zero=DYADIC_ZERO,
        sum=dyadic_sum,
        eq_at=exact_eq,
        is_zero=lambda a: a.is_zero,
        sample=_dyadic_sample,
        leq_oracle=_dyadic_leq,
        repeat_forever=lambda a: DYADIC_ZERO if a.is_zero else DYADIC_INF,
    )


# ---------------------------------------------------------------------------
# Lower reals: the analytic realization of [0, inf]


def lower_real_sum(
    fam: CountableFamily, tail: Optional[Callable[[int], int]] = None
) -> LowerReal:
    """Diagonal schedule: bound(k) sums the first k+1 entries' k-th bounds.
    Monotone by non-negativity; exhaustive, so the supremum is the true sum.

    `tail` is an optional summable-tail certificate for lazy input:
    tail(k) returns N with the entries beyond index N summing to at most
    2^-k.  With it, and a modulus on every entry, the result carries a
    modulus."""

    def fn(k: int) -> DyadicExt:
        total = DYADIC_ZERO
        if isinstance(fam, FiniteSupport):
            for i, v in fam.entries:
                if i <= k:
                    total = total + v.bound(k)
        else:
            for i in range(k + 1):
                total = total + fam.at(i).bound(k)
        return total

    modulus = None
    exact = None
    if isinstance(fam, Lazy) and tail is not None:

        def modulus(k: int) -> int:
            n = tail(k + 1)
            want = k + 1 + (n + 1).bit_length()
            j = n
            for i in range(n + 1):
                m = fam.at(i).modulus
                if m is None:
                    raise ValueError("tail certificate needs moduli on every entry")
                j = max(j, m(want))
            return j

    if isinstance(fam, FiniteSupport):
        if all(v.exact is not None for _, v in fam.entries):
            total = DYADIC_ZERO
            for _, v in fam.entries:
                total = total + v.exact
            exact = total
            top = fam.max_index()
            modulus = lambda k: top if top >= 0 else 0
        elif all(v.modulus is not None for _, v in fam.entries):
            entries = fam.entries
            top = fam.max_index()
            n = len(entries)
            extra = max(1, n).bit_length()

            def modulus(k: int) -> int:
                j = top
                for _, v in entries:
                    j = max(j, v.modulus(k + extra))
                return j

    elif isinstance(fam, Lazy) and fam.support_bound is not None:
        entries = [fam.at(i) for i in range(fam.support_bound)]
        if all(v.exact is not None for v in entries):
            total = DYADIC_ZERO
            for v in entries:
                total = total + v.exact
            exact = total
            top = max(fam.support_bound - 1, 0)
            modulus = lambda k: top
    return LowerReal(fn, modulus=modulus, exact=exact)


def lower_real_approx(x: LowerReal, level: ApproxLevel | int) -> DyadicExt:
    """The stage-`bits` lower bound; with a modulus it is within 2^-bits."""
    return x.bound(as_level(level).bits)


def lower_eq(a: LowerReal, b: LowerReal, level: ApproxLevel) -> TriState:
    """Verified-to-k-bits equality.  Exact tags compare exactly; otherwise
    the inspected bounds must agree within 2^-bits.  Without two-sided
    certificates a disagreement is unknown, never unequal, so raising the
    level cannot flip an equal verdict."""
    if a.exact is not None and b.exact is not None:
        return TriState.EQUAL if a.exact == b.exact else TriState.UNEQUAL
    k = level.bits
    depth = k + EQ_DEPTH_MARGIN
    x, y = a.bound(depth), b.bound(depth)
    if x.is_infinite and y.is_infinite:
        return TriState.EQUAL
    if x.is_infinite or y.is_infinite:
        return TriState.UNKNOWN
    gap = x.minus(y) if y <= x else y.minus(x)
    tol = DyadicExt(1, k)
    if gap is not None and gap <= tol:
        return TriState.EQUAL
    return TriState.UNKNOWN


def _lower_sample(rnd: random.Random) -> LowerReal:
    return LowerReal.embed(_dyadic_sample(rnd))


def _lower_repeat(a: LowerReal) -> LowerReal:
    def fn(k: int) -> DyadicExt:
        b = a.bound(k)
        return b * DyadicExt(k + 1, 0)

    exact = None
    if a.exact is not None:
        exact = DYADIC_ZERO if a.exact.is_zero else DYADIC_INF
    return LowerReal(fn, exact=exact)


def lower_real_monoid() -> SeriesMonoidDescriptor:
    return SeriesMonoidDescriptor(
        name="extreal",
        zero=LowerReal.embed(DYADIC_ZERO),
        sum=lower_real_sum,
        eq_at=lower_eq,
        is_zero=lambda a: a.exact is not None and a.exact.is_zero,
        sample=_lower_sample,
        analytic=True,
        repeat_forever=_lower_repeat,
    )


def embed_dyadic(d: DyadicExt) -> LowerReal:
    return LowerReal.embed(d)


# ---------------------------------------------------------------------------
# Countable-sup lattices (desk scale: finite lattices and max on the
# extended naturals)


def sup_lattice_sum_outcome(
    join: Callable[[Element, Element], Element],
    bottom: Element,
    top: Optional[Element],
    fam: CountableFamily,
    budget: int = DEFAULT_SCAN_BUDGET,
    declared_unbounded: bool = False,
) -> SumOutcome:
    """Supremum of the family's values.  Lazy scans stop early at the top
    element; a declared-unbounded claim forces the top exactly."""
    if declared_unbounded:
        if top is None:
            raise ValueError("unbounded claim needs a top element")
        return SumOutcome(top, True)
    if isinstance(fam, FiniteSupport):
        total = bottom
        for _, v in fam.entries:
            total = join(total, v)
        return SumOutcome(total, True)
    assert isinstance(fam, Lazy)
    total = bottom
    limit = fam.support_bound if fam.support_bound is not None else budget
    for n in range(limit):
        total = join(total, fam.at(n))
        if top is not None and total == top:
            return SumOutcome(total, True)
    return SumOutcome(total, fam.support_bound is not None)


def finite_lattice(
    name: str, elements: Sequence[Element], join: Callable[[Element, Element], Element]
) -> SeriesMonoidDescriptor:
    """A finite join-semilattice with bottom elements[0] and top elements[-1]."""
    elements = list(elements)
    bottom, top = elements[0], elements[-1]

    def lat_sum(fam: CountableFamily) -> Element:
        out = sup_lattice_sum_outcome(join, bottom, top, fam)
        if not out.exact:
            raise ValueError("sup scan exhausted its budget")
        return out.value

    return SeriesMonoidDescriptor(
        name=name,
        zero=bottom,
        sum=lat_sum,
        eq_at=exact_eq,
        is_zero=lambda a: a == bottom,
        sample=lambda rnd: rnd.choice(elements),
        idempotent=True,
        enum=lambda: iter(list(elements)),
        repeat_forever=lambda a: a,
    )


def boolean_lattice() -> SeriesMonoidDescriptor:
    return finite_lattice("bool2", [False, True], lambda a, b: a or b)


def chain_lattice(n: int) -> SeriesMonoidDescriptor:
    return finite_lattice(f"chain{n}", list(range(n)), max)


def extnat_max_monoid() -> SeriesMonoidDescriptor:
    """The extended naturals under supremum rather than addition."""

    def join(a: ExtNat, b: ExtNat) -> ExtNat:
        return b if a <= b else a

    def sup_sum(fam: CountableFamily) -> ExtNat:
        out = sup_lattice_sum_outcome(join, EXTNAT_ZERO, EXTNAT_INF, fam)
        if not out.exact:
            raise ValueError("sup scan exhausted its budget")
        return out.value

    def leq(a: ExtNat, b: ExtNat):
        return (TriState.EQUAL, b) if a <= b else (TriState.UNEQUAL, None)

    return SeriesMonoidDescriptor(
        name="extnatmax",
        zero=EXTNAT_ZERO,
        sum=sup_sum,
        eq_at=exact_eq,
        is_zero=lambda a: a.is_zero,
        sample=_extnat_sample,
        idempotent=True,
        leq_oracle=leq,
        repeat_forever=lambda a: a,
    )


# ---------------------------------------------------------------------------
# Biproducts: countable products that are simultaneously coproducts.
# Desk scale realizes finitely many listed factors (the remaining factors
# of the countable family are zero monoids).


@dataclass(frozen=True)
class Biproduct:
    factors: tuple[SeriesMonoidDescriptor, ...]
    monoid: SeriesMonoidDescriptor

    def inject(self, k: int, a: Element) -> tuple:
        return tuple(
            a if i == k else f.zero for i, f in enumerate(self.factors)
        )

    def project(self, k: int, x: tuple) -> Element:
        return x[k]

    def copair(
        self,
        target: SeriesMonoidDescriptor,
        maps: Sequence[Callable[[Element], Element]],
    ) -> Callable[[tuple], Element]:
        """The unique mediating morphism out of the coproduct: the sum of
        the components' images."""

        def mediate(x: tuple) -> Element:
            vals = [f(self.project(k, x)) for k, f in enumerate(maps)]
            return target.sum(target.family_of(vals))

        return mediate


def biproduct(factors: Sequence[SeriesMonoidDescriptor], name: str = "") -> Biproduct:
    factors = tuple(factors)
    name = name or "x".join(f.name for f in factors)
    zero = tuple(f.zero for f in factors)

    def bp_sum(fam: CountableFamily) -> tuple:
        comps = []
        for k, f in enumerate(factors):
            if isinstance(fam, FiniteSupport):
                comp_fam = f.family([(i, v[k]) for i, v in fam.entries])
            else:
                comp_fam = Lazy(
                    lambda n, k=k: fam.at(n)[k],
                    support_bound=fam.support_bound,
                )
            comps.append(f.sum(comp_fam))
        return tuple(comps)

    def bp_eq(a: tuple, b: tuple, level: ApproxLevel) -> TriState:
        verdicts = [f.eq_at(x, y, level) for f, x, y in zip(factors, a, b)]
        if any(v is TriState.UNEQUAL for v in verdicts):
            return TriState.UNEQUAL
        if any(v is TriState.UNKNOWN for v in verdicts):
            return TriState.UNKNOWN
        return TriState.EQUAL

    def bp_repeat(a: tuple) -> tuple:
        out = []
        for f, x in zip(factors, a):
            if f.is_zero(x):
                out.append(f.zero)
            elif f.repeat_forever is None:
                raise ValueError(f"factor {f.name} lacks repeat_forever")
            else:
                out.append(f.repeat_forever(x))
        return tuple(out)

    leq = None
    if all(f.leq_oracle is not None for f in factors):

        def leq(a: tuple, b: tuple):
            witnesses = []
            for f, x, y in zip(factors, a, b):
                verdict, w = f.leq_oracle(x, y)
                if verdict is not TriState.EQUAL:
                    return (verdict, None)
                witnesses.append(w)
            return (TriState.EQUAL, tuple(witnesses))

    monoid = SeriesMonoidDescriptor(
        name=name,
        zero=zero,
        sum=bp_sum,
        eq_at=bp_eq,
        is_zero=lambda a: all(f.is_zero(x) for f, x in zip(factors, a)),
        sample=lambda rnd: tuple(f.sample(rnd) for f in factors),
        idempotent=all(f.idempotent for f in factors),
        analytic=any(f.analytic for f in factors),
        leq_oracle=leq,
        repeat_forever=bp_repeat,
    )
    return Biproduct(factors, monoid)


def check_biproduct_equations(
    bp: Biproduct, samples: Sequence[tuple], level: ApproxLevel | int = 32
) -> CheckResult:
    """pr_k . in_m is the identity for k = m and zero otherwise, and the
    summed injection-projection composites give the identity."""
    level = as_level(level)
    results = []
    n = len(bp.factors)
    for k, fk in enumerate(bp.factors):
        for m, fm in enumerate(bp.factors):
            a = fm.sample(random.Random(f"bp:{k}:{m}"))
            got = bp.project(k, bp.inject(m, a))
            want = a if k == m else fk.zero
            results.append(
                from_tristate(fk.eq_at(got, want, level), f"pr{k} in{m}")
            )
    for idx, x in enumerate(samples):
        fam = bp.monoid.family_of([bp.inject(k, bp.project(k, x)) for k in range(n)])
        total = bp.monoid.sum(fam)
        results.append(
            from_tristate(bp.monoid.eq_at(total, x, level), f"sum in.pr = id on {idx}")
        )
    return merge_results(results, "biproduct equations")


# ---------------------------------------------------------------------------
# Free instances: countable-support coefficient maps over generators, and
# extension of generator assignments to the unique summation morphism.


@dataclass(frozen=True)
class FreeSeriesElem:
    """Finite-support map generator -> ExtNat, stored sorted and non-zero."""

    coeffs: tuple[tuple[object, ExtNat], ...]

    @staticmethod
    def of(mapping: dict) -> "FreeSeriesElem":
        items = tuple(
            sorted(
                ((g, c) for g, c in mapping.items() if not c.is_zero),
                key=lambda kv: repr(kv[0]),
            )
        )
        return FreeSeriesElem(items)

    def coeff(self, g) -> ExtNat:
        for gen, c in self.coeffs:
            if gen == g:
                return c
        return EXTNAT_ZERO

    def generators(self) -> tuple:
        return tuple(g for g, _ in self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs


FREE_ZERO = FreeSeriesElem(())


def generator(g) -> FreeSeriesElem:
    return FreeSeriesElem.of({g: ExtNat(1)})


def free_monoid(generators_pool: Sequence[object], name: str = "free") -> SeriesMonoidDescriptor:
    """The free instance on the given generator set (sampling draws from
    the pool; elements over any hashable generators are accepted)."""

    def fsum(fam: CountableFamily) -> FreeSeriesElem:
        if isinstance(fam, Lazy):
            if fam.support_bound is None:
                raise ValueError("free sums need a finite-support certificate")
            elems = [fam.at(i) for i in range(fam.support_bound)]
        else:
            elems = [v for _, v in fam.entries]
        acc: dict = {}
        for e in elems:
            for g, c in e.coeffs:
                acc[g] = acc.get(g, EXTNAT_ZERO) + c
        return FreeSeriesElem.of(acc)

    def frepeat(a: FreeSeriesElem) -> FreeSeriesElem:
        return FreeSeriesElem.of({g: EXTNAT_INF for g, _ in a.coeffs})

    def fsample(rnd: random.Random) -> FreeSeriesElem:
        gens = rnd.sample(list(generators_pool), k=min(2, len(generators_pool)))
        return FreeSeriesElem.of({g: _extnat_sample(rnd) for g in gens})

    return SeriesMonoidDescriptor(
        name=name,
        zero=FREE_ZERO,
        sum=fsum,
        eq_at=exact_eq,
        is_zero=lambda a: a.is_zero,
        sample=fsample,
        repeat_forever=frepeat,
    )


def free_extend(
    target: SeriesMonoidDescriptor, assignment: Callable[[object], Element]
) -> Callable[[FreeSeriesElem], Element]:
    """Extend a generator assignment to the summation morphism: each
    generator's coefficient becomes an iterated sum of its image (infinite
    coefficients use the constantly-a sum)."""

    def morphism(x: FreeSeriesElem) -> Element:
        terms = []
        for g, c in x.coeffs:
            a = assignment(g)
            if a is None:
                raise ValueError(f"generator {g!r} has no assignment")
            terms.append(times(target, c, a))
        return target.sum(target.family_of(terms))

    return morphism


def single_generator_map(
    target: SeriesMonoidDescriptor, a: Element
) -> Callable[[ExtNat], Element]:
    """On one generator the extension is n -> n.a with infinity -> a+a+..."""

    def f(n: ExtNat) -> Element:
        return times(target, n, a)

    return f


def check_generator_evaluation(
    target: SeriesMonoidDescriptor,
    samples: Sequence[Element],
    level: ApproxLevel | int = 32,
    probe: Sequence[ExtNat] = (),
) -> CheckResult:
    """Evaluation at 1 inverts a -> f_a, and f_{f(1)} agrees with f on the
    probe points for maps arising as some f_a."""
    level = as_level(level)
    probe = tuple(probe) or (
        EXTNAT_ZERO,
        ExtNat(1),
        ExtNat(2),
        ExtNat(3),
        ExtNat(7),
        EXTNAT_INF,
    )
    results = []
    for i, a in enumerate(samples):
        f = single_generator_map(target, a)
        results.append(
            from_tristate(target.eq(f(ExtNat(1)), a, level), f"ev1 sample {i}")
        )
        g = single_generator_map(target, f(ExtNat(1)))
        for n in probe:
            results.append(
                from_tristate(target.eq(g(n), f(n), level), f"table {i} at {n}")
            )
    return merge_results(results, "generator evaluation")
