"""Executable laws: every axiom of the summation interface as a check
that reports pass / fail / inconclusive on concrete data.

Checks never treat an unknown comparison as a pass; analytic carriers
report it as inconclusive instead.
"""

from __future__ import annotations

from typing import Callable, Sequence

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
from .families import (
    CountableFamily,
    FiniteInjection,
    FiniteSupport,
    Lazy,
    PairInjection,
    finite_family,
    materialize,
)
from .monoid import SeriesMonoidDescriptor, binary_add, leq_witness


def check_zero_diagonal(
    inst: SeriesMonoidDescriptor,
    a: Element,
    n: int,
    level: ApproxLevel | int = 32,
) -> CheckResult:
    """The diagonal law at (a, n): the matrix with a at position (n, n)
    has column sums (0, ..., a, ..., 0) and total sum a."""
    level = as_level(level)
    single = inst.family([(n, a)])
    col = inst.sum(single)
    results = [from_tristate(inst.eq(col, a, level), f"column {n} sum")]
    empty = inst.family([])
    off = inst.sum(empty)
    results.append(from_tristate(inst.eq(off, inst.zero, level), "off-column sum"))
    outer = inst.sum(inst.family([(n, col)]))
    results.append(from_tristate(inst.eq(outer, a, level), "total sum"))
    return merge_results(results, f"zero-diagonal at n={n}")


def transpose_rows(
    inst: SeriesMonoidDescriptor, rows: Sequence[CountableFamily]
) -> list[FiniteSupport]:
    mats = [materialize(r, inst.zero, inst.is_zero) for r in rows]
    width = max((m.max_index() for m in mats), default=-1) + 1
    cols = []
    for j in range(width):
        pairs = [(i, m.at(j)) for i, m in enumerate(mats)]
        cols.append(inst.family(pairs))
    return cols


def check_sum_swap(
    inst: SeriesMonoidDescriptor,
    rows: Sequence[CountableFamily],
    level: ApproxLevel | int = 32,
) -> CheckResult:
    """Double-sum interchange on a matrix given as a finite list of rows."""
    level = as_level(level)
    row_sums = inst.family_of([inst.sum(r) for r in rows])
    by_rows = inst.sum(row_sums)
    cols = transpose_rows(inst, rows)
    col_sums = inst.family_of([inst.sum(c) for c in cols])
    by_cols = inst.sum(col_sums)
    return from_tristate(inst.eq(by_rows, by_cols, level), "sum swap")


def check_injective_reindex(
    inst: SeriesMonoidDescriptor,
    fam: CountableFamily,
    xi: FiniteInjection,
    level: ApproxLevel | int = 32,
) -> CheckResult:
    """Sum invariance under injective reindexing, for families that vanish
    off the image of xi.  Violated preconditions report invalid-test."""
    level = as_level(level)
    try:
        fam = materialize(fam, inst.zero, inst.is_zero)
    except ValueError:
        return CheckResult(Outcome.INVALID, "family is not certified finite")
    window = fam.max_index() + 1
    if not xi.injective_on(max(window, len(xi.table))):
        return CheckResult(Outcome.INVALID, "xi is not injective")
    for i in fam.support():
        if not xi.in_image(i):
            return CheckResult(Outcome.INVALID, f"support index {i} off the image")
    keys = [k for k, _ in xi.table]
    candidates = set(keys)
    if xi.default == "shift":
        candidates.update(i - xi.shift for i in fam.support() if i - xi.shift >= 0)
    pairs = []
    for n in sorted(candidates):
        v = xi.apply(n)
        if v is not None:
            pairs.append((n, fam.at(v)))
    reindexed = inst.family(pairs)
    lhs = inst.sum(reindexed)
    rhs = inst.sum(fam)
    return from_tristate(inst.eq(lhs, rhs, level), "injective reindex")


def check_pair_reindex(
    inst: SeriesMonoidDescriptor,
    rows: Sequence[CountableFamily],
    xi: PairInjection,
    level: ApproxLevel | int = 32,
) -> CheckResult:
    """The N -> N x N variant: a singly-indexed sum along an injective
    pairing equals the double sum, when the matrix vanishes off the image."""
    level = as_level(level)
    mats = [materialize(r, inst.zero, inst.is_zero) for r in rows]
    for i, m in enumerate(mats):
        for j in m.support():
            if not xi.in_image((i, j)):
                return CheckResult(Outcome.INVALID, f"entry ({i},{j}) off the image")
    pairs = []
    for n, (r, c) in xi.table:
        v = mats[r].at(c) if r < len(mats) else inst.zero
        pairs.append((n, v))
    lhs = inst.sum(inst.family(pairs))
    swap = check_sum_swap(inst, rows, level)
    if swap.outcome is not Outcome.PASS:
        return swap
    rhs = inst.sum(inst.family_of([inst.sum(m) for m in mats]))
    return from_tristate(inst.eq(lhs, rhs, level), "pairing reindex")


def map_family(
    f: Callable[[Element], Element],
    fam: CountableFamily,
    target: SeriesMonoidDescriptor,
) -> CountableFamily:
    if isinstance(fam, FiniteSupport):
        return finite_family(
            [(i, f(v)) for i, v in fam.entries], target.zero, target.is_zero
        )
    assert isinstance(fam, Lazy)
    # Certificates about non-zero entries do not survive an arbitrary map.
    return Lazy(lambda n: f(fam.at(n)), support_bound=fam.support_bound)


def check_morphism(
    f: Callable[[Element], Element],
    src: SeriesMonoidDescriptor,
    dst: SeriesMonoidDescriptor,
    fams: Sequence[CountableFamily],
    level: ApproxLevel | int = 32,
) -> CheckResult:
    """f preserves zero and commutes with the countable sum on the samples."""
    level = as_level(level)
    results = [from_tristate(dst.eq(f(src.zero), dst.zero, level), "f(0) = 0")]
    for k, fam in enumerate(fams):
        lhs = f(src.sum(fam))
        rhs = dst.sum(map_family(f, fam, dst))
        results.append(from_tristate(dst.eq(lhs, rhs, level), f"sample {k}"))
    return merge_results(results, "morphism")


def check_idempotent_sup(
    inst: SeriesMonoidDescriptor,
    samples: Sequence[Element],
    level: ApproxLevel | int = 32,
    search_budget: int = 1000,
) -> CheckResult:
    """Constant-or-zero families sum to the constant, and the derived
    preorder is antisymmetric on the samples."""
    level = as_level(level)
    results = []
    for k, c in enumerate(samples):
        if inst.is_zero(c):
            continue
        fam = inst.family([(0, c), (2, c), (5, c)])
        results.append(
            from_tristate(inst.eq(inst.sum(fam), c, level), f"constant sum {k}")
        )
        if inst.repeat_forever is not None:
            results.append(
                from_tristate(
                    inst.eq(inst.repeat_forever(c), c, level),
                    f"constant infinite sum {k}",
                )
            )
    for i, a in enumerate(samples):
        for b in samples[i + 1 :]:
            ab = leq_witness(inst, a, b, search_budget, level)
            ba = leq_witness(inst, b, a, search_budget, level)
            if ab.found and ba.found:
                if inst.eq(a, b, level) is not TriState.EQUAL:
                    return CheckResult(Outcome.FAIL, "antisymmetry violated")
    return merge_results(results, "idempotent sup")


def check_eckmann_hilton(
    primary: SeriesMonoidDescriptor,
    secondary: SeriesMonoidDescriptor,
    matrices: Sequence[Sequence[CountableFamily]],
    fams: Sequence[CountableFamily],
    level: ApproxLevel | int = 32,
) -> CheckResult:
    """Two sum structures with a shared zero: if the second sum is a
    morphism for the first (checked on the sample matrices), the two sums
    agree on the sample families."""
    level = as_level(level)
    premise = [
        from_tristate(
            primary.eq(primary.zero, secondary.zero, level), "shared zero"
        )
    ]
    for k, rows in enumerate(matrices):
        mats = [materialize(r, primary.zero, primary.is_zero) for r in rows]
        pointwise = transpose_rows(primary, mats)
        lhs = secondary.sum(
            secondary.family_of([primary.sum(c) for c in pointwise])
        )
        rhs = primary.sum(
            primary.family_of([secondary.sum(m) for m in mats])
        )
        premise.append(
            from_tristate(primary.eq(lhs, rhs, level), f"morphism matrix {k}")
        )
    premise_check = merge_results(premise, "premise")
    if premise_check.outcome is not Outcome.PASS:
        # Not a law violation: the hypothesis of the statement fails.
        return CheckResult(Outcome.INVALID, premise_check.message)
    results = []
    for k, fam in enumerate(fams):
        results.append(
            from_tristate(
                primary.eq(primary.sum(fam), secondary.sum(fam), level),
                f"agreement {k}",
            )
        )
    return merge_results(results, "eckmann-hilton")


def check_binary_monoid(
    inst: SeriesMonoidDescriptor,
    triples: Sequence[tuple[Element, Element, Element]],
    level: ApproxLevel | int = 32,
) -> CheckResult:
    """Associativity, commutativity, and unit of the derived binary sum."""
    level = as_level(level)
    results = []
    for k, (a, b, c) in enumerate(triples):
        ab_c = binary_add(inst, binary_add(inst, a, b), c)
        a_bc = binary_add(inst, a, binary_add(inst, b, c))
        results.append(from_tristate(inst.eq(ab_c, a_bc, level), f"assoc {k}"))
        results.append(
            from_tristate(
                inst.eq(binary_add(inst, a, b), binary_add(inst, b, a), level),
                f"comm {k}",
            )
        )
        results.append(
            from_tristate(
                inst.eq(binary_add(inst, a, inst.zero), a, level), f"unit {k}"
            )
        )
    return merge_results(results, "binary monoid")


def eq_never_flips(
    inst: SeriesMonoidDescriptor,
    a: Element,
    b: Element,
    levels: Sequence[int],
) -> bool:
    """Raising the level never converts an equal verdict to unequal."""
    seen_equal = False
    for bits in sorted(levels):
        t = inst.eq(a, b, ApproxLevel(bits))
        if t is TriState.EQUAL:
            seen_equal = True
        elif t is TriState.UNEQUAL and seen_equal:
            return False
    return True
