"""Acceptance gate: every criterion at its stated size and tolerance,
one printed verdict line per criterion.

Run with `pytest -s tests/test_acceptance.py` to see the verdict lines.
"""

import itertools
import random
import time
from fractions import Fraction

from omegasum.base import Outcome, TriState
from omegasum.instances import (
    FreeSeriesElem,
    boolean_lattice,
    chain_lattice,
    extnat_max_monoid,
    extnat_monoid,
    lower_real_monoid,
)
from omegasum.intsets import IntObject, Injection, check_snake, int_tensor, cardinality, trace_injection
from omegasum.magnitude import (
    Endo,
    FormalMagnitude,
    binary_expand,
    expansion_value,
    formal_normalize,
    formal_value,
    halving_endo,
    identity_endo,
    mul_extended,
    zeno_verify,
    chi,
)
from omegasum.monoid import binary_add
from omegasum.numbers import (
    DYADIC_INF,
    DYADIC_ONE,
    DYADIC_ZERO,
    DyadicExt,
    EXTNAT_INF,
    ExtNat,
    LowerReal,
)
from omegasum.paradox import (
    render_literal,
    zp_add,
    zp_nonterminating,
    zp_terminating,
    zp_value,
)
from omegasum.riglog import omega_assoc_check, omega_from_rig, omega_from_series, p_sum, p_sum_by_subsets
from omegasum.suites import (
    case_rng,
    dyadic_rig,
    extnat_rig,
    run_suite,
    sample_dyadic,
    sample_family,
    sample_morphism_chain,
    sample_order_map,
    sample_zp,
)

SEED = 20258


def verdict(number: int, ok: bool, detail: str):
    print(f"criterion {number:02d} {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {number} failed: {detail}"


def test_c01_series_law_suite():
    t0 = time.time()
    counts = {}
    for name in ["extnat", "extreal", "bool2", "chain3", "extnat_pair"]:
        r = run_suite(name, "laws", SEED, 1000, 32)
        counts[name] = (r.passes, r.fails, r.inconclusive)
    elapsed = time.time() - t0
    ok = all(c == (1000, 0, 0) for c in counts.values()) and elapsed < 60
    detail = (
        "zero-diagonal/sum-swap/reindex/permutation laws, 1000 cases x 5 "
        f"instances at 32 bits in {elapsed:.1f}s: "
        + " ".join(f"{k}={v[0]}/1000" for k, v in counts.items())
    )
    verdict(1, ok, detail)


def test_c02_biproduct_equations():
    r = run_suite("extnat_pair", "biproduct", SEED, 500, 32)
    ok = (r.passes, r.fails, r.inconclusive) == (500, 0, 0)
    verdict(2, ok, f"projection/injection equations exact on {r.passes}/500 cases")


def test_c03_zeno_verification():
    lr = lower_real_monoid()
    rnd = random.Random(f"{SEED}:zeno")
    samples = [LowerReal.embed(sample_dyadic(rnd)) for _ in range(200)]
    halving = zeno_verify(halving_endo(lr), samples, 40)
    lattices_ok = True
    for inst in (boolean_lattice(), chain_lattice(3), extnat_max_monoid()):
        pool = [inst.sample(rnd) for _ in range(25)]
        lattices_ok &= zeno_verify(identity_endo(inst), pool, 32).passed
    en = extnat_monoid()
    refuted = 0
    candidates = [ExtNat(c) for c in range(9)] + [EXTNAT_INF]
    for c in candidates:
        cand = Endo(en, lambda x, c=c: x * c, f"times-{c}")
        if zeno_verify(cand, [ExtNat(1)], 32).outcome is Outcome.FAIL:
            refuted += 1
    ok = halving.passed and lattices_ok and refuted == len(candidates)
    verdict(
        3,
        ok,
        "halving passes on 200 dyadics at 40 bits, lattice identities pass, "
        f"all {refuted}/{len(candidates)} extnat candidates fail at a=1",
    )


def test_c04_free_magnitude_congruence():
    agree = 0
    for i in range(1000):
        rnd = case_rng(SEED, i)
        def code():
            return FormalMagnitude.of(
                {
                    rnd.randrange(0, 8): ExtNat(rnd.randrange(0, 9))
                    for _ in range(rnd.randrange(0, 9))
                }
            )
        x, y = code(), code()
        same_normal = formal_normalize(x) == formal_normalize(y)
        same_value = formal_value(x) == formal_value(y)
        if same_normal == same_value:
            agree += 1
    doubling = formal_normalize(FormalMagnitude.of({1: ExtNat(2)})) == chi(0)
    tail = formal_normalize(
        FormalMagnitude.of({1: ExtNat(1), 2: ExtNat(1), 3: ExtNat(2)})
    ) == chi(0)
    ok = agree == 1000 and doubling and tail
    verdict(
        4,
        ok,
        f"normal forms decide value equality on {agree}/1000 codes; "
        "doubling and tail relations reproduce the unit generator",
    )


def test_c05_expansion_roundtrip():
    exact = 0
    total = 0
    for m in range(0, 1 << 10):
        for e in range(0, 11):
            d = DyadicExt(m, e)
            total += 1
            if expansion_value(binary_expand(d)) == d:
                exact += 1
    one = expansion_value(binary_expand(DYADIC_ONE, nonterminating=True))
    gap = (DYADIC_ONE.minus(one) or one.minus(DYADIC_ONE)).value()
    ok = exact == total and gap <= Fraction(1, 2**48)
    verdict(
        5,
        ok,
        f"expand/evaluate identity on {exact}/{total} dyadics; "
        f"nonterminating 1 returns within 2^-48 (gap {gap})",
    )


def test_c06_multiplication():
    values = []
    seen = set()
    for m in range(0, 256):
        for e in range(0, 9):
            d = DyadicExt(m, e)
            if (d.num, d.exp) not in seen:
                seen.add((d.num, d.exp))
                values.append((d, Fraction(m, 2**e)))
    exact = True
    for i, (di, fi) in enumerate(values):
        for dj, fj in values[i:]:
            if mul_extended(di, dj).value() != fi * fj:
                exact = False
                break
        if not exact:
            break
    zero_rule = (
        mul_extended(DYADIC_ZERO, DYADIC_INF) == DYADIC_ZERO
        and mul_extended(DYADIC_INF, DYADIC_ZERO) == DYADIC_ZERO
    )
    lr = lower_real_monoid()
    assoc_comm = 0
    for i in range(500):
        rnd = case_rng(SEED + 6, i)
        a, b, c = (LowerReal.embed(sample_dyadic(rnd)) for _ in range(3))
        left = mul_extended(mul_extended(a, b), c)
        right = mul_extended(a, mul_extended(b, c))
        comm_l, comm_r = mul_extended(a, b), mul_extended(b, a)
        if (
            lr.eq(left, right, 40) is TriState.EQUAL
            and lr.eq(comm_l, comm_r, 40) is TriState.EQUAL
        ):
            assoc_comm += 1
    ok = exact and zero_rule and assoc_comm == 500
    verdict(
        6,
        ok,
        f"exact rational agreement on {len(values)} dyadic values, 0*inf=0, "
        f"associativity/commutativity to 40 bits on {assoc_comm}/500 triples",
    )


def test_c07_subset_product_sums():
    matched = 0
    for i in range(500):
        rnd = case_rng(SEED + 7, i)
        if i % 2 == 0:
            rig = extnat_rig()
            fam = sample_family(rig.base, rnd, width=10, size=10)
        else:
            rig = dyadic_rig()
            pairs = [
                (j, DyadicExt(rnd.randrange(0, 8), rnd.randrange(0, 3)))
                for j in rnd.sample(range(10), k=rnd.randrange(0, 11))
            ]
            fam = rig.base.family(pairs)
        if p_sum(rig, fam) == p_sum_by_subsets(rig, fam):
            matched += 1
    rig = extnat_rig()
    a0, a1 = ExtNat(6), ExtNat(11)
    shape = p_sum(rig, rig.base.family_of([a0, a1])) == a0 + a1 + a0 * a1
    ok = matched == 500 and shape
    verdict(
        7,
        ok,
        f"recurrence equals subset enumeration on {matched}/500 families "
        "(support <= 10) over the naturals and dyadics; two-entry shape exact",
    )


def test_c08_geometric_inverse():
    from omegasum.riglog import geometric_inverse

    low = DYADIC_ONE.minus(DyadicExt(1, 40))
    in_window = 0
    for i in range(200):
        rnd = case_rng(SEED + 8, i)
        a = DyadicExt(rnd.randrange(1, 256), 8)
        got = (LowerReal.embed(a) * geometric_inverse(a)).bound(40)
        if low <= got and got <= DYADIC_ONE:
            in_window += 1
    ok = in_window == 200
    verdict(8, ok, f"a*v within [1 - 2^-40, 1] for {in_window}/200 dyadic a in (0,1]")


def test_c09_paradoxical_reals():
    half_nt = zp_nonterminating(1)
    displayed = (
        zp_add(half_nt, half_nt) == zp_nonterminating(2)
        and zp_add(half_nt, zp_terminating(1)) == zp_nonterminating(2)
        and render_literal(zp_add(half_nt, half_nt)) == "r:1.(1)"
        and zp_add(zp_terminating(1), zp_terminating(1)) == zp_terminating(2)
        and zp_nonterminating(2) != zp_terminating(2)
        and zp_value(zp_nonterminating(2)) == zp_value(zp_terminating(2))
    )
    good = 0
    for i in range(2000):
        rnd = case_rng(SEED + 9, i)
        a, b, c = sample_zp(rnd), sample_zp(rnd), sample_zp(rnd)
        if (
            zp_add(zp_add(a, b), c) == zp_add(a, zp_add(b, c))
            and zp_add(a, b) == zp_add(b, a)
            and zp_value(zp_add(a, b)) == zp_value(a) + zp_value(b)
        ):
            good += 1
    ok = displayed and good == 2000
    verdict(
        9,
        ok,
        "displayed equations reproduce exactly; associativity/commutativity "
        f"and the value morphism hold on {good}/2000 triples",
    )


def test_c10_integer_sets():
    from omegasum.intsets import int_compose, int_identity

    law_ok = {"intfb": 0, "intfi": 0}
    for mode in law_ok:
        bij = mode == "intfb"
        for i in range(500):
            rnd = case_rng(SEED + 10, i)
            f, g, h = sample_morphism_chain(rnd, 3, bijective=bij)
            if (
                int_compose(h, int_compose(g, f)) == int_compose(int_compose(h, g), f)
                and int_compose(f, int_identity(f.dom)) == f
                and int_compose(int_identity(f.cod), f) == f
            ):
                law_ok[mode] += 1
    trace_ok = True
    for x in range(0, 5):
        for u in range(0, 3):
            for perm in itertools.permutations(range(x + u)):
                out = trace_injection(Injection(x + u, x + u, perm), x, x, u)
                trace_ok &= out.is_bijection
    snakes = all(check_snake(IntObject(x, u)) for x in range(5) for u in range(5))
    card_ok = True
    for i in range(300):
        rnd = case_rng(SEED + 100, i)
        (f,) = sample_morphism_chain(rnd, 1, bijective=True)
        card_ok &= cardinality(f.dom) == cardinality(f.cod)
        a = IntObject(rnd.randrange(0, 5), rnd.randrange(0, 5))
        b = IntObject(rnd.randrange(0, 5), rnd.randrange(0, 5))
        card_ok &= cardinality(int_tensor(a, b)) == cardinality(a) + cardinality(b)
    ok = (
        law_ok == {"intfb": 500, "intfi": 500}
        and trace_ok
        and snakes
        and card_ok
    )
    verdict(
        10,
        ok,
        f"category laws exact on {law_ok['intfb']}+{law_ok['intfi']}/1000 "
        "triples; bijection traces exhaustively bijective; snake equations "
        "exhaustive to size 4; cardinality additive and bijection-invariant",
    )


def test_c11_general_associativity():
    en = extnat_monoid()
    om_sum = omega_from_series(en)
    rig = extnat_rig()
    om_p = omega_from_rig(rig)
    passed = 0
    for i in range(500):
        rnd = case_rng(SEED + 11, i)
        fam = sample_family(en, rnd, width=8, size=6)
        xi = sample_order_map(rnd)
        om = om_sum if i % 2 == 0 else om_p
        if omega_assoc_check(om, fam, xi, 32).passed:
            passed += 1
    ok = passed == 500
    verdict(
        11,
        ok,
        f"order-preserving regrouping preserved {passed}/500 seeded "
        "(family, reindexing) pairs on both the additive and subset-product structures",
    )


def test_c12_no_additive_inverses():
    from omegasum.suites import get_instance

    counterexamples = 0
    values = [ExtNat(n) for n in range(101)] + [EXTNAT_INF]
    for a in values:
        for b in values:
            if (a + b).is_zero and not (a.is_zero and b.is_zero):
                counterexamples += 1
    free1 = get_instance("free1")
    free_counter = 0
    for m in range(101):
        for n in range(101):
            a = FreeSeriesElem.of({"*": ExtNat(m)})
            b = FreeSeriesElem.of({"*": ExtNat(n)})
            total = binary_add(free1, a, b)
            if free1.is_zero(total) and (m or n):
                free_counter += 1
    ok = counterexamples == 0 and free_counter == 0
    verdict(
        12,
        ok,
        "no non-zero additive inverses in the extended naturals or the free "
        "instance on one generator (exhaustive to 100, plus infinity)",
    )
