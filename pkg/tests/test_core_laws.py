"""The summation interface laws on concrete instances, including every
worked example from the interface contract."""

import dataclasses
import random

from hypothesis import given
import hypothesis.strategies as st

from omegasum.base import Outcome, TriState
from omegasum.families import FiniteInjection, Lazy, PairInjection, Subset, cantor_pairing
from omegasum.instances import (
    boolean_lattice,
    chain_lattice,
    extnat_monoid,
    extnat_monoid_alt,
    lower_real_monoid,
)
from omegasum.laws import (
    check_eckmann_hilton,
    check_idempotent_sup,
    check_injective_reindex,
    check_morphism,
    check_pair_reindex,
    check_sum_swap,
    check_zero_diagonal,
    eq_never_flips,
)
from omegasum.monoid import binary_add, leq_witness, sum_over_subset
from omegasum.numbers import (
    DYADIC_ONE,
    DyadicExt,
    EXTNAT_INF,
    ExtNat,
    LowerReal,
)
from omegasum.instances import dyadic_core

EN = extnat_monoid()
LR = lower_real_monoid()


class TestSum:
    def test_finite_support(self):
        fam = EN.family([(0, ExtNat(1)), (3, ExtNat(2))])
        assert EN.sum(fam) == ExtNat(3)

    def test_infinite_support_diverges(self):
        fam = Lazy(lambda n: ExtNat(1), infinite_support=True)
        assert EN.sum(fam) == EXTNAT_INF

    def test_all_zero(self):
        assert EN.sum(EN.family([])) == ExtNat(0)


class TestSumOverSubset:
    def test_two_element_subset(self):
        fam = EN.family([(0, ExtNat(5)), (1, ExtNat(9)), (2, ExtNat(7))])
        assert sum_over_subset(EN, fam, Subset.of([0, 2])) == ExtNat(12)

    def test_empty_subset(self):
        fam = EN.family([(0, ExtNat(5))])
        assert sum_over_subset(EN, fam, Subset.empty()) == ExtNat(0)

    def test_evens_with_ones_diverges(self):
        fam = Lazy(lambda n: ExtNat(1), infinite_support=True)
        evens = Subset(
            contains=lambda n: n % 2 == 0,
            finite=False,
            hits_support_infinitely=True,
        )
        assert sum_over_subset(EN, fam, evens) == EXTNAT_INF


class TestBinaryAdd:
    def test_basic(self):
        assert binary_add(EN, ExtNat(2), ExtNat(3)) == ExtNat(5)

    def test_saturates(self):
        assert binary_add(EN, EXTNAT_INF, ExtNat(1)) == EXTNAT_INF

    @given(st.integers(0, 500))
    def test_unit(self, n):
        assert binary_add(EN, ExtNat(n), EN.zero) == ExtNat(n)


class TestLeqWitness:
    def test_found(self):
        out = leq_witness(EN, ExtNat(2), ExtNat(5))
        assert out.found and out.witness == ExtNat(3)

    def test_disproved(self):
        out = leq_witness(EN, ExtNat(5), ExtNat(2))
        assert not out.found and out.disproved

    def test_dyadic_witness(self):
        dy = dyadic_core()
        out = leq_witness(dy, DyadicExt(1, 1), DyadicExt(3, 2))
        assert out.found and out.witness == DyadicExt(1, 2)

    def test_enum_search_on_lattice(self):
        ch = chain_lattice(3)
        out = leq_witness(ch, 1, 2)
        assert out.found
        out = leq_witness(ch, 2, 1)
        assert not out.found and out.disproved


class TestZeroDiagonal:
    def test_extnat(self):
        assert check_zero_diagonal(EN, ExtNat(7), 3).passed

    def test_lower_real_third(self):
        third = LowerReal.from_fraction(__import__("fractions").Fraction(1, 3))
        assert check_zero_diagonal(LR, third, 0, 32).passed

    def test_zero_element(self):
        assert check_zero_diagonal(EN, EN.zero, 5).passed


class TestSumSwap:
    def test_two_by_two(self):
        rows = [
            EN.family_of([ExtNat(1), ExtNat(2)]),
            EN.family_of([ExtNat(3), ExtNat(4)]),
        ]
        assert check_sum_swap(EN, rows).passed
        by_rows = EN.sum(EN.family_of([EN.sum(r) for r in rows]))
        cols = [EN.family_of([ExtNat(1), ExtNat(3)]), EN.family_of([ExtNat(2), ExtNat(4)])]
        by_cols = EN.sum(EN.family_of([EN.sum(c) for c in cols]))
        assert by_rows == by_cols == ExtNat(10)

    def test_diagonal_matrix(self):
        b = [ExtNat(1), ExtNat(2)]
        rows = [EN.family([(i, v)]) for i, v in enumerate(b)]
        assert check_sum_swap(EN, rows).passed
        assert EN.sum(EN.family_of([EN.sum(r) for r in rows])) == ExtNat(3)

    def test_infinite_entry(self):
        rows = [EN.family([(0, EXTNAT_INF)])]
        assert check_sum_swap(EN, rows).passed


class TestInjectiveReindex:
    def test_doubling_map(self):
        # family supported on evens, fam(2n) = n for n <= 3
        fam = EN.family([(2 * n, ExtNat(n)) for n in range(4)])
        xi = FiniteInjection(tuple((n, 2 * n) for n in range(8)), default="undefined")
        result = check_injective_reindex(EN, fam, xi)
        assert result.passed
        assert EN.sum(fam) == ExtNat(6)

    def test_identity(self):
        fam = EN.family([(1, ExtNat(4))])
        assert check_injective_reindex(EN, fam, FiniteInjection.identity()).passed

    def test_precondition_violation_is_invalid(self):
        fam = EN.family([(1, ExtNat(4))])
        xi = FiniteInjection(((0, 0),), default="undefined")
        out = check_injective_reindex(EN, fam, xi)
        assert out.outcome is Outcome.INVALID

    def test_cantor_pairing_variant(self):
        rows = [
            EN.family_of([ExtNat(1), ExtNat(2)]),
            EN.family_of([ExtNat(3)]),
        ]
        table = tuple((n, cantor_pairing(n)) for n in range(16))
        assert check_pair_reindex(EN, rows, PairInjection(table)).passed


class TestMorphism:
    def test_identity_passes(self):
        fams = [EN.family_of([ExtNat(1), ExtNat(2)])]
        assert check_morphism(lambda a: a, EN, EN, fams).passed

    def test_embedding_into_lower_reals(self):
        def embed(n: ExtNat):
            return LowerReal.embed(
                DyadicExt(0, 0, True) if n.is_infinite else DyadicExt(n.n, 0)
            )

        fams = [
            EN.family_of([ExtNat(1), ExtNat(2), ExtNat(5)]),
            EN.family_of([ExtNat(3), EXTNAT_INF]),
        ]
        assert check_morphism(embed, EN, LR, fams, 32).passed

    def test_successor_fails_unit(self):
        fams = [EN.family_of([ExtNat(1)])]
        out = check_morphism(lambda a: binary_add(EN, a, ExtNat(1)), EN, EN, fams)
        assert out.outcome is Outcome.FAIL


class TestIdempotent:
    def test_boolean(self):
        bl = boolean_lattice()
        fam = bl.family([(0, True), (2, True)])
        assert bl.sum(fam) is True
        assert check_idempotent_sup(bl, [False, True]).passed

    def test_chain(self):
        ch = chain_lattice(3)
        assert ch.sum(ch.family_of([1, 1])) == 1
        assert check_idempotent_sup(ch, [0, 1, 2]).passed

    def test_extnat_flag_rejected(self):
        flagged = dataclasses.replace(EN, idempotent=True)
        out = check_idempotent_sup(flagged, [ExtNat(1)])
        assert out.outcome is Outcome.FAIL


class TestEckmannHilton:
    def test_two_routes_agree(self):
        rnd = random.Random(5)
        matrices = [
            [EN.family_of([EN.sample(rnd) for _ in range(3)]) for _ in range(3)]
        ]
        fams = [EN.family_of([EN.sample(rnd) for _ in range(4)]) for _ in range(5)]
        out = check_eckmann_hilton(EN, extnat_monoid_alt(), matrices, fams)
        assert out.passed


class TestEqAtDiscipline:
    def test_monotone_on_equal_lower_reals(self):
        geom = LR.sum(Lazy(lambda n: LowerReal.embed(DyadicExt(1, n + 1))))
        one = LowerReal.embed(DYADIC_ONE)
        assert eq_never_flips(LR, geom, one, [1, 4, 8, 16, 32, 48])

    def test_exact_instances_decide(self):
        assert EN.eq(ExtNat(3), ExtNat(3), 0) is TriState.EQUAL
        assert EN.eq(ExtNat(3), ExtNat(4), 99) is TriState.UNEQUAL

    def test_symmetry(self):
        geom = LR.sum(Lazy(lambda n: LowerReal.embed(DyadicExt(1, n + 1))))
        one = LowerReal.embed(DYADIC_ONE)
        assert LR.eq(geom, one, 32) is LR.eq(one, geom, 32)

    def test_unknown_is_not_pass(self):
        # a lower real with no certificate, far from its target at low depth
        slow = LowerReal(lambda k: DyadicExt(1, 0) if k > 80 else DyadicExt(0, 0))
        one = LowerReal.embed(DYADIC_ONE)
        assert LR.eq(slow, one, 8) is TriState.UNKNOWN
