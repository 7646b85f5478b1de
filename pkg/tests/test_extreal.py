"""Concrete carriers: budgeted extended-natural sums, the diagonal lower
real summation schedule, sup lattices, biproducts, and free instances."""

import random
from fractions import Fraction

import pytest

from omegasum.base import TriState
from omegasum.families import FiniteInjection, Lazy
from omegasum.instances import (
    FreeSeriesElem,
    biproduct,
    boolean_lattice,
    chain_lattice,
    check_biproduct_equations,
    check_generator_evaluation,
    dyadic_core,
    extnat_monoid,
    extnat_sum_outcome,
    free_extend,
    free_monoid,
    lower_real_approx,
    lower_real_monoid,
    lower_real_sum,
    sup_lattice_sum_outcome,
)
from omegasum.laws import check_injective_reindex, check_morphism
from omegasum.numbers import (
    DYADIC_INF,
    DYADIC_ONE,
    DYADIC_ZERO,
    DyadicExt,
    EXTNAT_INF,
    ExtNat,
    LowerReal,
)

EN = extnat_monoid()
LR = lower_real_monoid()


class TestExtNatSum:
    def test_finite(self):
        out = extnat_sum_outcome(EN.family_of([ExtNat(1), ExtNat(2), ExtNat(3)]))
        assert out.value == ExtNat(6) and out.exact

    def test_lazy_ones_declared(self):
        out = extnat_sum_outcome(Lazy(lambda n: ExtNat(1), infinite_support=True))
        assert out.value == EXTNAT_INF and out.exact

    def test_infinite_entry(self):
        out = extnat_sum_outcome(EN.family([(0, EXTNAT_INF)]))
        assert out.value == EXTNAT_INF and out.exact

    def test_budget_partial_flag(self):
        out = extnat_sum_outcome(Lazy(lambda n: ExtNat(1)), budget=16)
        assert out.value == ExtNat(16) and not out.exact

    def test_support_bound_exact(self):
        out = extnat_sum_outcome(Lazy(lambda n: ExtNat(n), support_bound=4))
        assert out.value == ExtNat(6) and out.exact


class TestLowerRealSum:
    def test_geometric_bound_formula(self):
        fam = Lazy(lambda n: LowerReal.embed(DyadicExt(1, n + 1)))
        s = lower_real_sum(fam)
        # oracle: partial sums of 1/2 + 1/4 + ... up to index k
        for k in (0, 3, 10, 40):
            expected = sum(Fraction(1, 2 ** (i + 1)) for i in range(k + 1))
            assert s.bound(k).value() == expected
            assert expected == 1 - Fraction(1, 2 ** (k + 1))

    def test_all_zero(self):
        s = lower_real_sum(LR.family([]))
        assert s.bound(17) == DYADIC_ZERO
        assert s.exact == DYADIC_ZERO

    def test_lazy_ones_unbounded(self):
        s = lower_real_sum(Lazy(lambda n: LowerReal.embed(DYADIC_ONE)))
        for k in (0, 5, 12):
            assert s.bound(k) == DyadicExt(k + 1, 0)

    def test_finite_support_exact_tag_and_modulus(self):
        fam = LR.family_of([LowerReal.embed(DyadicExt(1, 1)), LowerReal.embed(DyadicExt(1, 2))])
        s = lower_real_sum(fam)
        assert s.exact == DyadicExt(3, 2)
        assert s.two_sided(40) == DyadicExt(3, 2)

    def test_tail_certificate_gives_modulus(self):
        fam = Lazy(lambda n: LowerReal.embed(DyadicExt(1, n + 1)))
        # entries beyond index N sum to 2^-(N+1), so N = k works
        s = lower_real_sum(fam, tail=lambda k: k)
        got = s.two_sided(40)
        gap = DYADIC_ONE.minus(got)
        assert gap is not None and gap <= DyadicExt(1, 40)

    def test_permutation_invariance_at_48_bits(self):
        rnd = random.Random(11)
        for _ in range(40):
            fam = LR.family(
                [(i, LowerReal.embed(DyadicExt(rnd.randrange(0, 64), rnd.randrange(0, 5))))
                 for i in rnd.sample(range(10), k=5)]
            )
            xi = FiniteInjection.from_permutation(rnd.sample(range(12), k=12))
            assert check_injective_reindex(LR, fam, xi, 48).passed


class TestLowerRealApprox:
    def test_exact_embedding_constant(self):
        assert lower_real_approx(LowerReal.embed(DyadicExt(3, 3)), 10) == DyadicExt(3, 3)

    def test_geometric_partial(self):
        fam = Lazy(lambda n: LowerReal.embed(DyadicExt(1, n + 1)))
        got = lower_real_approx(lower_real_sum(fam), 10)
        assert got.value() == 1 - Fraction(1, 2**11)

    def test_infinite_embedding(self):
        assert lower_real_approx(LowerReal.embed(DYADIC_INF), 3) == DYADIC_INF


class TestDyadicEmbedding:
    def test_embedding_is_a_morphism(self):
        dy = dyadic_core()
        fams = [
            dy.family_of([DyadicExt(1, 1), DyadicExt(3, 2)]),
            dy.family_of([DYADIC_INF, DyadicExt(1, 0)]),
        ]
        assert check_morphism(LowerReal.embed, dy, LR, fams, 48).passed


class TestSupLattice:
    def test_boolean(self):
        bl = boolean_lattice()
        out = sup_lattice_sum_outcome(
            lambda a, b: a or b, False, True, bl.family_of([False, True, False])
        )
        assert out.value is True and out.exact

    def test_chain(self):
        ch = chain_lattice(3)
        fam = ch.family([(0, 1), (5, 2)])
        assert ch.sum(fam) == 2

    def test_lazy_early_exit_at_top(self):
        calls = []

        def gen(n):
            calls.append(n)
            return min(n, 2)

        out = sup_lattice_sum_outcome(max, 0, 2, Lazy(gen))
        assert out.value == 2 and out.exact
        assert max(calls) <= 3

    def test_extnat_max_budget_and_declared_unbounded(self):
        join = lambda a, b: b if a <= b else a
        fam = Lazy(lambda n: ExtNat(n))
        partial = sup_lattice_sum_outcome(join, ExtNat(0), EXTNAT_INF, fam, budget=32)
        assert not partial.exact and partial.value == ExtNat(31)
        exact = sup_lattice_sum_outcome(
            join, ExtNat(0), EXTNAT_INF, fam, declared_unbounded=True
        )
        assert exact.exact and exact.value == EXTNAT_INF


class TestBiproduct:
    def setup_method(self):
        self.bp = biproduct([extnat_monoid(), extnat_monoid()])

    def test_projection_of_matching_injection(self):
        assert self.bp.project(1, self.bp.inject(1, ExtNat(4))) == ExtNat(4)

    def test_projection_of_mismatched_injection_is_zero(self):
        assert self.bp.project(0, self.bp.inject(1, ExtNat(4))) == ExtNat(0)

    def test_sum_of_injected_projections_is_identity(self):
        rnd = random.Random(3)
        samples = [self.bp.monoid.sample(rnd) for _ in range(20)]
        assert check_biproduct_equations(self.bp, samples).passed

    def test_copairing_is_the_sum_of_components(self):
        target = extnat_monoid()
        mediate = self.bp.copair(target, [lambda a: a, lambda a: a + a])
        assert mediate((ExtNat(2), ExtNat(3))) == ExtNat(8)

    def test_componentwise_sum(self):
        fam = self.bp.monoid.family_of(
            [(ExtNat(1), ExtNat(2)), (ExtNat(3), ExtNat(4))]
        )
        assert self.bp.monoid.sum(fam) == (ExtNat(4), ExtNat(6))


class TestFreeInstances:
    def test_single_generator_multiples(self):
        f = free_extend(EN, {"*": ExtNat(2)}.get)
        assert f(FreeSeriesElem.of({"*": ExtNat(3)})) == ExtNat(6)

    def test_single_generator_infinity(self):
        f = free_extend(EN, {"*": ExtNat(2)}.get)
        assert f(FreeSeriesElem.of({"*": EXTNAT_INF})) == EXTNAT_INF

    def test_morphism_unit(self):
        f = free_extend(EN, {"*": ExtNat(2)}.get)
        assert f(FreeSeriesElem.of({})) == ExtNat(0)

    def test_unassigned_generator(self):
        f = free_extend(EN, {"*": ExtNat(2)}.get)
        with pytest.raises(ValueError):
            f(FreeSeriesElem.of({"other": ExtNat(1)}))

    def test_multi_generator_extension(self):
        assignment = {"a": ExtNat(2), "b": ExtNat(3)}.get
        f = free_extend(EN, assignment)
        x = FreeSeriesElem.of({"a": ExtNat(2), "b": EXTNAT_INF})
        assert f(x) == EXTNAT_INF
        y = FreeSeriesElem.of({"a": ExtNat(2), "b": ExtNat(1)})
        assert f(y) == ExtNat(7)

    def test_free_monoid_sums_pointwise(self):
        fm = free_monoid(["a", "b"])
        x = FreeSeriesElem.of({"a": ExtNat(1), "b": ExtNat(2)})
        y = FreeSeriesElem.of({"a": ExtNat(4)})
        total = fm.sum(fm.family_of([x, y]))
        assert total == FreeSeriesElem.of({"a": ExtNat(5), "b": ExtNat(2)})

    def test_generator_evaluation_extnat(self):
        assert check_generator_evaluation(EN, [ExtNat(5), ExtNat(0)]).passed

    def test_generator_evaluation_dyadic_half_diverges(self):
        dy = dyadic_core()
        from omegasum.monoid import times

        assert times(dy, EXTNAT_INF, DyadicExt(1, 1)) == DYADIC_INF
        assert check_generator_evaluation(dy, [DyadicExt(1, 1)]).passed

    def test_generator_evaluation_boolean(self):
        bl = boolean_lattice()
        from omegasum.monoid import times

        assert times(bl, ExtNat(7), True) is True
        assert times(bl, EXTNAT_INF, True) is True
        assert check_generator_evaluation(bl, [True, False]).passed
