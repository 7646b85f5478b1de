"""The monoid where terminating and non-terminating expansions of the
same dyadic are different elements."""

from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from omegasum.paradox import (
    ZP_ZERO,
    ZPKind,
    display_expansion,
    parse_literal,
    render_literal,
    to_nonterminating,
    zp_add,
    zp_leq,
    zp_nonterminating,
    zp_terminating,
    zp_value,
)


def elems():
    dyadic_values = st.builds(
        Fraction, st.integers(1, 64), st.sampled_from([1, 2, 4, 8, 16])
    )
    any_values = st.builds(
        Fraction, st.integers(1, 64), st.integers(1, 16)
    )
    return st.one_of(
        st.just(ZP_ZERO),
        dyadic_values.map(zp_terminating),
        any_values.map(zp_nonterminating),
    )


class TestDisplayedEquations:
    def test_two_nonterminating_halves(self):
        x = zp_nonterminating(1)  # 0.11...
        total = zp_add(x, x)
        assert total == zp_nonterminating(2)  # 1.11...
        assert render_literal(total) == "r:1.(1)"

    def test_mixed_addition_lands_nonterminating(self):
        x = zp_nonterminating(1)
        s = zp_terminating(1)  # 1.00...
        assert zp_add(x, s) == zp_nonterminating(2)

    def test_two_terminating_ones(self):
        s = zp_terminating(1)
        total = zp_add(s, s)
        assert total == zp_terminating(2)  # 10.00...
        assert render_literal(total) == "t:10.0"

    def test_same_value_distinct_elements(self):
        assert zp_value(zp_nonterminating(2)) == zp_value(zp_terminating(2)) == 2
        assert zp_nonterminating(2) != zp_terminating(2)


class TestRewrite:
    def test_one(self):
        out = to_nonterminating(zp_terminating(1))
        assert out == zp_nonterminating(1)
        assert render_literal(out) == "r:0.(1)"

    def test_half(self):
        out = to_nonterminating(zp_terminating(Fraction(1, 2)))
        assert render_literal(out) == "r:0.0(1)"
        assert zp_value(out) == Fraction(1, 2)

    def test_two(self):
        out = to_nonterminating(zp_terminating(2))
        assert render_literal(out) == "r:1.(1)"

    def test_rejects_non_terminating_input(self):
        with pytest.raises(ValueError):
            to_nonterminating(zp_nonterminating(1))
        with pytest.raises(ValueError):
            to_nonterminating(ZP_ZERO)

    @given(st.integers(1, 255), st.integers(0, 8))
    def test_preserves_value_and_lands_nonterminating(self, m, e):
        s = zp_terminating(Fraction(m, 2**e))
        out = to_nonterminating(s)
        assert out.kind is ZPKind.X and zp_value(out) == zp_value(s)

    def test_respects_addition(self):
        a, b = zp_terminating(Fraction(3, 4)), zp_terminating(Fraction(5, 2))
        lhs = to_nonterminating(zp_add(a, b))
        rhs = zp_add(to_nonterminating(a), to_nonterminating(b))
        assert lhs == rhs


class TestAddition:
    @given(elems())
    def test_zero_unit(self, a):
        assert zp_add(a, ZP_ZERO) == a
        assert zp_add(ZP_ZERO, a) == a

    @given(elems(), elems())
    def test_commutative(self, a, b):
        assert zp_add(a, b) == zp_add(b, a)

    @given(elems(), elems(), elems())
    def test_associative(self, a, b, c):
        assert zp_add(zp_add(a, b), c) == zp_add(a, zp_add(b, c))

    @given(elems(), elems())
    def test_value_map_is_a_morphism(self, a, b):
        assert zp_value(zp_add(a, b)) == zp_value(a) + zp_value(b)

    def test_variant_placement(self):
        assert zp_add(zp_terminating(1), zp_terminating(1)).kind is ZPKind.S
        assert zp_add(zp_nonterminating(1), zp_terminating(1)).kind is ZPKind.X
        assert zp_add(zp_nonterminating(1), zp_nonterminating(Fraction(1, 3))).kind is ZPKind.X


class TestOrder:
    def test_terminating_chain(self):
        assert zp_leq(zp_terminating(1), zp_terminating(2))

    def test_equal_value_different_variant_incomparable(self):
        x2, s2 = zp_nonterminating(2), zp_terminating(2)
        assert not zp_leq(s2, x2)
        assert not zp_leq(x2, s2)

    def test_zero_below_everything(self):
        assert zp_leq(ZP_ZERO, zp_terminating(5))
        assert zp_leq(ZP_ZERO, zp_nonterminating(Fraction(1, 3)))
        assert zp_leq(ZP_ZERO, ZP_ZERO)

    def test_nonterminating_target_accepts_terminating_source(self):
        assert zp_leq(zp_terminating(1), zp_nonterminating(2))
        assert not zp_leq(zp_terminating(2), zp_nonterminating(1))

    def test_terminating_target_refuses_nonterminating_source(self):
        assert not zp_leq(zp_nonterminating(1), zp_terminating(2))

    @given(elems(), elems())
    def test_order_is_witnessed(self, a, b):
        if zp_leq(a, b):
            diff = zp_value(b) - zp_value(a)
            assert diff >= 0
            if diff == 0:
                assert a == b
            else:
                # reconstruct the witness and check the sum
                if b.kind is ZPKind.S:
                    u = zp_terminating(diff)
                else:
                    u = zp_nonterminating(diff)
                assert zp_add(a, u) == b


class TestLiterals:
    def test_parse_terminating(self):
        assert parse_literal("t:1.01") == zp_terminating(Fraction(5, 4))
        assert parse_literal("t:10.0") == zp_terminating(2)
        assert parse_literal("0") == ZP_ZERO

    def test_parse_repeating(self):
        assert parse_literal("r:0.1(01)") == zp_nonterminating(
            Fraction(1, 2) + Fraction(1, 2) * Fraction(1, 3)
        )
        assert parse_literal("r:0.(1)") == zp_nonterminating(1)

    def test_parse_rejects_terminating_block(self):
        with pytest.raises(ValueError):
            parse_literal("r:0.1(0)")
        with pytest.raises(ValueError):
            parse_literal("t:0.0")
        with pytest.raises(ValueError):
            parse_literal("x:1")

    @given(elems())
    def test_literal_roundtrip(self, a):
        assert parse_literal(render_literal(a)) == a

    def test_display(self):
        assert display_expansion(zp_nonterminating(2)).startswith("1.11")
        assert display_expansion(zp_terminating(1)).startswith("1.0")
        assert display_expansion(zp_nonterminating(Fraction(1, 3))).startswith("0.01")
