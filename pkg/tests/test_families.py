from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given
import hypothesis.strategies as st

from omegasum.families import (
    FiniteInjection,
    Lazy,
    Subset,
    cantor_pairing,
    finite_family,
    restrict,
)

is_zero = lambda v: v == 0


@given(st.lists(st.tuples(st.integers(0, 30), st.integers(-5, 5)), unique_by=lambda p: p[0]))
def test_finite_family_normalizes(pairs):
    fam = finite_family(pairs, 0, is_zero)
    indices = [i for i, _ in fam.entries]
    assert indices == sorted(indices)
    assert all(v != 0 for _, v in fam.entries)
    for i, v in pairs:
        assert fam.at(i) == v
    assert fam.at(31) == 0


def test_duplicate_indices_rejected():
    with pytest.raises(ValueError):
        finite_family([(1, 2), (1, 3)], 0, is_zero)


def test_lazy_memoizes_pure_generator():
    calls = []

    def gen(n):
        calls.append(n)
        return n * n

    fam = Lazy(gen)
    assert fam.at(3) == 9
    assert fam.at(3) == 9
    assert calls == [3]


def test_lazy_certificates_exclusive():
    with pytest.raises(ValueError):
        Lazy(lambda n: 1, support_bound=4, infinite_support=True)


def test_concurrent_queries_agree():
    fam = Lazy(lambda n: n * 7)
    with ThreadPoolExecutor(8) as pool:
        results = list(pool.map(fam.at, [5] * 64 + list(range(32)) * 2))
    assert results[:64] == [35] * 64


def test_concurrent_lower_real_bounds_agree():
    from omegasum.numbers import DyadicExt, LowerReal

    x = LowerReal(lambda k: DyadicExt(k, 3))
    with ThreadPoolExecutor(8) as pool:
        results = list(pool.map(x.bound, [64] * 32 + list(range(64)) * 2))
    assert results[:32] == [DyadicExt(64, 3)] * 32
    assert [x.bound(k) for k in range(64)] == [DyadicExt(k, 3) for k in range(64)]


def test_restrict_finite_support():
    fam = finite_family([(0, 5), (2, 7), (4, 1)], 0, is_zero)
    out = restrict(fam, Subset.of([0, 2]), 0, is_zero)
    assert out.entries == ((0, 5), (2, 7))


def test_restrict_lazy_narrows_bound():
    fam = Lazy(lambda n: 1, support_bound=100)
    out = restrict(fam, Subset.of([1, 3]), 0, is_zero)
    assert out.support_bound == 4
    assert out.at(3) == 1 and out.at(2) == 0


def test_injection_identity_default():
    xi = FiniteInjection.from_permutation([2, 0, 1])
    assert xi.apply(0) == 2 and xi.apply(5) == 5
    assert xi.injective_on(10)
    assert xi.in_image(7) and xi.in_image(1)


def test_injection_undefined_default():
    xi = FiniteInjection(((0, 0), (1, 2), (2, 4)), default="undefined")
    assert xi.apply(3) is None
    assert xi.in_image(4) and not xi.in_image(3)


def test_injection_collision_detected():
    xi = FiniteInjection(((0, 1),), default="shift", shift=0)
    # 0 -> 1 collides with the identity at 1
    assert not xi.injective_on(3)


def test_cantor_pairing_is_injective():
    seen = {cantor_pairing(n) for n in range(200)}
    assert len(seen) == 200
    assert cantor_pairing(0) == (0, 0)
