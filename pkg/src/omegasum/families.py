"""N-indexed families of values: exact finite-support families and lazy
families with optional caller-supplied certificates (support bound or a
claim of infinite support).

Exactness claims downstream attach only to finite support or to declared
certificates; everything else is budgeted approximation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .base import Element


class CountableFamily:
    def at(self, n: int) -> Element:
        raise NotImplementedError


@dataclass(frozen=True)
class FiniteSupport(CountableFamily):
    """Explicit entries (strictly increasing indices, non-zero values) over
    a zero tail."""

    entries: tuple[tuple[int, Element], ...]
    zero: Element

    def at(self, n: int) -> Element:
        for i, v in self.entries:
            if i == n:
                return v
            if i > n:
                break
        return self.zero

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    def max_index(self) -> int:
        return self.entries[-1][0] if self.entries else -1

    def values(self) -> tuple[Element, ...]:
        return tuple(v for _, v in self.entries)


def finite_family(
    pairs: Iterable[tuple[int, Element]],
    zero: Element,
    is_zero: Callable[[Element], bool],
) -> FiniteSupport:
    """Normalizing constructor: sorts, rejects duplicates, strips zeros."""
    seen = {}
    for i, v in pairs:
        if i < 0:
            raise ValueError("negative index")
        if i in seen:
            raise ValueError(f"duplicate index {i}")
        seen[i] = v
    entries = tuple((i, v) for i, v in sorted(seen.items()) if not is_zero(v))
    return FiniteSupport(entries, zero)


def family_from_values(
    values: Sequence[Element],
    zero: Element,
    is_zero: Callable[[Element], bool],
) -> FiniteSupport:
    return finite_family(list(enumerate(values)), zero, is_zero)


def single_entry(
    n: int, value: Element, zero: Element, is_zero: Callable[[Element], bool]
) -> FiniteSupport:
    return finite_family([(n, value)], zero, is_zero)


class Lazy(CountableFamily):
    """index -> value procedure; gen must be pure.  Optional certificates:
    support_bound (all non-zero entries lie below it) and infinite_support
    (a caller claim that infinitely many entries are non-zero).

    Memoization is internal and idempotent: concurrent queries at the same
    index return equal values.
    """

    __slots__ = ("gen", "support_bound", "infinite_support", "_cache")

    def __init__(
        self,
        gen: Callable[[int], Element],
        support_bound: Optional[int] = None,
        infinite_support: bool = False,
    ):
        if support_bound is not None and infinite_support:
            raise ValueError("support_bound contradicts infinite_support")
        self.gen = gen
        self.support_bound = support_bound
        self.infinite_support = infinite_support
        self._cache: dict[int, Element] = {}

    def at(self, n: int) -> Element:
        cache = self._cache
        if n not in cache:
            cache[n] = self.gen(n)
        return cache[n]


def constant_family(value: Element) -> Lazy:
    """The family (value, value, ...), claimed as infinite support.
    Only meaningful for non-zero value; callers special-case zero."""
    return Lazy(lambda n: value, infinite_support=True)


def materialize(
    fam: CountableFamily,
    zero: Element,
    is_zero: Callable[[Element], bool],
) -> FiniteSupport:
    """Exact finite-support view of a family whose support is certified
    finite (FiniteSupport, or Lazy with a support_bound)."""
    if isinstance(fam, FiniteSupport):
        return fam
    if isinstance(fam, Lazy) and fam.support_bound is not None:
        pairs = [(i, fam.at(i)) for i in range(fam.support_bound)]
        return finite_family(pairs, zero, is_zero)
    raise ValueError("family has no finite-support certificate")


# ---------------------------------------------------------------------------
# Decidable subsets of N


@dataclass(frozen=True)
class Subset:
    """Membership predicate plus either an enumeration or a finiteness flag.
    hits_support_infinitely is a caller certificate that the restricted
    family keeps infinitely many non-zero entries."""

    contains: Callable[[int], bool]
    members: Optional[tuple[int, ...]] = None
    finite: Optional[bool] = None
    hits_support_infinitely: bool = False

    @staticmethod
    def of(members: Iterable[int]) -> "Subset":
        ms = tuple(sorted(set(members)))
        mset = frozenset(ms)
        return Subset(contains=lambda n: n in mset, members=ms, finite=True)

    @staticmethod
    def empty() -> "Subset":
        return Subset(contains=lambda n: False, members=(), finite=True)


def restrict(
    fam: CountableFamily,
    subset: Subset,
    zero: Element,
    is_zero: Callable[[Element], bool],
) -> CountableFamily:
    """The family extended by zero off the subset."""
    if isinstance(fam, FiniteSupport):
        pairs = [(i, v) for i, v in fam.entries if subset.contains(i)]
        return finite_family(pairs, zero, is_zero)
    assert isinstance(fam, Lazy)
    bound = fam.support_bound
    if subset.finite and subset.members is not None:
        b = max(subset.members) + 1 if subset.members else 0
        bound = b if bound is None else min(bound, b)
    return Lazy(
        lambda n: fam.at(n) if subset.contains(n) else zero,
        support_bound=bound,
        infinite_support=subset.hits_support_infinitely,
    )


# ---------------------------------------------------------------------------
# Injective reindexing maps, given as finite tables with an explicit
# off-table rule so that preconditions stay checkable.


@dataclass(frozen=True)
class FiniteInjection:
    """xi: N -> N as a finite table; off the table either undefined or the
    shift n -> n + shift (shift 0 is the identity)."""

    table: tuple[tuple[int, int], ...]
    default: str = "undefined"  # "undefined" | "shift"
    shift: int = 0

    def __post_init__(self):
        if self.default not in ("undefined", "shift"):
            raise ValueError("default must be 'undefined' or 'shift'")
        keys = [k for k, _ in self.table]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate table keys")

    def mapping(self) -> dict[int, int]:
        return dict(self.table)

    def apply(self, n: int) -> Optional[int]:
        m = self.mapping()
        if n in m:
            return m[n]
        if self.default == "shift":
            return n + self.shift
        return None

    def injective_on(self, window: int) -> bool:
        """Injectivity over table keys plus (for shift rule) 0..window-1."""
        m = self.mapping()
        values = list(m.values())
        if len(set(values)) != len(values):
            return False
        if self.default == "shift":
            off = [n + self.shift for n in range(window) if n not in m]
            all_vals = values + off
            if len(set(all_vals)) != len(all_vals):
                return False
        return True

    def in_image(self, v: int) -> bool:
        m = self.mapping()
        if v in m.values():
            return True
        if self.default == "shift":
            n = v - self.shift
            return n >= 0 and n not in m
        return False

    @staticmethod
    def identity() -> "FiniteInjection":
        return FiniteInjection((), default="shift", shift=0)

    @staticmethod
    def from_permutation(perm: Sequence[int]) -> "FiniteInjection":
        """Permutation of 0..len-1, identity beyond."""
        return FiniteInjection(
            tuple(enumerate(perm)), default="shift", shift=0
        )


@dataclass(frozen=True)
class PairInjection:
    """Injective xi: N -> N x N as a finite table (undefined off-table)."""

    table: tuple[tuple[int, tuple[int, int]], ...]

    def __post_init__(self):
        vals = [v for _, v in self.table]
        if len(set(vals)) != len(vals):
            raise ValueError("not injective")

    def mapping(self) -> dict[int, tuple[int, int]]:
        return dict(self.table)

    def in_image(self, rc: tuple[int, int]) -> bool:
        return rc in dict(self.table).values()


def cantor_pairing(n: int) -> tuple[int, int]:
    """The standard diagonal bijection N -> N x N."""
    w = 0
    while (w + 1) * (w + 2) // 2 <= n:
        w += 1
    t = w * (w + 1) // 2
    d = n - t
    return (w - d, d)
