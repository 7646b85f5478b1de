"""Exact carriers for [0, inf]: saturating extended naturals, dyadic
rationals m/2^e with a point at infinity, and lower reals given by
monotone streams of dyadic lower bounds.

All values are immutable.  LowerReal memoizes its bound stream
internally; the memoization is idempotent (bound functions are pure), so
values are safe to share across threads without locking.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional


# ---------------------------------------------------------------------------
# Extended naturals


@dataclass(frozen=True)
class ExtNat:
    """A natural number or the point at infinity (n is None)."""

    n: Optional[int]

    def __post_init__(self):
        if self.n is not None and self.n < 0:
            raise ValueError("ExtNat must be non-negative")

    @staticmethod
    def of(n: int) -> "ExtNat":
        return ExtNat(n)

    @property
    def is_infinite(self) -> bool:
        return self.n is None

    @property
    def is_zero(self) -> bool:
        return self.n == 0

    def __add__(self, other: "ExtNat") -> "ExtNat":
        if self.is_infinite or other.is_infinite:
            return EXTNAT_INF
        return ExtNat(self.n + other.n)

    def __mul__(self, other: "ExtNat") -> "ExtNat":
        # 0 absorbs even against infinity.
        if self.is_zero or other.is_zero:
            return EXTNAT_ZERO
        if self.is_infinite or other.is_infinite:
            return EXTNAT_INF
        return ExtNat(self.n * other.n)

    def minus(self, other: "ExtNat") -> Optional["ExtNat"]:
        """Exact truncated subtraction witness: u with other + u = self,
        or None when no such u exists.  inf - inf yields 0 (one valid u)."""
        if other.is_infinite:
            return EXTNAT_ZERO if self.is_infinite else None
        if self.is_infinite:
            return EXTNAT_INF
        if self.n < other.n:
            return None
        return ExtNat(self.n - other.n)

    def __le__(self, other: "ExtNat") -> bool:
        if other.is_infinite:
            return True
        if self.is_infinite:
            return False
        return self.n <= other.n

    def __lt__(self, other: "ExtNat") -> bool:
        return self <= other and self != other

    def __str__(self) -> str:
        return "inf" if self.is_infinite else str(self.n)


EXTNAT_ZERO = ExtNat(0)
EXTNAT_ONE = ExtNat(1)
EXTNAT_INF = ExtNat(None)


def extnat_parse(text: str) -> ExtNat:
    text = text.strip()
    if text == "inf":
        return EXTNAT_INF
    return ExtNat(int(text))


# ---------------------------------------------------------------------------
# Extended dyadic rationals


@dataclass(frozen=True)
class DyadicExt:
    """m/2^e in canonical form (m odd, or m=0 with e=0), or infinity."""

    num: int
    exp: int
    infinite: bool = False

    def __post_init__(self):
        if self.infinite:
            object.__setattr__(self, "num", 0)
            object.__setattr__(self, "exp", 0)
            return
        if self.num < 0 or self.exp < 0:
            raise ValueError("DyadicExt must be non-negative")
        num, exp = self.num, self.exp
        if num == 0:
            exp = 0
        else:
            while num % 2 == 0 and exp > 0:
                num //= 2
                exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    @staticmethod
    def of(num: int, exp: int = 0) -> "DyadicExt":
        return DyadicExt(num, exp)

    @staticmethod
    def from_fraction(fr: Fraction) -> "DyadicExt":
        if fr < 0:
            raise ValueError("negative value")
        den = fr.denominator
        e = den.bit_length() - 1
        if den != 1 << e:
            raise ValueError(f"{fr} is not dyadic")
        return DyadicExt(fr.numerator, e)

    @property
    def is_infinite(self) -> bool:
        return self.infinite

    @property
    def is_zero(self) -> bool:
        return not self.infinite and self.num == 0

    def value(self) -> Fraction:
        if self.infinite:
            raise ValueError("infinite dyadic has no finite value")
        return Fraction(self.num, 1 << self.exp)

    def __add__(self, other: "DyadicExt") -> "DyadicExt":
        if self.infinite or other.infinite:
            return DYADIC_INF
        e = max(self.exp, other.exp)
        m = (self.num << (e - self.exp)) + (other.num << (e - other.exp))
        return DyadicExt(m, e)

    def __mul__(self, other: "DyadicExt") -> "DyadicExt":
        # 0 absorbs even against infinity.
        if self.is_zero or other.is_zero:
            return DYADIC_ZERO
        if self.infinite or other.infinite:
            return DYADIC_INF
        return DyadicExt(self.num * other.num, self.exp + other.exp)

    def halve(self) -> "DyadicExt":
        if self.infinite:
            return DYADIC_INF
        if self.num == 0:
            return DYADIC_ZERO
        return DyadicExt(self.num, self.exp + 1)

    def minus(self, other: "DyadicExt") -> Optional["DyadicExt"]:
        """u with other + u = self, or None.  inf - inf yields 0."""
        if other.infinite:
            return DYADIC_ZERO if self.infinite else None
        if self.infinite:
            return DYADIC_INF
        e = max(self.exp, other.exp)
        m = (self.num << (e - self.exp)) - (other.num << (e - other.exp))
        if m < 0:
            return None
        return DyadicExt(m, e)

    def __le__(self, other: "DyadicExt") -> bool:
        if other.infinite:
            return True
        if self.infinite:
            return False
        e = max(self.exp, other.exp)
        return (self.num << (e - self.exp)) <= (other.num << (e - other.exp))

    def __lt__(self, other: "DyadicExt") -> bool:
        return self <= other and self != other

    def pow(self, k: int) -> "DyadicExt":
        if k < 0:
            raise ValueError("negative power")
        if k == 0:
            return DYADIC_ONE
        if self.infinite:
            return DYADIC_INF
        return DyadicExt(self.num ** k, self.exp * k)

    def __str__(self) -> str:
        if self.infinite:
            return "inf"
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"


DYADIC_ZERO = DyadicExt(0, 0)
DYADIC_ONE = DyadicExt(1, 0)
DYADIC_INF = DyadicExt(0, 0, True)


def dyadic_parse(text: str) -> DyadicExt:
    """Accepts "inf", an integer, "m/2^e", or "p/q" with q a power of two."""
    text = text.strip()
    if text == "inf":
        return DYADIC_INF
    if "/" not in text:
        return DyadicExt(int(text), 0)
    num_s, den_s = text.split("/", 1)
    num = int(num_s)
    if den_s.startswith("2^"):
        return DyadicExt(num, int(den_s[2:]))
    den = int(den_s)
    e = den.bit_length() - 1
    if den != 1 << e:
        raise ValueError(f"denominator {den} is not a power of two")
    return DyadicExt(num, e)


def dyadic_render(d: DyadicExt) -> str:
    """Canonical display.  Values one dyadic step below an integer with a
    fine denominator print as "c - 2^-e" (keeps deep partial sums legible)."""
    if d.infinite:
        return "inf"
    if d.exp >= 16 and (d.num + 1) % (1 << d.exp) == 0:
        c = (d.num + 1) >> d.exp
        return f"{c} - 2^-{d.exp}"
    return str(d)


def floor_to_bits(fr: Fraction, bits: int) -> DyadicExt:
    """Largest dyadic with denominator 2^bits that is <= fr (fr >= 0)."""
    if fr < 0:
        raise ValueError("negative value")
    m = (fr.numerator << bits) // fr.denominator
    return DyadicExt(m, bits)


# ---------------------------------------------------------------------------
# Lower reals


class LowerReal:
    """A value of [0, inf] known through a monotone non-decreasing stream
    of dyadic lower bounds; the represented value is the supremum.

    `modulus`, when present, maps requested bits k to a stream index j
    with value - bound(j) <= 2^-k (two-sided knowledge).  `exact`, when
    present, certifies the represented value as that dyadic.
    """

    __slots__ = ("_fn", "_cache", "_lock", "modulus", "exact")

    def __init__(
        self,
        fn: Callable[[int], DyadicExt],
        modulus: Optional[Callable[[int], int]] = None,
        exact: Optional[DyadicExt] = None,
    ):
        self._fn = fn
        self._cache: list[DyadicExt] = []
        self._lock = threading.RLock()
        self.modulus = modulus
        self.exact = exact

    @staticmethod
    def embed(d: DyadicExt) -> "LowerReal":
        return LowerReal(lambda k: d, modulus=lambda k: 0, exact=d)

    @staticmethod
    def from_fraction(fr: Fraction) -> "LowerReal":
        return LowerReal(lambda k: floor_to_bits(fr, k), modulus=lambda k: k)

    def bound(self, k: int) -> DyadicExt:
        """Monotone lower bound at stage k (memoized, monotonized).  The
        cache extension is serialized so concurrent readers agree."""
        cache = self._cache
        if len(cache) > k:
            return cache[k]
        with self._lock:
            while len(cache) <= k:
                i = len(cache)
                v = self._fn(i)
                if cache and not (cache[-1] <= v):
                    v = cache[-1]
                cache.append(v)
        return cache[k]

    def approx(self, bits: int) -> DyadicExt:
        return self.bound(bits)

    def two_sided(self, bits: int) -> DyadicExt:
        """Bound within 2^-bits of the value; requires a modulus."""
        if self.modulus is None:
            raise ValueError("no modulus: value is one-sided")
        return self.bound(self.modulus(bits))

    def halve(self) -> "LowerReal":
        return LowerReal(
            lambda k: self.bound(k).halve(),
            modulus=self.modulus,
            exact=None if self.exact is None else self.exact.halve(),
        )

    def __add__(self, other: "LowerReal") -> "LowerReal":
        mod = None
        if self.modulus is not None and other.modulus is not None:
            sm, om = self.modulus, other.modulus
            mod = lambda k: max(sm(k + 1), om(k + 1))
        exact = None
        if self.exact is not None and other.exact is not None:
            exact = self.exact + other.exact
        return LowerReal(lambda k: self.bound(k) + other.bound(k), mod, exact)

    def __mul__(self, other: "LowerReal") -> "LowerReal":
        # Stagewise product; monotone since all bounds are non-negative,
        # and 0*inf = 0 holds at every stage through DyadicExt.
        exact = None
        if self.exact is not None and other.exact is not None:
            exact = self.exact * other.exact
        return LowerReal(lambda k: self.bound(k) * other.bound(k), None, exact)

    def scale(self, d: DyadicExt) -> "LowerReal":
        return self * LowerReal.embed(d)

    def __repr__(self) -> str:
        if self.exact is not None:
            return f"LowerReal(= {self.exact})"
        return f"LowerReal(>= {self.bound(8)} @8)"


LOWER_ZERO = LowerReal.embed(DYADIC_ZERO)


def as_lower(x) -> LowerReal:
    if isinstance(x, LowerReal):
        return x
    if isinstance(x, DyadicExt):
        return LowerReal.embed(x)
    raise TypeError(f"cannot embed {type(x).__name__} into LowerReal")


def lower_render(x: LowerReal, bits: int) -> str:
    """CLI display: "= d ± 2^-k (k bits)" with a modulus, else ">= d (k bits)"."""
    if x.exact is not None:
        return dyadic_render(x.exact)
    if x.modulus is not None:
        return f"= {dyadic_render(x.two_sided(bits))} ± 2^-{bits} ({bits} bits)"
    return f"≥ {dyadic_render(x.bound(bits))} ({bits} bits)"
