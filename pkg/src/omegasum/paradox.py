"""The paradoxical positive reals: a monoid on {0} + X + S in which the
terminating and non-terminating binary expansions of a dyadic rational are
distinct elements, so the halving geometric series does not reach 1.

S holds positive dyadics as terminating expansions; X holds positive
rationals as (eventually periodic) non-terminating expansions.  Mixed
addition first rewrites the S summand non-terminating, so it lands in X.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction


class ZPKind(enum.Enum):
    ZERO = "zero"
    S = "terminating"
    X = "nonterminating"


@dataclass(frozen=True)
class ZPElem:
    kind: ZPKind
    value: Fraction

    def __post_init__(self):
        if self.kind is ZPKind.ZERO:
            if self.value != 0:
                raise ValueError("zero element must carry value 0")
            return
        if self.value <= 0:
            raise ValueError("S and X elements are strictly positive")
        if self.kind is ZPKind.S and not _is_dyadic(self.value):
            raise ValueError("terminating expansions are exactly the dyadics")

    def __repr__(self) -> str:
        return render_literal(self)


def _is_dyadic(fr: Fraction) -> bool:
    d = fr.denominator
    return d & (d - 1) == 0


ZP_ZERO = ZPElem(ZPKind.ZERO, Fraction(0))


def zp_terminating(value) -> ZPElem:
    return ZPElem(ZPKind.S, Fraction(value))


def zp_nonterminating(value) -> ZPElem:
    return ZPElem(ZPKind.X, Fraction(value))


def zp_value(a: ZPElem) -> Fraction:
    """The value-forgetting map to the non-negative rationals (a monoid
    morphism: it sends + to +)."""
    return a.value


def to_nonterminating(s: ZPElem) -> ZPElem:
    """Rewrite a terminating expansion by replacing its last 1 with 0 and
    filling 1s after it; the value is unchanged but the element now lives
    in X.  This is the semigroup map gluing S onto X."""
    if s.kind is not ZPKind.S:
        raise ValueError("only terminating elements rewrite")
    return ZPElem(ZPKind.X, s.value)


def zp_add(a: ZPElem, b: ZPElem) -> ZPElem:
    """Zero is the unit; S+S stays terminating; any X summand forces the
    non-terminating variant (the S side is rewritten first)."""
    if a.kind is ZPKind.ZERO:
        return b
    if b.kind is ZPKind.ZERO:
        return a
    total = a.value + b.value
    if a.kind is ZPKind.S and b.kind is ZPKind.S:
        return ZPElem(ZPKind.S, total)
    return ZPElem(ZPKind.X, total)


def zp_leq(a: ZPElem, b: ZPElem) -> bool:
    """Order by witness: exists u with a + u = b.  Variant analysis: a
    terminating target needs terminating-or-zero summands; a
    non-terminating target accepts any filler of positive value."""
    if a == b:
        return True
    if a.kind is ZPKind.ZERO:
        return True
    if b.kind is ZPKind.S:
        # u must be in S and a in S (zero/equal cases handled above)
        return a.kind is ZPKind.S and a.value < b.value
    if b.kind is ZPKind.X:
        if a.kind is ZPKind.X:
            return a.value <= b.value
        return a.value < b.value  # a in S; u = X(b - a)
    return False


# ---------------------------------------------------------------------------
# Literals: "0", "t:<bits>.<bits>" for terminating, and
# "r:<bits>.<pre>(<block>)" for pre-period plus repeating block.

_T_RE = re.compile(r"^t:([01]+)(?:\.([01]*))?$")
_R_RE = re.compile(r"^r:([01]+)(?:\.([01]*))?\(([01]+)\)$")


def parse_literal(text: str) -> ZPElem:
    text = text.strip()
    if text == "0":
        return ZP_ZERO
    m = _T_RE.match(text)
    if m:
        int_bits, frac_bits = m.group(1), m.group(2) or ""
        value = Fraction(int(int_bits, 2))
        for j, bit in enumerate(frac_bits, start=1):
            if bit == "1":
                value += Fraction(1, 2**j)
        if value <= 0:
            raise ValueError("terminating elements are strictly positive")
        return ZPElem(ZPKind.S, value)
    m = _R_RE.match(text)
    if m:
        int_bits, pre_bits, block = m.group(1), m.group(2) or "", m.group(3)
        if "1" not in block:
            raise ValueError("an all-zero block denotes a terminating expansion")
        value = Fraction(int(int_bits, 2))
        for j, bit in enumerate(pre_bits, start=1):
            if bit == "1":
                value += Fraction(1, 2**j)
        q = len(block)
        value += Fraction(int(block, 2), (2**q - 1)) / 2 ** len(pre_bits)
        return ZPElem(ZPKind.X, value)
    raise ValueError(f"bad paradoxical literal: {text!r}")


def _expansion_parts(value: Fraction) -> tuple[int, str, str]:
    """Canonical non-terminating expansion of a positive rational:
    (integer, pre-period bits, repeating block)."""
    n = value.numerator // value.denominator
    frac = value - n
    if _is_dyadic(value):
        # terminating digits, then replace the last 1 by 0 and repeat 1s
        bits = []
        while frac:
            frac *= 2
            d = int(frac)
            bits.append(d)
            frac -= d
        if not bits:  # integer: borrow one
            return (n - 1, "", "1")
        bits[-1] = 0  # final digit is 1 by exactness
        return (n, "".join(map(str, bits)), "1")
    seen: dict[Fraction, int] = {}
    bits: list[int] = []
    while frac not in seen:
        seen[frac] = len(bits)
        frac *= 2
        d = int(frac)
        bits.append(d)
        frac -= d
    start = seen[frac]
    pre = "".join(map(str, bits[:start]))
    block = "".join(map(str, bits[start:]))
    return (n, pre, block)


def render_literal(e: ZPElem) -> str:
    if e.kind is ZPKind.ZERO:
        return "0"
    if e.kind is ZPKind.S:
        n = e.value.numerator // e.value.denominator
        frac = e.value - n
        bits = []
        while frac:
            frac *= 2
            d = int(frac)
            bits.append(str(d))
            frac -= d
        frac_part = f".{''.join(bits)}" if bits else ".0"
        return f"t:{n:b}{frac_part}"
    n, pre, block = _expansion_parts(e.value)
    dot = f".{pre}" if pre else "."
    return f"r:{n:b}{dot}({block})"


def display_expansion(e: ZPElem, digits: int = 12) -> str:
    """Human display with an ellipsis for the repeating tail."""
    if e.kind is ZPKind.ZERO:
        return "0"
    if e.kind is ZPKind.S:
        lit = render_literal(e)[2:]
        return f"{lit}…".replace("…", "00…")
    n, pre, block = _expansion_parts(e.value)
    shown = (pre + block * ((digits - len(pre)) // len(block) + 1))[:digits]
    return f"{n:b}.{shown}…"
