"""Integer sets: pairs of finite sets with injections (or bijections) on
disjoint unions as morphisms, composed by feedback through the shared
block.  Cardinality |X| - |U| lands in the integers.

Disjoint-union order is fixed throughout: first block then second, X
before V in domains and Y before U in codomains.  Morphism equality is
on-the-nose table equality.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Injection:
    """An injective map {0..dom-1} -> {0..cod-1} given by its table."""

    dom: int
    cod: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.dom:
            raise ValueError("table length must equal the domain size")
        if any(not (0 <= v < self.cod) for v in self.table):
            raise ValueError("table entry out of codomain range")
        if len(set(self.table)) != len(self.table):
            raise ValueError("table is not injective")

    @property
    def is_bijection(self) -> bool:
        return self.dom == self.cod

    def apply(self, i: int) -> int:
        return self.table[i]

    def then(self, g: "Injection") -> "Injection":
        """Plain composition g . self."""
        if self.cod != g.dom:
            raise ValueError("composition size mismatch")
        return Injection(self.dom, g.cod, tuple(g.table[v] for v in self.table))

    @staticmethod
    def identity(n: int) -> "Injection":
        return Injection(n, n, tuple(range(n)))


def trace_injection(f: Injection, main_dom: int, main_cod: int, shared: int) -> Injection:
    """Feedback composition of f: main_dom + shared -> main_cod + shared:
    iterate each main-domain point through the shared block until it exits
    into the main codomain.  Injective because f is and the shared block is
    finite; bijective whenever f is.

    The orbit re-enters distinct shared slots, so it exits within
    shared + 1 steps; a longer orbit is an internal-invariant violation.
    """
    if f.dom != main_dom + shared or f.cod != main_cod + shared:
        raise ValueError("split sizes do not match the map")
    table = []
    for x in range(main_dom):
        y = f.apply(x)
        steps = 0
        while y >= main_cod:
            steps += 1
            if steps > shared + 1:
                raise AssertionError("trace orbit failed to exit the shared block")
            y = f.apply(main_dom + (y - main_cod))
        table.append(y)
    return Injection(main_dom, main_cod, tuple(table))


@dataclass(frozen=True)
class IntObject:
    """A pair (pos, neg) of finite sets, by size."""

    pos: int
    neg: int

    def dual(self) -> "IntObject":
        return IntObject(self.neg, self.pos)

    def tensor(self, other: "IntObject") -> "IntObject":
        return IntObject(self.pos + other.pos, self.neg + other.neg)


UNIT_OBJECT = IntObject(0, 0)


@dataclass(frozen=True)
class IntMorphism:
    """f: (X,U) -> (Y,V) carried by an injection X+V -> Y+U."""

    dom: IntObject
    cod: IntObject
    map: Injection

    def __post_init__(self):
        if self.map.dom != self.dom.pos + self.cod.neg:
            raise ValueError("map domain must be X+V")
        if self.map.cod != self.cod.pos + self.dom.neg:
            raise ValueError("map codomain must be Y+U")

    @property
    def is_bijective(self) -> bool:
        return self.map.is_bijection


def int_identity(obj: IntObject) -> IntMorphism:
    return IntMorphism(obj, obj, Injection.identity(obj.pos + obj.neg))


def pre_trace_composite(g: IntMorphism, f: IntMorphism) -> Injection:
    """The injection X+W+V -> Z+U+V whose trace over V composes g after f:
    points of X+V follow f, continuing through g when they land in Y and
    exiting into U otherwise; points of W follow g directly."""
    if f.cod != g.dom:
        raise ValueError("object mismatch")
    x, u = f.dom.pos, f.dom.neg
    y, v = f.cod.pos, f.cod.neg
    z, w = g.cod.pos, g.cod.neg

    def through_g(q: int) -> int:
        r = g.map.apply(q)
        return r if r < z else z + u + (r - z)  # g's V block sits last

    table = []
    for i in range(x):  # p in X: f first
        q = f.map.apply(i)
        table.append(through_g(q) if q < y else z + (q - y))
    for j in range(w):  # p in W: g directly
        table.append(through_g(y + j))
    for k in range(v):  # p in V: f first
        q = f.map.apply(x + k)
        table.append(through_g(q) if q < y else z + (q - y))
    return Injection(x + w + v, z + u + v, tuple(table))


def int_compose(g: IntMorphism, f: IntMorphism) -> IntMorphism:
    """g . f via the trace of the feedback composite over the shared V."""
    v = f.cod.neg
    shared = pre_trace_composite(g, f)
    x, u = f.dom.pos, f.dom.neg
    z, w = g.cod.pos, g.cod.neg
    traced = trace_injection(shared, x + w, z + u, v)
    return IntMorphism(f.dom, g.cod, traced)


def int_tensor_morphism(a: IntMorphism, b: IntMorphism) -> IntMorphism:
    """Blockwise disjoint union with the matching block reshuffle."""
    dom = a.dom.tensor(b.dom)
    cod = a.cod.tensor(b.cod)
    x1, u1, y1, v1 = a.dom.pos, a.dom.neg, a.cod.pos, a.cod.neg
    x2, u2, y2, v2 = b.dom.pos, b.dom.neg, b.cod.pos, b.cod.neg

    def out_a(r: int) -> int:
        return r if r < y1 else y1 + y2 + (r - y1)

    def out_b(r: int) -> int:
        return y1 + r if r < y2 else y1 + y2 + u1 + (r - y2)

    table = []
    for i in range(x1):
        table.append(out_a(a.map.apply(i)))
    for i in range(x2):
        table.append(out_b(b.map.apply(i)))
    for k in range(v1):
        table.append(out_a(a.map.apply(x1 + k)))
    for k in range(v2):
        table.append(out_b(b.map.apply(x2 + k)))
    mp = Injection(dom.pos + cod.neg, cod.pos + dom.neg, tuple(table))
    return IntMorphism(dom, cod, mp)


def int_tensor(a, b):
    if isinstance(a, IntObject) and isinstance(b, IntObject):
        return a.tensor(b)
    if isinstance(a, IntMorphism) and isinstance(b, IntMorphism):
        return int_tensor_morphism(a, b)
    raise TypeError("tensor takes two objects or two morphisms")


def int_dual(obj: IntObject) -> IntObject:
    return obj.dual()


def int_unit(obj: IntObject) -> IntMorphism:
    """(0,0) -> obj (x) obj*: the underlying injection is the swap
    U+X -> X+U."""
    x, u = obj.pos, obj.neg
    cod = obj.tensor(obj.dual())
    table = tuple(range(x, x + u)) + tuple(range(x))  # swap the two blocks
    mp = Injection(u + x, x + u, table)
    return IntMorphism(UNIT_OBJECT, cod, mp)


def int_counit(obj: IntObject) -> IntMorphism:
    """obj* (x) obj -> (0,0): again the swap U+X -> X+U."""
    x, u = obj.pos, obj.neg
    dom = obj.dual().tensor(obj)
    table = tuple(range(x, x + u)) + tuple(range(x))
    mp = Injection(u + x, x + u, table)
    return IntMorphism(dom, UNIT_OBJECT, mp)


def check_snake(obj: IntObject) -> bool:
    """Both triangle identities for the chosen duals.  In this strict
    skeletal presentation (A (x) A*) (x) A and A (x) (A* (x) A) are the
    same block sequence, so the triangles compose on the nose."""
    ida = int_identity(obj)
    idd = int_identity(obj.dual())
    left = int_compose(int_tensor(ida, int_counit(obj)), int_tensor(int_unit(obj), ida))
    right = int_compose(
        int_tensor(int_counit(obj), idd), int_tensor(idd, int_unit(obj))
    )
    return left == ida and right == idd


def cardinality(x) -> int:
    """|X| - |U|; constant along bijective morphisms since those force
    |X| + |V| = |Y| + |U|."""
    if isinstance(x, IntObject):
        return x.pos - x.neg
    if isinstance(x, IntMorphism):
        return cardinality(x.dom)
    raise TypeError("cardinality takes an object or a morphism")


def embed_injection(f: Injection) -> IntMorphism:
    """The finite-set category sits inside: an injection X -> Y becomes
    (X, 0) -> (Y, 0) (the trace of any composite there is trivial)."""
    return IntMorphism(IntObject(f.dom, 0), IntObject(f.cod, 0), f)


# ---------------------------------------------------------------------------
# Structured-text morphism files, bit-exact


def serialize(m: IntMorphism, mode: str = "FI") -> str:
    if mode not in ("FB", "FI"):
        raise ValueError("mode must be FB or FI")
    if mode == "FB" and not m.is_bijective:
        raise ValueError("FB morphisms must be bijective")
    lines = [
        f"dom:{{x:{m.dom.pos},u:{m.dom.neg}}}",
        f"cod:{{y:{m.cod.pos},v:{m.cod.neg}}}",
        f"map:[{','.join(str(v) for v in m.map.table)}]",
        f"mode:{mode}",
    ]
    return "\n".join(lines) + "\n"


def parse(text: str) -> tuple[IntMorphism, str]:
    fields = {}
    for line in text.strip().splitlines():
        key, _, rest = line.partition(":")
        fields[key.strip()] = rest.strip()
    try:
        dom_m = _parse_pair(fields["dom"], "x", "u")
        cod_m = _parse_pair(fields["cod"], "y", "v")
        body = fields["map"]
        mode = fields["mode"]
    except KeyError as exc:
        raise ValueError(f"missing field {exc.args[0]!r}") from None
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError("map must be a bracketed list")
    inner = body[1:-1]
    table = tuple(int(t) for t in inner.split(",")) if inner else ()
    dom = IntObject(*dom_m)
    cod = IntObject(*cod_m)
    mp = Injection(dom.pos + cod.neg, cod.pos + dom.neg, table)
    m = IntMorphism(dom, cod, mp)
    if mode == "FB" and not m.is_bijective:
        raise ValueError("FB morphism is not bijective")
    if mode not in ("FB", "FI"):
        raise ValueError(f"unknown mode {mode!r}")
    return m, mode


def _parse_pair(text: str, first: str, second: str) -> tuple[int, int]:
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"bad object syntax: {text!r}")
    parts = dict(p.split(":") for p in text[1:-1].split(","))
    return int(parts[first]), int(parts[second])
