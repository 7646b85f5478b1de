"""Command-line surface: expression evaluation to k bits, integer-set
composition, paradoxical arithmetic, and seeded law-suite execution.

Exit codes: 0 pass, 1 failures, 2 usage error, 3 inconclusive-only.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from .base import CheckResult
from .families import Lazy
from .instances import lower_real_monoid
from .intsets import (
    IntMorphism,
    IntObject,
    cardinality,
    int_compose,
    parse as parse_morphism,
    serialize,
    trace_injection,
)
from .magnitude import (
    FormalMagnitude,
    binary_expand,
    formal_normalize,
    formal_value,
    halving_endo,
    identity_endo,
    mul_extended,
    orbit_sum,
    render_expansion,
    scalar_action,
    zero_endo,
)
from .monoid import binary_add
from .numbers import (
    DYADIC_ONE,
    DyadicExt,
    EXTNAT_INF,
    ExtNat,
    LowerReal,
    dyadic_parse,
    dyadic_render,
    lower_render,
)
from .riglog import (
    OrderPreservingMap,
    geometric_inverse,
    log_add,
    log_of,
    log_series_sum,
    omega_assoc_check,
    omega_from_rig,
    omega_from_series,
    p_sum,
)
from .paradox import parse_literal, render_literal, to_nonterminating, zp_add, zp_leq, zp_value
from . import suites


class CliError(Exception):
    pass


# ---------------------------------------------------------------------------
# Expression syntax: s-expressions with typed literals.
#
#   (mul 1/2 3/4)                  (sum :inst extreal (geom 1/2))
#   (P [1 2 3])                    (tilde halve 1)
#   (omegacheck :inst extnat [1 2 3 4] (fibers 2 2))
#
# Bare integers default to the extended naturals; fractions are dyadics.
# Cross-instance coercion happens only through an explicit :inst tag.

_TOKEN = re.compile(r"\s*(\(|\)|\[|\]|[^\s()\[\]]+)")


def tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


def parse_expr(text: str):
    tokens = tokenize(text)
    if not tokens:
        raise CliError("empty expression")
    tree, rest = _parse(tokens, 0)
    if rest != len(tokens):
        tok, at = tokens[rest]
        raise CliError(f"unexpected {tok!r} at offset {at}")
    return tree


def _parse(tokens, i):
    tok, at = tokens[i]
    if tok == "(" or tok == "[":
        close = ")" if tok == "(" else "]"
        items = []
        i += 1
        while True:
            if i >= len(tokens):
                raise CliError(f"unclosed {tok!r} at offset {at}")
            if tokens[i][0] == close:
                return (("call" if close == ")" else "list"), items, at), i + 1
            item, i = _parse(tokens, i)
            items.append(item)
    if tok in (")", "]"):
        raise CliError(f"unmatched {tok!r} at offset {at}")
    return ("atom", tok, at), i + 1


_INT_RE = re.compile(r"^\d+$")
_FRAC_RE = re.compile(r"^\d+/(2\^)?\d+$")
_CHI_RE = re.compile(r"^chi\{([^}]*)\}$")


@dataclass
class Value:
    kind: str  # nat | dyadic | lower | chi | log | expansion | check
    payload: object

    def describe(self) -> str:
        return self.kind


def _atom_value(tok: str, at: int) -> Value:
    if tok == "inf":
        return Value("dyadic", dyadic_parse("inf"))
    if _INT_RE.match(tok):
        return Value("nat", ExtNat(int(tok)))
    if _FRAC_RE.match(tok):
        try:
            return Value("dyadic", dyadic_parse(tok))
        except ValueError as exc:
            raise CliError(f"{exc} at offset {at}")
    m = _CHI_RE.match(tok)
    if m:
        coeffs = {}
        body = m.group(1).strip()
        if body:
            for part in body.split(","):
                k, _, v = part.partition(":")
                coeffs[int(k)] = EXTNAT_INF if v == "inf" else ExtNat(int(v))
        return Value("chi", FormalMagnitude.of(coeffs))
    raise CliError(f"unknown literal {tok!r} at offset {at}")


def _as_dyadic(v: Value, at: int) -> DyadicExt:
    if v.kind == "dyadic":
        return v.payload
    if v.kind == "nat":
        n = v.payload
        return dyadic_parse("inf") if n.is_infinite else DyadicExt(n.n, 0)
    raise CliError(f"expected a dyadic value, got {v.kind} at offset {at}")


def _as_lower(v: Value, at: int) -> LowerReal:
    if v.kind == "lower":
        return v.payload
    return LowerReal.embed(_as_dyadic(v, at))


def _split_inst(items):
    """Extract a (:inst name) tag from call arguments."""
    inst = None
    rest = []
    i = 0
    while i < len(items):
        node = items[i]
        if node[0] == "atom" and node[1] == ":inst":
            if i + 1 >= len(items) or items[i + 1][0] != "atom":
                raise CliError("':inst' needs an instance name")
            inst = items[i + 1][1]
            i += 2
            continue
        rest.append(node)
        i += 1
    return inst, rest


class Evaluator:
    def __init__(self, bits: int):
        self.bits = bits

    # families -----------------------------------------------------------
    def family_values(self, node):
        kind, items, at = node
        if kind == "list":
            return [self.eval(n) for n in items], None
        if kind == "call" and items and items[0][1] == "geom":
            if len(items) != 2:
                raise CliError("(geom q) takes one ratio")
            q = _as_dyadic(self.eval(items[1]), at)
            if q.is_infinite or not (q <= DYADIC_ONE) or q.is_zero:
                raise CliError("(geom q) needs dyadic 0 < q <= 1")
            fam = Lazy(lambda n: LowerReal.embed(q.pow(n + 1)))
            return None, fam
        raise CliError(f"expected a family at offset {at}")

    def pick_sum_instance(self, tag, values, lazy):
        if lazy is not None:
            name = tag or "extreal"
            if name != "extreal":
                raise CliError("lazy families sum over extreal only")
            return suites.get_instance(name)
        if tag is not None:
            return suites.get_instance(tag)
        if all(v.kind == "nat" for v in values):
            return suites.get_instance("extnat")
        return suites.get_instance("dyadic")

    def coerce_to_instance(self, inst, values, at):
        name = inst.name
        out = []
        for v in values:
            if name == "extnat":
                if v.kind != "nat":
                    raise CliError(f"instance extnat needs naturals at offset {at}")
                out.append(v.payload)
            elif name == "dyadic" or name.endswith("dyadic"):
                out.append(_as_dyadic(v, at))
            elif name == "extreal":
                out.append(_as_lower(v, at))
            elif name.startswith("P-"):
                base = "extnat" if "extnat" in name else "dyadic"
                if base == "extnat":
                    if v.kind != "nat":
                        raise CliError("P over the naturals needs naturals")
                    out.append(v.payload)
                else:
                    out.append(_as_dyadic(v, at))
            else:
                raise CliError(f"instance {name} not usable in expressions")
        return out

    # evaluation ---------------------------------------------------------
    def eval(self, node) -> Value:
        kind, content, at = node
        if kind == "atom":
            return _atom_value(content, at)
        if kind == "list":
            raise CliError(f"bare list outside an operator at offset {at}")
        items = content
        if not items or items[0][0] != "atom":
            raise CliError(f"operator expected at offset {at}")
        op = items[0][1]
        inst_tag, args = _split_inst(items[1:])
        method = getattr(self, f"op_{op}", None)
        if method is None:
            raise CliError(f"unknown operator {op!r} at offset {at}")
        return method(inst_tag, args, at)

    def op_sum(self, tag, args, at) -> Value:
        if len(args) != 1:
            raise CliError("(sum FAMILY) takes one family")
        values, lazy = self.family_values(args[0])
        inst = self.pick_sum_instance(tag, values, lazy)
        if lazy is not None:
            return Value("lower", inst.sum(lazy))
        elems = self.coerce_to_instance(inst, values, at)
        total = inst.sum(inst.family_of(elems))
        return self.wrap(inst, total)

    def op_add(self, tag, args, at) -> Value:
        if len(args) != 2:
            raise CliError("(add a b) takes two arguments")
        values = [self.eval(a) for a in args]
        inst = self.pick_sum_instance(tag, values, None)
        a, b = self.coerce_to_instance(inst, values, at)
        return self.wrap(inst, binary_add(inst, a, b))

    def op_mul(self, tag, args, at) -> Value:
        if len(args) != 2:
            raise CliError("(mul a b) takes two arguments")
        va, vb = (self.eval(a) for a in args)
        if va.kind == "lower" or vb.kind == "lower":
            return Value("lower", mul_extended(_as_lower(va, at), _as_lower(vb, at)))
        return Value("dyadic", mul_extended(_as_dyadic(va, at), _as_dyadic(vb, at)))

    def op_halve(self, tag, args, at) -> Value:
        if len(args) != 1:
            raise CliError("(halve a) takes one argument")
        v = self.eval(args[0])
        if v.kind == "lower":
            return Value("lower", v.payload.halve())
        return Value("dyadic", _as_dyadic(v, at).halve())

    def op_P(self, tag, args, at) -> Value:
        if len(args) != 1:
            raise CliError("(P FAMILY) takes one family")
        values, lazy = self.family_values(args[0])
        if lazy is not None:
            raise CliError("(P ...) takes an explicit family")
        if tag is None:
            tag = "pnat" if all(v.kind == "nat" for v in values) else "pdyadic"
        if tag == "pnat":
            rig = suites.extnat_rig()
            elems = [v.payload if v.kind == "nat" else None for v in values]
            if any(e is None for e in elems):
                raise CliError("P over the naturals needs naturals")
        elif tag == "pdyadic":
            rig = suites.dyadic_rig()
            elems = [_as_dyadic(v, at) for v in values]
        else:
            raise CliError(f"unknown P instance {tag!r}")
        total = p_sum(rig, rig.base.family_of(elems))
        return self.wrap(rig.base, total)

    def op_geominv(self, tag, args, at) -> Value:
        if len(args) != 1:
            raise CliError("(geominv a) takes one dyadic")
        a = _as_dyadic(self.eval(args[0]), at)
        return Value("lower", geometric_inverse(a))

    def op_log(self, tag, args, at) -> Value:
        if len(args) != 1:
            raise CliError("(log a) takes one argument")
        return Value("log", log_of(_as_dyadic(self.eval(args[0]), at)))

    def op_logadd(self, tag, args, at) -> Value:
        if len(args) != 2:
            raise CliError("(logadd x y) takes two log elements")
        vx, vy = (self.eval(a) for a in args)
        if vx.kind != "log" or vy.kind != "log":
            raise CliError("(logadd ...) needs (log ...) operands")
        rig = suites.dyadic_rig()
        return Value("log", log_add(rig, vx.payload, vy.payload))

    def op_logsum(self, tag, args, at) -> Value:
        if len(args) != 1:
            raise CliError("(logsum [u1 u2 ...]) takes the certificates")
        values, lazy = self.family_values(args[0])
        if lazy is not None:
            raise CliError("(logsum ...) takes an explicit family")
        rig = suites.dyadic_rig()
        us = [_as_dyadic(v, at) for v in values]
        elems = [log_of(DYADIC_ONE + u) for u in us]
        return Value("log", log_series_sum(rig, elems, us, self.bits))

    def _endo(self, name: str, inst):
        if name == "halve":
            return halving_endo(inst)
        if name == "id":
            return identity_endo(inst)
        if name == "zero":
            return zero_endo(inst)
        raise CliError(f"unknown endomorphism {name!r} (halve, id, zero)")

    def op_tilde(self, tag, args, at) -> Value:
        if len(args) != 2 or args[0][0] != "atom":
            raise CliError("(tilde ENDO a) takes an endo name and a value")
        inst = lower_real_monoid()
        endo = self._endo(args[0][1], inst)
        a = _as_lower(self.eval(args[1]), at)
        return Value("lower", orbit_sum(endo, a))

    def op_action(self, tag, args, at) -> Value:
        if len(args) != 2:
            raise CliError("(action alpha a) takes a scalar and a value")
        alpha = _as_dyadic(self.eval(args[0]), at)
        a = _as_lower(self.eval(args[1]), at)
        return Value("lower", scalar_action(alpha, a, suites.extreal_zeno_module()))

    def op_expand(self, tag, args, at) -> Value:
        if not args:
            raise CliError("(expand d [nonterm]) takes a dyadic")
        nonterm = len(args) == 2 and args[1][0] == "atom" and args[1][1] == "nonterm"
        d = _as_dyadic(self.eval(args[0]), at)
        return Value("expansion", binary_expand(d, nonterminating=nonterm))

    def op_normal(self, tag, args, at) -> Value:
        if len(args) != 1:
            raise CliError("(normal chi{...}) takes one code")
        v = self.eval(args[0])
        if v.kind != "chi":
            raise CliError("(normal ...) takes a chi literal")
        return Value("chi", formal_normalize(v.payload))

    def op_value(self, tag, args, at) -> Value:
        if len(args) != 1:
            raise CliError("(value chi{...}) takes one code")
        v = self.eval(args[0])
        if v.kind != "chi":
            raise CliError("(value ...) takes a chi literal")
        return Value("dyadic", formal_value(v.payload))

    def op_omegacheck(self, tag, args, at) -> Value:
        if len(args) != 2:
            raise CliError("(omegacheck FAMILY (fibers ...)) takes two arguments")
        values, lazy = self.family_values(args[0])
        if lazy is not None:
            raise CliError("(omegacheck ...) takes an explicit family")
        fk, fitems, fat = args[1]
        if fk != "call" or not fitems or fitems[0][1] != "fibers":
            raise CliError("second argument must be (fibers s1 s2 ... [*])")
        sizes = []
        final_inf = False
        for node in fitems[1:]:
            if node[0] != "atom":
                raise CliError("fibre sizes are atoms")
            if node[1] == "*":
                final_inf = True
            else:
                sizes.append(int(node[1]))
        xi = OrderPreservingMap(tuple(sizes), final_infinite=final_inf)
        name = tag or ("extnat" if all(v.kind == "nat" for v in values) else "pdyadic")
        if name == "extnat":
            inst = suites.get_instance("extnat")
            om = omega_from_series(inst)
        elif name == "pnat":
            rig = suites.extnat_rig()
            inst, om = rig.base, omega_from_rig(rig)
        elif name == "pdyadic":
            rig = suites.dyadic_rig()
            inst, om = rig.base, omega_from_rig(rig)
        else:
            raise CliError(f"unknown omega instance {name!r}")
        elems = self.coerce_to_instance(inst, values, at)
        verdict = omega_assoc_check(om, inst.family_of(elems), xi, self.bits)
        return Value("check", verdict)

    def wrap(self, inst, value) -> Value:
        if inst.name in ("extnat", "P-extnat"):
            return Value("nat", value)
        if inst.name == "extreal":
            return Value("lower", value)
        return Value("dyadic", value)

    def render(self, v: Value) -> str:
        if v.kind == "nat":
            return str(v.payload)
        if v.kind == "dyadic":
            return dyadic_render(v.payload)
        if v.kind == "lower":
            return lower_render(v.payload, self.bits)
        if v.kind == "chi":
            inner = ",".join(f"{n}:{c}" for n, c in v.payload.coeffs)
            return f"chi{{{inner}}}"
        if v.kind == "log":
            base = v.payload.base
            shown = dyadic_render(base) if isinstance(base, DyadicExt) else lower_render(base, self.bits)
            return f"log({shown})"
        if v.kind == "expansion":
            return render_expansion(v.payload)
        if v.kind == "check":
            r: CheckResult = v.payload
            return "pass" if r.passed else f"{r.outcome.value}: {r.message}"
        raise CliError(f"cannot render {v.kind}")


# ---------------------------------------------------------------------------
# Subcommands


def cmd_eval(args) -> int:
    text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
    ev = Evaluator(args.bits)
    value = ev.eval(parse_expr(text))
    print(ev.render(value))
    if value.kind == "check":
        return 0 if value.payload.passed else 1
    return 0


def _read_morphism(path: str):
    return parse_morphism(Path(path).read_text())


def cmd_intset(args) -> int:
    if args.op == "card":
        m, _ = _read_morphism(args.files[0])
        print(cardinality(m))
        return 0
    if args.op == "compose":
        if len(args.files) != 2:
            raise CliError("compose takes two morphism files (applied in order)")
        f, mode_f = _read_morphism(args.files[0])
        g, mode_g = _read_morphism(args.files[1])
        if f.cod != g.dom:
            raise CliError(
                f"object mismatch: first codomain {f.cod} vs second domain {g.dom}"
            )
        mode = args.mode or ("FB" if mode_f == mode_g == "FB" else "FI")
        out = int_compose(g, f)
        sys.stdout.write(serialize(out, mode))
        return 0
    if args.op == "trace":
        m, mode = _read_morphism(args.files[0])
        if m.dom.neg != m.cod.neg:
            raise CliError("trace needs matching feedback blocks (u = v)")
        shared = m.dom.neg
        traced = trace_injection(m.map, m.dom.pos, m.cod.pos, shared)
        out = IntMorphism(IntObject(m.dom.pos, 0), IntObject(m.cod.pos, 0), traced)
        sys.stdout.write(serialize(out, args.mode or ("FB" if traced.is_bijection else "FI")))
        return 0
    raise CliError(f"unknown intset operation {args.op!r}")


def cmd_paradox(args) -> int:
    if args.op == "add":
        a, b = parse_literal(args.values[0]), parse_literal(args.values[1])
        print(render_literal(zp_add(a, b)))
        return 0
    if args.op == "leq":
        a, b = parse_literal(args.values[0]), parse_literal(args.values[1])
        print("true" if zp_leq(a, b) else "false")
        return 0
    if args.op == "rewrite":
        print(render_literal(to_nonterminating(parse_literal(args.values[0]))))
        return 0
    if args.op == "value":
        v = zp_value(parse_literal(args.values[0]))
        print(f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator))
        return 0
    raise CliError(f"unknown paradox operation {args.op!r}")


def cmd_check(args) -> int:
    try:
        report = suites.run_suite(
            args.instance, args.suite, args.seed, args.cases, args.bits
        )
    except suites.UnknownName as exc:
        raise CliError(str(exc))
    sys.stdout.write(report.render())
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omegasum",
        description="countably-infinitary sums: evaluation, integer sets, "
        "paradoxical arithmetic, and law suites",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression file")
    p_eval.add_argument("file", help="expression file, or - for stdin")
    p_eval.add_argument("--bits", type=int, default=32)
    p_eval.set_defaults(fn=cmd_eval)

    p_int = sub.add_parser("intset", help="integer-set morphisms")
    p_int.add_argument("op", choices=["compose", "trace", "card"])
    p_int.add_argument("files", nargs="+")
    p_int.add_argument("--mode", choices=["FB", "FI"])
    p_int.set_defaults(fn=cmd_intset)

    p_par = sub.add_parser("paradox", help="paradoxical positive reals")
    p_par.add_argument("op", choices=["add", "leq", "rewrite", "value"])
    p_par.add_argument("values", nargs="+")
    p_par.set_defaults(fn=cmd_paradox)

    p_chk = sub.add_parser("check", help="run a seeded law suite")
    p_chk.add_argument("--instance", required=True)
    p_chk.add_argument("--suite", required=True)
    p_chk.add_argument("--seed", type=int, default=0)
    p_chk.add_argument("--cases", type=int, default=100)
    p_chk.add_argument("--bits", type=int, default=32)
    p_chk.set_defaults(fn=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
