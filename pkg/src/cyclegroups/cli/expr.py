"""Group expressions: parsing, printing and building.

Grammar (whitespace-insensitive)::

    expr    := wreath ("x" wreath)*
    wreath  := power ("wr" "Sym:" INT)*
    power   := primary ("^" INT)*
    primary := FAMILY ":" INT | "Hol(" expr ")" | "Aut(" expr ")" | "(" expr ")"

``^`` binds tightest, then ``wr``, then ``x``; all are left-associative.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from ..group import (
    MAX_GROUP_ORDER,
    ConcreteGroup,
    GuardExceeded,
    alternating,
    automorphism_group,
    cyclic,
    direct_power,
    direct_product,
    holomorph,
    symmetric,
    wreath_product,
)
from ..matgrp import build_pgammal2, build_pgl2, build_psl2, build_psl3, build_psl3_with_aut
from ..numtheory import prime_power

FAMILIES = ("Sym", "Alt", "Cyclic", "PSL2", "PGL2", "PGammaL2", "AutPSL3", "PSL3")


class ExprError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class Atom:
    family: str
    param: int


@dataclass(frozen=True)
class Product:
    left: "GroupExpr"
    right: "GroupExpr"


@dataclass(frozen=True)
class Power:
    base: "GroupExpr"
    n: int


@dataclass(frozen=True)
class Wreath:
    base: "GroupExpr"
    n: int


@dataclass(frozen=True)
class Hol:
    inner: "GroupExpr"


@dataclass(frozen=True)
class Aut:
    inner: "GroupExpr"


GroupExpr = Union[Atom, Product, Power, Wreath, Hol, Aut]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<sym>[:^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """(kind, value, position) triples.  ``x`` and ``wr`` are operators only after an operand."""
    out: list[tuple[str, str, int]] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        after_operand = bool(out) and (out[-1][0] == "int" or out[-1][1] == ")")
        if after_operand and text.startswith("wr", pos):
            out.append(("op", "wr", pos))
            pos += 2
            continue
        if after_operand and text[pos] == "x":
            out.append(("op", "x", pos))
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExprError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        out.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str, value: str | None = None):
        k, v, p = self.peek()
        if k != kind or (value is not None and v != value):
            want = value if value is not None else kind
            got = v or "end of input"
            raise ExprError(f"expected {want!r}, got {got!r}", p)
        self.i += 1
        return v, p

    def integer(self) -> int:
        v, p = self.take("int")
        return int(v)

    def expr(self) -> GroupExpr:
        node = self.wreath()
        while self.peek()[:2] == ("op", "x"):
            self.i += 1
            node = Product(node, self.wreath())
        return node

    def wreath(self) -> GroupExpr:
        node = self.power()
        while self.peek()[:2] == ("op", "wr"):
            self.i += 1
            _, p = self.take("name", "Sym")
            self.take("sym", ":")
            n = self.integer()
            if n < 1:
                raise ExprError("wreath degree must be >= 1", p)
            node = Wreath(node, n)
        return node

    def power(self) -> GroupExpr:
        node = self.primary()
        while self.peek()[:2] == ("sym", "^"):
            self.i += 1
            p = self.peek()[2]
            n = self.integer()
            if n < 1:
                raise ExprError("exponent must be >= 1", p)
            node = Power(node, n)
        return node

    def primary(self) -> GroupExpr:
        kind, value, pos = self.peek()
        if kind == "sym" and value == "(":
            self.i += 1
            node = self.expr()
            self.take("sym", ")")
            return node
        if kind != "name":
            raise ExprError(f"expected a group, got {value or 'end of input'!r}", pos)
        self.i += 1
        if value in ("Hol", "Aut") and self.peek()[:2] == ("sym", "("):
            self.i += 1
            inner = self.expr()
            self.take("sym", ")")
            return Hol(inner) if value == "Hol" else Aut(inner)
        if value not in FAMILIES:
            raise ExprError(f"unknown family {value!r}", pos)
        self.take("sym", ":")
        p = self.peek()[2]
        param = self.integer()
        _check_param(value, param, p)
        return Atom(value, param)


def _check_param(family: str, n: int, pos: int | None = None) -> None:
    ok = True
    if family in ("Sym", "Alt", "Cyclic"):
        ok = n >= 1
    elif family in ("PSL2", "PGL2", "PGammaL2"):
        ok = prime_power(n) is not None and n >= 4
    elif family == "AutPSL3":
        ok = n in (2, 3, 4)
    elif family == "PSL3":
        ok = n in (2, 3)
    if not ok:
        raise ExprError(f"invalid parameter {n} for {family}", pos)


def parse_group_expr(text: str) -> GroupExpr:
    p = _Parser(text)
    node = p.expr()
    kind, value, pos = p.peek()
    if kind != "end":
        raise ExprError(f"unexpected {value!r}", pos)
    return node


# --- printing ------------------------------------------------------------------

_LEVEL = {Product: 0, Wreath: 1, Power: 2}


def _level(e: GroupExpr) -> int:
    return _LEVEL.get(type(e), 3)


def format_group_expr(e: GroupExpr) -> str:
    """Canonical text; parsing it gives back an equal tree."""
    if isinstance(e, Atom):
        return f"{e.family}:{e.param}"
    if isinstance(e, Hol):
        return f"Hol({format_group_expr(e.inner)})"
    if isinstance(e, Aut):
        return f"Aut({format_group_expr(e.inner)})"

    def wrap(sub: GroupExpr, min_level: int) -> str:
        s = format_group_expr(sub)
        return f"({s})" if _level(sub) < min_level else s

    if isinstance(e, Product):
        # left-associative: the right operand needs parentheses if it is itself a product
        return f"{wrap(e.left, 0)} x {wrap(e.right, 1)}"
    if isinstance(e, Wreath):
        return f"{wrap(e.base, 1)} wr Sym:{e.n}"
    if isinstance(e, Power):
        return f"{wrap(e.base, 2)}^{e.n}"
    raise TypeError(e)


# --- building ------------------------------------------------------------------


def predicted_order(e: GroupExpr) -> int | None:
    """Group order from the expression alone; None where it needs Aut(...)."""
    if isinstance(e, Atom):
        n = e.param
        if e.family == "Sym":
            return math.factorial(n)
        if e.family == "Alt":
            return max(1, math.factorial(n) // 2)
        if e.family == "Cyclic":
            return n
        q = n
        pgl = q * (q * q - 1)
        if e.family == "PGL2":
            return pgl
        if e.family == "PSL2":
            return pgl // math.gcd(2, q - 1)
        if e.family == "PGammaL2":
            return pgl * prime_power(q)[1]
        psl3 = q**3 * (q * q - 1) * (q**3 - 1) // math.gcd(3, q - 1)
        if e.family == "PSL3":
            return psl3
        return psl3 * math.gcd(3, q - 1) * prime_power(q)[1] * 2
    if isinstance(e, Product):
        a, b = predicted_order(e.left), predicted_order(e.right)
        return None if a is None or b is None else a * b
    if isinstance(e, Power):
        a = predicted_order(e.base)
        return None if a is None else a**e.n
    if isinstance(e, Wreath):
        a = predicted_order(e.base)
        return None if a is None else a**e.n * math.factorial(e.n)
    return None


def _guard(order: int | None, limit: int) -> None:
    if order is not None and order > limit:
        raise GuardExceeded("max group order", limit, order)


def build_group(e: GroupExpr, max_group_order: int = MAX_GROUP_ORDER) -> ConcreteGroup:
    """Construct the concrete permutation group, refusing anything above the order guard."""
    _guard(predicted_order(e), max_group_order)
    if isinstance(e, Atom):
        builder = {
            "Sym": symmetric,
            "Alt": alternating,
            "Cyclic": cyclic,
            "PSL2": build_psl2,
            "PGL2": build_pgl2,
            "PGammaL2": build_pgammal2,
            "AutPSL3": build_psl3_with_aut,
            "PSL3": build_psl3,
        }[e.family]
        return builder(e.param)
    if isinstance(e, Product):
        return direct_product(
            build_group(e.left, max_group_order), build_group(e.right, max_group_order), max_group_order
        )
    if isinstance(e, Power):
        return direct_power(build_group(e.base, max_group_order), e.n, max_group_order)
    if isinstance(e, Wreath):
        return wreath_product(build_group(e.base, max_group_order), e.n, max_group_order)
    inner = build_group(e.inner, max_group_order)
    aut = automorphism_group(inner)
    if isinstance(e, Aut):
        _guard(aut.order, max_group_order)
        return aut.carrier
    _guard(inner.order * aut.order, max_group_order)
    return holomorph(inner, max_group_order)
