"""Recursive-descent parser for the group-spec DSL.

Grammar::

    EXPR  := NAME | wr(EXPR, EXPR) | wrp(EXPR, EXPR) | x(EXPR, EXPR)
           | par(EXPR, INT) | perm(INT ; PERMS)
    NAME  := (S | A | C | D | I) digits | K4
    PERMS := PERM (, PERM)* | empty
    PERM  := CYCLE+            e.g. (0 1)(2 3)
    CYCLE := ( INT INT ... )   points separated by spaces

``wr`` is the imprimitive wreath product, ``wrp`` the product action,
``x`` the direct product, ``par`` the parallel multiple, and ``perm``
the group generated by explicit permutations of the given degree.
Syntax errors carry the offending position.
"""

from __future__ import annotations

from .catalog import catalog_group
from .errors import GroupSpecError
from .perm import DEFAULT_ORDER_CAP, Permutation, PermGroup, generate_group
from .products import (
    DEFAULT_POINT_CAP,
    direct_product,
    parallel_multiple,
    wreath_imprimitive,
    wreath_product_action,
)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != char:
            raise GroupSpecError(f"expected {char!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise GroupSpecError("expected an integer", start)
        return int(self.text[start : self.pos])

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start:
            raise GroupSpecError("expected a group expression", start)
        return self.text[start : self.pos]


class _Parser:
    def __init__(self, text: str, order_cap: int, point_cap: int):
        self.scanner = _Scanner(text)
        self.order_cap = order_cap
        self.point_cap = point_cap

    def parse(self) -> PermGroup:
        group = self.expr()
        self.scanner.skip_ws()
        if self.scanner.pos != len(self.scanner.text):
            raise GroupSpecError("trailing input after group expression", self.scanner.pos)
        return group

    def expr(self) -> PermGroup:
        start = self.scanner.pos
        word = self.scanner.word()
        if word == "wr":
            a, b = self.pair()
            return wreath_imprimitive(a, b, self.order_cap, self.point_cap)
        if word == "wrp":
            a, b = self.pair()
            return wreath_product_action(a, b, self.order_cap, self.point_cap)
        if word == "x":
            a, b = self.pair()
            return direct_product(a, b)
        if word == "par":
            self.scanner.expect("(")
            b = self.expr()
            self.scanner.expect(",")
            t = self.scanner.integer()
            self.scanner.expect(")")
            return parallel_multiple(b, t, self.point_cap)
        if word == "perm":
            return self.perm_group()
        try:
            return catalog_group(word, self.order_cap)
        except GroupSpecError as err:
            raise GroupSpecError(str(err.args[0]).split(" (at")[0], start) from None

    def pair(self) -> tuple[PermGroup, PermGroup]:
        self.scanner.expect("(")
        a = self.expr()
        self.scanner.expect(",")
        b = self.expr()
        self.scanner.expect(")")
        return a, b

    def perm_group(self) -> PermGroup:
        self.scanner.expect("(")
        degree = self.scanner.integer()
        if degree < 2:
            raise GroupSpecError("perm() needs degree >= 2", self.scanner.pos)
        self.scanner.expect(";")
        generators = []
        while self.scanner.peek() != ")":
            generators.append(self.permutation(degree))
            if self.scanner.peek() == ",":
                self.scanner.expect(",")
            elif self.scanner.peek() != ")":
                raise GroupSpecError("expected ',' or ')' after permutation", self.scanner.pos)
        self.scanner.expect(")")
        return generate_group(degree, generators, self.order_cap)

    def permutation(self, degree: int) -> Permutation:
        cycles = []
        if self.scanner.peek() != "(":
            raise GroupSpecError("expected a cycle '('", self.scanner.pos)
        while self.scanner.peek() == "(":
            self.scanner.expect("(")
            cycle = []
            while self.scanner.peek() != ")":
                cycle.append(self.scanner.integer())
            self.scanner.expect(")")
            cycles.append(tuple(cycle))
        start = self.scanner.pos
        try:
            return Permutation.from_cycles(degree, cycles)
        except ValueError as err:
            raise GroupSpecError(str(err), start) from None


def parse_group_spec(
    text: str,
    order_cap: int = DEFAULT_ORDER_CAP,
    point_cap: int = DEFAULT_POINT_CAP,
) -> PermGroup:
    """Build the permutation group described by a DSL expression."""
    return _Parser(text, order_cap, point_cap).parse()
