"""Ring and ideal expression language.

Grammar (whitespace-insensitive)::

    ring  := Z<digits>
           | prod(ring, ring, ...)          at least two factors
           | quot(ring, ideal)
           | idealize(n, d)                 d a divisor of n
           | loc(ring, {elem, ...})
           | table(path)                    path '@name' loads a bundled table
    ideal := (elem, elem, ...)              possibly empty: the zero ideal
    elem  := <digits> | (elem, elem, ...)   tuples for products/idealizations

Integer element literals resolve against the target ring: directly for Z_n
and table rings, through the canonical map for quotients and localizations.
A parenthesized ideal like ``(1,0,0)`` over a 3-factor product resolves as
the single tuple generator (1,0,0).

Table files are whitespace-separated integers: the order ``n``, then the
``n*n`` addition table row by row, then the multiplication table; ``#``
starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Union

from .errors import InvalidConstructionError, ParseError, RingMismatchError
from .ideal_algebra import Ideal, ideal_generated
from .ring_core import (
    DEFAULT_MAX_ORDER,
    FiniteRing,
    RingHom,
    idealization_index,
    mk_idealization,
    mk_localization,
    mk_product,
    mk_quotient,
    mk_table,
    mk_zn,
    product_strides,
)

Elem = Union[int, tuple]


class RingExpr:
    def to_text(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class ZnExpr(RingExpr):
    n: int

    def to_text(self) -> str:
        return f"Z{self.n}"


@dataclass(frozen=True)
class ProdExpr(RingExpr):
    factors: tuple[RingExpr, ...]

    def to_text(self) -> str:
        return "prod(" + ",".join(f.to_text() for f in self.factors) + ")"


@dataclass(frozen=True)
class IdealExpr:
    generators: tuple[Elem, ...]

    def to_text(self) -> str:
        return "(" + ",".join(_elem_text(g) for g in self.generators) + ")"

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class QuotExpr(RingExpr):
    base: RingExpr
    ideal: IdealExpr

    def to_text(self) -> str:
        return f"quot({self.base.to_text()},{self.ideal.to_text()})"


@dataclass(frozen=True)
class IdealizeExpr(RingExpr):
    n: int
    d: int

    def to_text(self) -> str:
        return f"idealize({self.n},{self.d})"


@dataclass(frozen=True)
class LocExpr(RingExpr):
    base: RingExpr
    gens: tuple[Elem, ...]

    def to_text(self) -> str:
        return f"loc({self.base.to_text()},{{{','.join(_elem_text(g) for g in self.gens)}}})"


@dataclass(frozen=True)
class TableExpr(RingExpr):
    path: str

    def to_text(self) -> str:
        return f"table({self.path})"


def _elem_text(e: Elem) -> str:
    if isinstance(e, tuple):
        return "(" + ",".join(_elem_text(x) for x in e) + ")"
    return str(e)


# ---------------------------------------------------------------------------
# parsing


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def parse_name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start:
            self.error("expected a constructor name")
        return self.text[start : self.pos]

    # -- grammar ------------------------------------------------------------

    def ring(self) -> RingExpr:
        name_pos = self.pos
        name = self.parse_name()
        if name.startswith("Z") and name[1:].isdigit():
            return ZnExpr(int(name[1:]))
        if name == "prod":
            self.expect("(")
            factors = [self.ring()]
            while self.peek() == ",":
                self.expect(",")
                factors.append(self.ring())
            self.expect(")")
            if len(factors) < 2:
                self.pos = name_pos
                self.error("prod needs at least two factors")
            return ProdExpr(tuple(factors))
        if name == "quot":
            self.expect("(")
            base = self.ring()
            self.expect(",")
            ideal = self.ideal()
            self.expect(")")
            return QuotExpr(base, ideal)
        if name == "idealize":
            self.expect("(")
            n = self.parse_int()
            self.expect(",")
            d = self.parse_int()
            self.expect(")")
            return IdealizeExpr(n, d)
        if name == "loc":
            self.expect("(")
            base = self.ring()
            self.expect(",")
            self.expect("{")
            gens: list[Elem] = []
            if self.peek() != "}":
                gens.append(self.elem())
                while self.peek() == ",":
                    self.expect(",")
                    gens.append(self.elem())
            self.expect("}")
            self.expect(")")
            return LocExpr(base, tuple(gens))
        if name == "table":
            self.expect("(")
            self.skip_ws()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] != ")":
                self.pos += 1
            path = self.text[start : self.pos].strip()
            if not path:
                self.error("table() needs a file path")
            self.expect(")")
            return TableExpr(path)
        self.pos = name_pos
        self.error(f"unknown ring constructor {name!r}")

    def elem(self) -> Elem:
        if self.peek() == "(":
            self.expect("(")
            parts = [self.elem()]
            while self.peek() == ",":
                self.expect(",")
                parts.append(self.elem())
            self.expect(")")
            if len(parts) < 2:
                self.error("tuple element literal needs at least two coordinates")
            return tuple(parts)
        return self.parse_int()

    def ideal(self) -> IdealExpr:
        self.expect("(")
        gens: list[Elem] = []
        if self.peek() != ")":
            gens.append(self.elem())
            while self.peek() == ",":
                self.expect(",")
                gens.append(self.elem())
        self.expect(")")
        return IdealExpr(tuple(gens))


def parse_ring(text: str) -> RingExpr:
    p = _Parser(text)
    expr = p.ring()
    if not p.at_end():
        p.error("trailing input after ring expression")
    return expr


def parse_ideal(text: str) -> IdealExpr:
    p = _Parser(text)
    expr = p.ideal()
    if not p.at_end():
        p.error("trailing input after ideal expression")
    return expr


# ---------------------------------------------------------------------------
# evaluation


@dataclass
class BuiltRing:
    """A constructed ring together with enough context to resolve element
    literals (factor structure, canonical maps)."""

    expr: RingExpr
    ring: FiniteRing
    base: "BuiltRing | None" = None
    hom: RingHom | None = None
    factors: "tuple[BuiltRing, ...] | None" = None

    def resolve_element(self, literal: Elem) -> int:
        return _resolve_elem(self, literal)

    def resolve_ideal(self, spec: IdealExpr | str) -> Ideal:
        if isinstance(spec, str):
            spec = parse_ideal(spec)
        gens = spec.generators
        try:
            return ideal_generated(self.ring, [_resolve_elem(self, g) for g in gens])
        except InvalidConstructionError:
            # (1,0,0) over a 3-factor product: a single tuple generator
            if gens and all(isinstance(g, int) for g in gens):
                return ideal_generated(self.ring, [_resolve_elem(self, tuple(gens))])
            raise


def _resolve_elem(built: BuiltRing, literal: Elem) -> int:
    expr = built.expr
    if isinstance(expr, (ZnExpr,)):
        if not isinstance(literal, int) or not 0 <= literal < built.ring.order:
            raise InvalidConstructionError(
                f"element literal {literal!r} out of range for {built.ring.label}"
            )
        return literal
    if isinstance(expr, TableExpr):
        if not isinstance(literal, int) or not 0 <= literal < built.ring.order:
            raise InvalidConstructionError(
                f"element literal {literal!r} out of range for {built.ring.label}"
            )
        return literal
    if isinstance(expr, ProdExpr):
        if not isinstance(literal, tuple) or len(literal) != len(built.factors):
            raise InvalidConstructionError(
                f"element literal {literal!r} must be a {len(built.factors)}-tuple "
                f"for {built.ring.label}"
            )
        strides = product_strides([f.ring.order for f in built.factors])
        comps = [
            _resolve_elem(factor, part) for factor, part in zip(built.factors, literal)
        ]
        return sum(c * s for c, s in zip(comps, strides))
    if isinstance(expr, IdealizeExpr):
        if not (
            isinstance(literal, tuple)
            and len(literal) == 2
            and all(isinstance(x, int) for x in literal)
        ):
            raise InvalidConstructionError(
                f"element literal {literal!r} must be a pair (a,m) for {built.ring.label}"
            )
        return idealization_index(expr.n, expr.d, literal[0], literal[1])
    if isinstance(expr, (QuotExpr, LocExpr)):
        return built.hom.map[_resolve_elem(built.base, literal)]
    raise RingMismatchError(f"cannot resolve elements of {expr!r}")


def build_ring(
    expr: RingExpr | str,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    _memo: dict | None = None,
) -> BuiltRing:
    """Evaluate a ring expression to a BuiltRing."""
    if isinstance(expr, str):
        expr = parse_ring(expr)
    memo = _memo if _memo is not None else {}
    return _build_expr(expr, max_order, memo)


def _build_expr(expr: RingExpr, max_order: int, memo: dict) -> BuiltRing:
    hit = memo.get(expr)
    if hit is not None:
        return hit
    if isinstance(expr, ZnExpr):
        built = BuiltRing(expr, mk_zn(expr.n, max_order=max_order))
    elif isinstance(expr, ProdExpr):
        factors = tuple(_build_expr(f, max_order, memo) for f in expr.factors)
        ring = mk_product([f.ring for f in factors], max_order=max_order)
        built = BuiltRing(expr, ring, factors=factors)
    elif isinstance(expr, IdealizeExpr):
        built = BuiltRing(expr, mk_idealization(expr.n, expr.d, max_order=max_order))
    elif isinstance(expr, QuotExpr):
        base = _build_expr(expr.base, max_order, memo)
        ideal = base.resolve_ideal(expr.ideal)
        ring, hom = mk_quotient(base.ring, ideal, max_order=max_order)
        built = BuiltRing(expr, ring, base=base, hom=hom)
    elif isinstance(expr, LocExpr):
        base = _build_expr(expr.base, max_order, memo)
        gens = [base.resolve_element(g) for g in expr.gens]
        ring, hom = mk_localization(base.ring, gens, max_order=max_order)
        built = BuiltRing(expr, ring, base=base, hom=hom)
    elif isinstance(expr, TableExpr):
        built = BuiltRing(expr, load_table_ring(expr.path, max_order=max_order))
    else:
        raise RingMismatchError(f"unknown ring expression {expr!r}")
    memo[expr] = built
    return built


# ---------------------------------------------------------------------------
# table files and the bundled catalog

CATALOG = {
    "f2xy_quotient": {
        "names": ("0", "1", "x", "1+x", "y", "1+y", "x+y", "1+x+y"),
        "label": "F2[x,y]/(x,y)^2",
    },
}


def read_table_file(text: str) -> tuple[list[list[int]], list[list[int]]]:
    nums: list[int] = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        nums.extend(int(tok) for tok in body.split())
    if not nums:
        raise InvalidConstructionError("empty table file")
    n = nums[0]
    if len(nums) != 1 + 2 * n * n:
        raise InvalidConstructionError(
            f"table file must hold 1 + 2*{n}^2 integers, found {len(nums)}"
        )
    flat = nums[1:]
    add = [flat[i * n : (i + 1) * n] for i in range(n)]
    mul = [flat[n * n + i * n : n * n + (i + 1) * n] for i in range(n)]
    return add, mul


def load_table_ring(path: str, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Load ``table(path)``; a ``@name`` path loads the bundled catalog entry."""
    if path.startswith("@"):
        name = path[1:]
        if name not in CATALOG:
            raise InvalidConstructionError(f"unknown catalog ring {name!r}")
        text = (
            resources.files("ringbench").joinpath(f"data/{name}.tbl").read_text()
        )
        add, mul = read_table_file(text)
        meta = CATALOG[name]
        return mk_table(
            add, mul, names=meta["names"], label=meta["label"], max_order=max_order
        )
    text = Path(path).read_text()
    add, mul = read_table_file(text)
    return mk_table(add, mul, label=f"table({path})", max_order=max_order)
