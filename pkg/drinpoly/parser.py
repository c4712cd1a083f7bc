"""
Module and Ore polynomial files: a small expression grammar and the canonical rendering.

Module file::

    # comment
    p = 3
    fq_modulus = y^2 + 1        # only when e > 1
    k_modulus = x^2 + 1
    gamma = x                   # optional, must equal the first phi entry
    phi = x, 1, 1               # g_0, g_1, ..., g_r

Ore file::

    ore = x + tau + tau^2

Expressions use ``+ - * ^``, integer literals and the variables y, x, T, X, t, tau,
with the usual precedence and no implicit multiplication.
"""

from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from jinja2 import Template
from pydantic import BaseModel, Field

from .drinfeld import DrinfeldModule
from .fields import FieldTower, FiniteField, KElement
from .ore import OrePoly
from .polynomials import Poly
from .types import ParseError

if TYPE_CHECKING:
    from .motive import CharPoly

VARIABLES = ("y", "x", "T", "X", "t", "tau")
MODULE_KEYS = ("p", "fq_modulus", "k_modulus", "gamma", "phi")


# expressions


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "end"
    value: str
    column: int


@dataclass(frozen=True)
class Node:
    op: str  # "int", "var", "neg", "+", "-", "*", "^"
    args: tuple[Any, ...]
    column: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")

BINDING = {"+": 10, "-": 10, "*": 20, "^": 30}
UNARY_BINDING = 25


def tokenize(text: str, line: int = 1, offset: int = 0) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            break
        number, name, op = match.groups()
        start = match.start(match.lastindex or 0) + offset + 1
        if number is not None:
            tokens.append(Token("int", number, start))
        elif name is not None:
            if name not in VARIABLES:
                raise ParseError(f"unknown variable {name!r}", line, start)
            tokens.append(Token("name", name, start))
        else:
            if op not in "+-*^()":
                raise ParseError(f"unexpected character {op!r}", line, start)
            tokens.append(Token("op", op, start))
        pos = match.end()
    tokens.append(Token("end", "", len(text) + offset + 1))
    return tokens


class ExpressionParser:
    """Pratt parser: nud for prefix positions, led with left binding power for infix"""

    def __init__(self, text: str, line: int = 1, offset: int = 0):
        self.line = line
        self.tokens = tokenize(text, line, offset)
        self.index = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def error(self, message: str, tok: Token) -> ParseError:
        return ParseError(message, self.line, tok.column)

    def parse(self) -> Node:
        if self.token.kind == "end":
            raise self.error("empty expression", self.token)
        node = self.expression(0)
        if self.token.kind != "end":
            raise self.error(f"unexpected {self.token.value!r}", self.token)
        return node

    def lbp(self, tok: Token) -> int:
        if tok.kind == "op" and tok.value in BINDING:
            return BINDING[tok.value]
        return 0

    def expression(self, rbp: int) -> Node:
        left = self.nud(self.advance())
        while rbp < self.lbp(self.token):
            left = self.led(self.advance(), left)
        return left

    def nud(self, tok: Token) -> Node:
        if tok.kind == "int":
            return Node("int", (int(tok.value),), tok.column)
        if tok.kind == "name":
            return Node("var", (tok.value,), tok.column)
        if tok.kind == "op" and tok.value == "-":
            return Node("neg", (self.expression(UNARY_BINDING),), tok.column)
        if tok.kind == "op" and tok.value == "+":
            return self.expression(UNARY_BINDING)
        if tok.kind == "op" and tok.value == "(":
            inner = self.expression(0)
            if not (self.token.kind == "op" and self.token.value == ")"):
                raise self.error("expected ')'", self.token)
            self.advance()
            return inner
        if tok.kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {tok.value!r}", tok)

    def led(self, tok: Token, left: Node) -> Node:
        if tok.value == "^":
            # right associative
            right = self.expression(BINDING["^"] - 1)
            return Node("^", (left, right), tok.column)
        right = self.expression(BINDING[tok.value])
        return Node(tok.value, (left, right), tok.column)


def parse_expression(text: str, line: int = 1, offset: int = 0) -> Node:
    return ExpressionParser(text, line, offset).parse()


def _exponent(node: Node, line: int) -> int:
    if node.op == "int":
        return int(node.args[0])
    raise ParseError("exponent must be an integer literal", line, node.column)


def evaluate(node: Node, names: dict[str, Any], lift: Callable[[int], Any], line: int = 1) -> Any:
    """Evaluate in any algebra whose values support + - * and ** by an int"""
    if node.op == "int":
        return lift(int(node.args[0]))
    if node.op == "var":
        name = node.args[0]
        if name not in names:
            raise ParseError(f"variable {name!r} is not allowed here", line, node.column)
        return names[name]
    if node.op == "neg":
        return -evaluate(node.args[0], names, lift, line)
    if node.op == "^":
        base = evaluate(node.args[0], names, lift, line)
        return base ** _exponent(node.args[1], line)
    left = evaluate(node.args[0], names, lift, line)
    right = evaluate(node.args[1], names, lift, line)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


# files


def _lines(text: str) -> list[tuple[int, str, str, int]]:
    """(line, key, value, value column offset) for every key/value line"""
    entries = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        if "=" not in content:
            column = len(content) - len(content.lstrip()) + 1
            raise ParseError("expected 'key = value'", number, column)
        key_part, value = content.split("=", 1)
        key = key_part.strip()
        if not key:
            raise ParseError("missing key", number, 1)
        entries.append((number, key, value, len(key_part) + 1))
    return entries


class ModuleFile(BaseModel):
    """Raw key/value content of a module file, with source positions"""

    p: str
    fq_modulus: str | None = None
    k_modulus: str
    gamma: str | None = None
    phi: str
    positions: dict[str, tuple[int, int]] = Field(default_factory=dict)

    @classmethod
    def from_text(cls, text: str) -> ModuleFile:
        values: dict[str, str] = {}
        positions: dict[str, tuple[int, int]] = {}
        for line, key, value, offset in _lines(text):
            if key not in MODULE_KEYS:
                raise ParseError(f"unknown key {key!r}", line, 1)
            if key in values:
                raise ParseError(f"duplicate key {key!r}", line, 1)
            values[key] = value
            positions[key] = (line, offset)
        for key in ("p", "k_modulus", "phi"):
            if key not in values:
                raise ParseError(f"missing key {key!r}", len(text.splitlines()) or 1, 1)
        return cls(positions=positions, **values)

    def _expr(self, key: str, text: str | None = None, extra: int = 0) -> tuple[Node, int]:
        line, offset = self.positions.get(key, (1, 0))
        source = getattr(self, key) if text is None else text
        return parse_expression(source, line, offset + extra), line

    def build(self) -> DrinfeldModule:
        line, offset = self.positions.get("p", (1, 0))
        try:
            p = int(self.p.strip())
        except ValueError:
            raise ParseError("p must be an integer", line, offset + 1) from None
        prime = FiniteField(p)

        fq: FiniteField = prime
        y_value: int | None = None
        if self.fq_modulus is not None:
            node, ln = self._expr("fq_modulus")
            f = evaluate(node, {"y": Poly.variable(prime)}, lambda n: Poly.constant(prime, prime.from_int(n)), ln)
            if f.degree > 1:
                fq = FiniteField(p, f)
                y_value = p
            elif f.degree == 1 and f.is_monic():
                y_value = prime.neg(f.coeffs[0])
            else:
                fq = FiniteField(p, f)

        fq_names: dict[str, Poly] = {"x": Poly.variable(fq)}
        if y_value is not None:
            fq_names["y"] = Poly.constant(fq, y_value)

        def lift(n: int) -> Poly:
            return Poly.constant(fq, fq.from_int(n))

        node, ln = self._expr("k_modulus")
        tower = FieldTower(fq, evaluate(node, fq_names, lift, ln))

        def element(source: str, key: str, extra: int) -> KElement:
            expr, at = self._expr(key, source, extra)
            return tower.from_poly(evaluate(expr, fq_names, lift, at))

        g = []
        consumed = 0
        for piece in self.phi.split(","):
            if not piece.strip():
                line, offset = self.positions["phi"]
                raise ParseError("empty phi coefficient", line, offset + consumed + 1)
            g.append(element(piece, "phi", consumed))
            consumed += len(piece) + 1
        if self.gamma is not None and element(self.gamma, "gamma", 0) != g[0]:
            line, offset = self.positions["gamma"]
            raise ParseError("gamma does not match the constant coefficient of phi", line, offset + 1)
        return DrinfeldModule(tower, g)


def parse_module(text: str) -> DrinfeldModule:
    """Parse and validate a module file; construction errors propagate unchanged"""
    return ModuleFile.from_text(text).build()


def _tower_names(tower: FieldTower) -> dict[str, Any]:
    names: dict[str, Any] = {"x": tower.gen()}
    if tower.e > 1:
        names["y"] = tower.embed(tower.p)
    return names


def parse_ore(text: str, tower: FieldTower) -> OrePoly:
    """Parse an Ore file (key ``ore``); products follow the rule tau * a = a^q * tau"""
    entries = _lines(text)
    found = [e for e in entries if e[1] == "ore"]
    for line, key, _, _ in entries:
        if key != "ore":
            raise ParseError(f"unknown key {key!r}", line, 1)
    if not found:
        raise ParseError("missing key 'ore'", 1, 1)
    if len(found) > 1:
        raise ParseError("duplicate key 'ore'", found[1][0], 1)
    line, _, value, offset = found[0]
    node = parse_expression(value, line, offset)
    names: dict[str, Any] = {k: OrePoly.constant(tower, v) for k, v in _tower_names(tower).items()}
    names["tau"] = OrePoly.tau(tower)
    return evaluate(node, names, lambda n: OrePoly.constant(tower, tower.from_int(n)), line)


# rendering


def _coefficient_text(text: str) -> str:
    return f"({text})" if " " in text else text


def render_poly(poly: Poly, var: str = "T") -> str:
    """Descending terms over F_q, coefficient 1 omitted, e.g. ``T^2 + 2*T + 1``"""
    if poly.is_zero():
        return "0"
    field = poly.ring
    terms = []
    for k in range(poly.degree, -1, -1):
        c = poly.coeffs[k]
        if field.is_zero(c):
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            terms.append(field.format(c))
        elif c == field.one():
            terms.append(mono)
        else:
            terms.append(f"{_coefficient_text(field.format(c))}*{mono}")
    return " + ".join(terms)


def render_charpoly(charpoly: CharPoly) -> str:
    """Monic, descending in X, every non-leading coefficient parenthesised"""
    r = charpoly.rank
    terms = []
    for i in range(r, -1, -1):
        c = charpoly.coefficient(i)
        if c.is_zero():
            continue
        mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
        if i == r:
            terms.append(mono or "1")
        elif not mono:
            terms.append(f"({render_poly(c)})")
        else:
            terms.append(f"({render_poly(c)})*{mono}")
    return " + ".join(terms)


def render_ore(u: OrePoly) -> str:
    if u.is_zero():
        return "0"
    tower = u.tower
    terms = []
    for k in range(u.degree, -1, -1):
        c = u.coeffs[k]
        if tower.is_zero(c):
            continue
        mono = "" if k == 0 else ("tau" if k == 1 else f"tau^{k}")
        if not mono:
            terms.append(tower.format(c))
        elif c == tower.one():
            terms.append(mono)
        else:
            terms.append(f"{_coefficient_text(tower.format(c))}*{mono}")
    return " + ".join(terms)


MODULE_TEMPLATE = Template(
    """# drinpoly module: q = {{ q }}, d = {{ d }}, rank {{ rank }}
p = {{ p }}
{% if fq_modulus %}fq_modulus = {{ fq_modulus }}
{% endif %}k_modulus = {{ k_modulus }}
gamma = {{ gamma }}
phi = {{ phi | join(", ") }}
""",
    keep_trailing_newline=True,
)


def render_module(module: DrinfeldModule) -> str:
    """Module file text for phi; parse_module(render_module(phi)) == phi"""
    tower = module.tower
    fq_modulus = render_poly(tower.fq_modulus, "y") if tower.fq_modulus is not None and tower.e > 1 else None
    return MODULE_TEMPLATE.render(
        q=tower.q,
        d=tower.d,
        rank=module.rank,
        p=tower.p,
        fq_modulus=fq_modulus,
        k_modulus=render_poly(tower.k_modulus, "x"),
        gamma=tower.format(module.gamma_T),
        phi=[tower.format(c) for c in module.g],
    )
