"""Construction expressions such as ``join(simplex(2), square, square)``.

Grammar (whitespace-insensitive)::

    expr  := ATOM | NAME "(" args ")" | "P" "(" INT [";" pairs] ")"
    pairs := INT "," INT ("," INT "," INT)*
    args  := arg ("," arg)*
    arg   := expr | INT
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple, NoReturn

from .exceptions import ExpressionSyntaxError, PolylinkError
from .polytope import (
    BUILTIN_ATOMS,
    CombinatorialPolytope,
    bipyramid,
    builtin,
    canonical_polytope,
    cross_polytope,
    direct_sum,
    join,
    pyramid,
    quadrilateral_join,
    simplex,
    stack,
)

_LOGGER = logging.getLogger(__name__)

_TOKEN = re.compile(
    r"(?P<space>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),;])"
)

FUNCTIONS = ("simplex", "cross", "join", "sum", "pyr", "bipyr", "stack", "Pnm", "P")


class Token(NamedTuple):
    """A lexeme with its character offset."""

    kind: str
    text: str
    position: int


@dataclass(frozen=True)
class Atom:
    """A named polytope without arguments."""

    name: str


@dataclass(frozen=True)
class Call:
    """A construction applied to sub-expressions and integers."""

    func: str
    args: tuple[Node | int, ...]


@dataclass(frozen=True)
class CanonicalCall:
    """``P(n; j1,k1, ...)``."""

    n: int
    pairs: tuple[tuple[int, int], ...] = ()


type Node = Atom | Call | CanonicalCall


def tokenize(text: str) -> list[Token]:
    """Split text into tokens, ending with an ``end`` token."""
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            msg = f"Unexpected character {text[position]!r}"
            raise ExpressionSyntaxError(msg, position)
        kind = match.lastgroup or ""
        if kind != "space":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self._tokens = tokenize(text)
        self._index = 0

    @property
    def _current(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._current
        self._index += 1
        return token

    def _expect(self, kind: str, text: str | None = None) -> Token:
        token = self._current
        if token.kind != kind or (text is not None and token.text != text):
            wanted = text or kind
            found = token.text or "end of input"
            msg = f"Expected {wanted!r}, found {found!r}"
            raise ExpressionSyntaxError(msg, token.position)
        return self._advance()

    def _int(self) -> int:
        return int(self._expect("int").text)

    def parse(self) -> Node:
        node = self._expr()
        self._expect("end")
        return node

    def _expr(self) -> Node:
        token = self._expect("name")
        if token.text in BUILTIN_ATOMS:
            return Atom(token.text)
        if token.text not in FUNCTIONS:
            msg = f"Unknown construction {token.text!r}"
            raise ExpressionSyntaxError(msg, token.position)
        self._expect("punct", "(")
        if token.text == "P":
            node = self._canonical(token)
        else:
            args = [self._arg()]
            while self._current.text == ",":
                self._advance()
                args.append(self._arg())
            node = Call(token.text, tuple(args))
            _check_call(node, token.position)
        self._expect("punct", ")")
        return node

    def _arg(self) -> Node | int:
        if self._current.kind == "int":
            return self._int()
        return self._expr()

    def _canonical(self, token: Token) -> CanonicalCall:
        n = self._int()
        pairs = []
        if self._current.text == ";":
            self._advance()
            pairs.append(self._pair())
            while self._current.text == ",":
                self._advance()
                pairs.append(self._pair())
        node = CanonicalCall(n, tuple(pairs))
        if n == 0 and not pairs:
            msg = "P(0) is the empty construction"
            raise ExpressionSyntaxError(msg, token.position)
        if any(j < 1 or k < 1 for j, k in pairs):
            msg = "P(...) pair entries must be >= 1"
            raise ExpressionSyntaxError(msg, token.position)
        return node

    def _pair(self) -> tuple[int, int]:
        j = self._int()
        self._expect("punct", ",")
        return j, self._int()


def _check_call(node: Call, position: int) -> None:
    """Validate arity and integer ranges of a construction call."""
    func, args = node.func, node.args
    ints = [arg for arg in args if isinstance(arg, int)]
    exprs = [arg for arg in args if not isinstance(arg, int)]

    def fail(message: str) -> NoReturn:
        raise ExpressionSyntaxError(f"{func}: {message}", position)

    if func in ("simplex", "cross"):
        if len(args) != 1 or len(ints) != 1:
            fail("expects one integer")
        if ints[0] < (0 if func == "simplex" else 1):
            fail(f"dimension {ints[0]} is out of range")
    elif func in ("join", "sum"):
        if len(exprs) != len(args) or len(args) < 2:
            fail("expects at least two expressions")
    elif func == "bipyr":
        if len(args) != 1 or len(exprs) != 1:
            fail("expects one expression")
    elif func in ("pyr", "stack"):
        if not 1 <= len(args) <= 2 or isinstance(args[0], int):
            fail("expects an expression and an optional count")
        if len(args) == 2 and not isinstance(args[1], int):
            fail("count must be an integer")
    elif func == "Pnm":
        if len(args) != 2 or len(ints) != 2:
            fail("expects two integers n, m")
        if ints[0] + ints[1] < 1:
            fail("Pnm(0, 0) is the empty construction")


def parse(text: str) -> Node:
    """Parse a construction expression into its syntax tree."""
    node = _Parser(text).parse()
    _LOGGER.debug("Parsed %r as %s", text, node)
    return node


def to_text(node: Node | int) -> str:
    """Print a syntax tree back as an expression; parse(to_text(x)) == x."""
    if isinstance(node, int):
        return str(node)
    if isinstance(node, Atom):
        return node.name
    if isinstance(node, CanonicalCall):
        if not node.pairs:
            return f"P({node.n})"
        body = ", ".join(f"{j},{k}" for j, k in node.pairs)
        return f"P({node.n}; {body})"
    return f"{node.func}({', '.join(to_text(arg) for arg in node.args)})"


def evaluate(node: Node) -> CombinatorialPolytope:
    """Build the polytope a syntax tree describes."""
    if isinstance(node, Atom):
        return builtin(node.name)
    if isinstance(node, CanonicalCall):
        return canonical_polytope(node.n, node.pairs)
    args = node.args
    match node.func:
        case "simplex":
            return simplex(args[0])
        case "cross":
            return cross_polytope(args[0])
        case "join":
            return reduce(join, (evaluate(arg) for arg in args))
        case "sum":
            return reduce(direct_sum, (evaluate(arg) for arg in args))
        case "pyr":
            return pyramid(evaluate(args[0]), args[1] if len(args) > 1 else 1)
        case "bipyr":
            return bipyramid(evaluate(args[0]))
        case "stack":
            return stack(evaluate(args[0]), args[1] if len(args) > 1 else 1)
        case "Pnm":
            return quadrilateral_join(args[0], args[1])
    msg = f"Unknown construction {node.func!r}"
    raise PolylinkError(msg)


def build(text: str) -> CombinatorialPolytope:
    """Parse and evaluate an expression."""
    return evaluate(parse(text))
