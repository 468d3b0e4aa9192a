"""Parser for the small closed-form formula language.

Grammar (whitespace insensitive):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' nonneg-integer)?
    atom   := integer | variable | '(' expr ')' | 'sqrt' '(' expr ')'

Variables are x, q, v, w, p.  Every AST node records the source span it
was parsed from so evaluation errors can point back into the text.
"""

from __future__ import annotations

from dataclasses import dataclass, field

VARIABLES = ("x", "q", "v", "w", "p")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        self.pos = pos
        self.text = text
        snippet = text[max(0, pos - 12) : pos + 12].replace("\n", " ")
        super().__init__(f"{message} at position {pos}: ...{snippet}...")


class UnknownVariableError(ParseError):
    pass


@dataclass(frozen=True)
class Node:
    span: tuple[int, int] = field(kw_only=True, compare=False)


@dataclass(frozen=True)
class Lit(Node):
    value: int


@dataclass(frozen=True)
class Var(Node):
    name: str


@dataclass(frozen=True)
class Neg(Node):
    child: Node


@dataclass(frozen=True)
class Sum(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Diff(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Prod(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Quot(Node):
    num: Node
    den: Node


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int


@dataclass(frozen=True)
class Sqrt(Node):
    child: Node


_TOKEN_KINDS = {"+", "-", "*", "/", "^", "(", ")"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Return (kind, value, pos) triples; kinds: int, name, punctuation."""
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in _TOKEN_KINDS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i, text)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2], self.text)
        return tok

    def parse(self) -> Node:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[1]!r}", tok[2], self.text)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _, _ = self.take()
            right = self.term()
            span = (node.span[0], right.span[1])
            node = Sum(node, right, span=span) if op == "+" else Diff(node, right, span=span)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, _ = self.take()
            right = self.unary()
            span = (node.span[0], right.span[1])
            node = Prod(node, right, span=span) if op == "*" else Quot(node, right, span=span)
        return node

    def unary(self) -> Node:
        tok = self.peek()
        if tok[0] == "-":
            self.take()
            child = self.unary()
            return Neg(child, span=(tok[2], child.span[1]))
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer", pos, self.text)
            return Pow(base, int(value), span=(base.span[0], pos + len(value)))
        return base

    def atom(self) -> Node:
        kind, value, pos = self.take()
        if kind == "int":
            return Lit(int(value), span=(pos, pos + len(value)))
        if kind == "name":
            if value == "sqrt":
                self.expect("(")
                child = self.expr()
                _, _, rpos = self.expect(")")
                return Sqrt(child, span=(pos, rpos + 1))
            if value in VARIABLES:
                return Var(value, span=(pos, pos + len(value)))
            raise UnknownVariableError(f"unknown variable {value!r}", pos, self.text)
        if kind == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected token {value!r}", pos, self.text)


def parse(text: str) -> Node:
    return _Parser(text).parse()


def render(node: Node) -> str:
    """Unambiguous text for an AST; parse(render(t)) equals t up to spans."""

    def prec(n: Node) -> int:
        if isinstance(n, (Sum, Diff)):
            return 1
        if isinstance(n, (Prod, Quot)):
            return 2
        if isinstance(n, Neg):
            return 3
        return 4

    def wrap(child: Node, minimum: int) -> str:
        text = go(child)
        return f"({text})" if prec(child) < minimum else text

    def go(n: Node) -> str:
        if isinstance(n, Lit):
            return str(n.value)
        if isinstance(n, Var):
            return n.name
        if isinstance(n, Neg):
            return "-" + wrap(n.child, 3)
        if isinstance(n, Sum):
            return f"{wrap(n.left, 1)} + {wrap(n.right, 2)}"
        if isinstance(n, Diff):
            return f"{wrap(n.left, 1)} - {wrap(n.right, 2)}"
        if isinstance(n, Prod):
            return f"{wrap(n.left, 2)}*{wrap(n.right, 3)}"
        if isinstance(n, Quot):
            return f"{wrap(n.num, 2)}/{wrap(n.den, 4)}"
        if isinstance(n, Pow):
            return f"{wrap(n.base, 4)}^{n.exponent}"
        if isinstance(n, Sqrt):
            return f"sqrt({go(n.child)})"
        raise TypeError(f"unknown node {n!r}")

    return go(node)


def variables_used(node: Node) -> frozenset[str]:
    out: set[str] = set()

    def visit(n: Node) -> None:
        if isinstance(n, Var):
            out.add(n.name)
        elif isinstance(n, Neg):
            visit(n.child)
        elif isinstance(n, (Sum, Diff, Prod)):
            visit(n.left)
            visit(n.right)
        elif isinstance(n, Quot):
            visit(n.num)
            visit(n.den)
        elif isinstance(n, Pow):
            visit(n.base)
        elif isinstance(n, Sqrt):
            visit(n.child)

    visit(node)
    return frozenset(out)
