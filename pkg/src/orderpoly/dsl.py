"""A small expression language for posets.

    expr    := sum
    sum     := prod { ("+" | "oplus" | "glue") prod }
    prod    := atom { ("*" | "otimes") atom }
    atom    := call | literal | "(" expr ")"
    call    := IDENT "(" args ")" | IDENT
    args    := (INT | expr) { "," (INT | expr) }
    literal := "poset" "{" "n=" INT ";" { INT "<" INT ";" } "}"

``+`` is the direct sum, ``oplus`` the ordinal sum, ``glue`` identifies a
top with a bottom, ``*`` is the direct product and ``otimes`` the ordinal
product.  Binary operators associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import poset as po


class DslError(ValueError):
    code = "dsl"

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message = message
        self.line = line
        self.col = col
        where = f" at {line}:{col}" if line else ""
        super().__init__(f"{self.code} error{where}: {message}")


class LexError(DslError):
    code = "lex"


class ParseError(DslError):
    code = "syntax"


class ArityError(DslError):
    code = "arity"


# -- AST --------------------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    name: str
    params: tuple[int, ...] = ()


@dataclass(frozen=True)
class Unary:
    op: str
    child: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Power:
    op: str
    child: "Expr"
    k: int


@dataclass(frozen=True)
class Literal:
    n: int
    covers: tuple[tuple[int, int], ...]


Expr = Union[Leaf, Unary, Binary, Power, Literal]

SUM_OPS = {"+": "dsum", "oplus": "osum", "glue": "glue"}
PROD_OPS = {"*": "dprod", "otimes": "oprod"}
OP_TEXT = {"dsum": "+", "osum": "oplus", "glue": "glue", "dprod": "*", "oprod": "otimes"}
PRECEDENCE = {"dsum": 1, "osum": 1, "glue": 1, "dprod": 2, "oprod": 2}

# builder name -> number of integer params (None = one or more)
BUILDERS = {
    "chain": 1,
    "I": 1,
    "antichain": 1,
    "boolean": 1,
    "ferrers": None,
    "v": 0,
    "diamond": 0,
    "bar_kk": 1,
}
ALIASES = {"I": "chain"}


# -- lexer ------------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[()+*,{};<=])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # int, ident, sym, eof
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise LexError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "ws":
            for k, ch in enumerate(m.group(), pos):
                if ch == "\n":
                    line += 1
                    line_start = k + 1
        else:
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# -- parser -----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.col)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "eof":
            found = self.tok.text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")
        tok = self.tok
        self.i += 1
        return tok

    def expect_int(self) -> int:
        if self.tok.kind != "int":
            self.error(f"expected integer, found {self.tok.text or 'end of input'!r}")
        value = int(self.tok.text)
        self.i += 1
        return value

    def parse(self) -> Expr:
        expr = self.sum()
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}")
        return expr

    def sum(self) -> Expr:
        left = self.prod()
        while self.tok.text in SUM_OPS and self.tok.kind in ("sym", "ident"):
            op = SUM_OPS[self.tok.text]
            self.i += 1
            left = Binary(op, left, self.prod())
        return left

    def prod(self) -> Expr:
        left = self.atom()
        while self.tok.text in PROD_OPS and self.tok.kind in ("sym", "ident"):
            op = PROD_OPS[self.tok.text]
            self.i += 1
            left = Binary(op, left, self.atom())
        return left

    def atom(self) -> Expr:
        tok = self.tok
        if tok.text == "(":
            self.i += 1
            inner = self.sum()
            self.expect(")")
            return inner
        if tok.kind == "ident":
            if tok.text == "poset" and self.peek().text == "{":
                return self.literal()
            return self.call()
        self.error(f"expected a poset expression, found {tok.text or 'end of input'!r}")

    def args(self) -> list[tuple[Token, object]]:
        out = []
        self.expect("(")
        if self.tok.text == ")":
            self.i += 1
            return out
        while True:
            start = self.tok
            if self.tok.kind == "int" and self.peek().text in (",", ")"):
                out.append((start, self.expect_int()))
            else:
                out.append((start, self.sum()))
            if self.tok.text == ",":
                self.i += 1
                continue
            self.expect(")")
            return out

    def call(self) -> Expr:
        name_tok = self.tok
        name = name_tok.text
        self.i += 1
        args = self.args() if self.tok.text == "(" else []
        if name in BUILDERS:
            want = BUILDERS[name]
            if not all(isinstance(a, int) for _, a in args):
                raise ArityError(f"{name} takes integer parameters", name_tok.line, name_tok.col)
            if (want is None and not args) or (want is not None and len(args) != want):
                expected = "one or more" if want is None else str(want)
                raise ArityError(
                    f"{name} takes {expected} parameter(s), got {len(args)}", name_tok.line, name_tok.col
                )
            return Leaf(ALIASES.get(name, name), tuple(a for _, a in args))
        if name == "dual":
            self._check(name_tok, args, ["expr"])
            return Unary("dual", args[0][1])
        if name in ("pow_oplus", "pow_glue"):
            self._check(name_tok, args, ["expr", "int"])
            k = args[1][1]
            if k < 1:
                raise ArityError(f"{name} power must be >= 1", *_pos(args[1][0]))
            return Power("osum" if name == "pow_oplus" else "glue", args[0][1], k)
        if name == "glue":
            self._check(name_tok, args, ["expr", "expr"])
            return Binary("glue", args[0][1], args[1][1])
        raise ParseError(f"unknown name {name!r}", name_tok.line, name_tok.col)

    @staticmethod
    def _check(name_tok: Token, args, kinds: list[str]) -> None:
        if len(args) != len(kinds):
            raise ArityError(
                f"{name_tok.text} takes {len(kinds)} argument(s), got {len(args)}", name_tok.line, name_tok.col
            )
        for (tok, value), kind in zip(args, kinds):
            if (kind == "int") != isinstance(value, int):
                raise ArityError(f"{name_tok.text}: expected {kind} argument", tok.line, tok.col)

    def literal(self) -> Literal:
        self.expect("poset")
        self.expect("{")
        n_tok = self.tok
        if n_tok.text != "n":
            self.error("literal must start with n=<size>")
        self.i += 1
        self.expect("=")
        n = self.expect_int()
        covers = []
        if self.tok.text == ";":
            self.i += 1
        elif self.tok.text != "}":
            self.error("expected ';' or '}'")
        while self.tok.text != "}":
            a = self.expect_int()
            self.expect("<")
            b = self.expect_int()
            covers.append((a, b))
            if self.tok.text == ";":
                self.i += 1
            elif self.tok.text != "}":
                self.error("expected ';' or '}'")
        self.expect("}")
        return Literal(n, tuple(covers))


def _pos(tok: Token) -> tuple[int, int]:
    return tok.line, tok.col


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# -- printer ----------------------------------------------------------------


def to_text(e: Expr) -> str:
    if isinstance(e, Leaf):
        if not e.params and BUILDERS.get(e.name) == 0:
            return e.name
        return f"{e.name}({','.join(map(str, e.params))})"
    if isinstance(e, Unary):
        return f"{e.op}({to_text(e.child)})"
    if isinstance(e, Power):
        name = "pow_oplus" if e.op == "osum" else "pow_glue"
        return f"{name}({to_text(e.child)}, {e.k})"
    if isinstance(e, Literal):
        body = "".join(f" {a}<{b};" for a, b in e.covers)
        return f"poset{{n={e.n};{body}}}"
    if isinstance(e, Binary):
        prec = PRECEDENCE[e.op]
        left = to_text(e.left)
        right = to_text(e.right)
        if isinstance(e.left, Binary) and PRECEDENCE[e.left.op] < prec:
            left = f"({left})"
        if isinstance(e.right, Binary) and PRECEDENCE[e.right.op] <= prec:
            right = f"({right})"
        return f"{left} {OP_TEXT[e.op]} {right}"
    raise TypeError(f"not an expression: {e!r}")


# -- evaluation -------------------------------------------------------------

_BINARY = {
    "dsum": po.direct_sum,
    "osum": po.ordinal_sum,
    "glue": po.glue,
    "dprod": po.direct_product,
    "oprod": po.ordinal_product,
}


def eval_expr(e: Expr) -> po.Poset:
    if isinstance(e, Leaf):
        return po.build_named(e.name, *e.params)
    if isinstance(e, Unary):
        return po.dual(eval_expr(e.child))
    if isinstance(e, Binary):
        return _BINARY[e.op](eval_expr(e.left), eval_expr(e.right))
    if isinstance(e, Power):
        child = eval_expr(e.child)
        return po.pow_oplus(child, e.k) if e.op == "osum" else po.pow_glue(child, e.k)
    if isinstance(e, Literal):
        return po.poset_from_covers(e.n, e.covers)
    raise TypeError(f"not an expression: {e!r}")


def evaluate(text: str) -> po.Poset:
    return eval_expr(parse(text))
