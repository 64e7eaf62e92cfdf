"""A small expression language for symmetric functions.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | 'q' | 't' | '(' expr ')'
            | B '[' INT ']' | B '[[' INT (',' INT)* ']]'      B in m s e h p
            | 'G' '(' INT ',' INT ')'
            | ('nabla' | 'omega') '(' expr ')'
            | ('C' | 'Cvee' | 'Cstar') '[' ['-'] INT ']' '(' expr ')'

Partitions use double brackets, m[[2,2,1]]; a single bracket is a one-part
index, e[5].  Division is only by scalars.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .exactalg import Q_QT, T_QT, qt
from .symfun import SymFun, basis_extract, basis_inject, from_basis, petrie

BASIS_NAMES = {"m", "s", "e", "h", "p"}
OPERATORS = {"nabla", "omega"}
INDEXED_OPS = {"C", "Cvee", "Cstar"}


class ParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\[\[|\]\]|[-+*/^()\[\],]))")


def tokenize(src):
    toks = []
    pos = 0
    n = len(src)
    while pos < n:
        if src[pos:].strip() == "":
            break
        mt = _TOKEN.match(src, pos)
        if not mt:
            raise ParseError(f"unexpected character {src[pos:].lstrip()[:1]!r}",
                             pos + len(src[pos:]) - len(src[pos:].lstrip()))
        start = mt.start(mt.lastindex)
        if mt.group(1):
            toks.append(("int", int(mt.group(1)), start))
        elif mt.group(2):
            toks.append(("name", mt.group(2), start))
        else:
            toks.append(("sym", mt.group(3), start))
        pos = mt.end()
    toks.append(("end", None, n))
    return toks


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Basis:
    basis: str
    parts: tuple


@dataclass(frozen=True)
class Petrie:
    k: int
    n: int


@dataclass(frozen=True)
class Apply:
    op: str
    index: int | None
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


class _Parser:
    def __init__(self, src):
        self.toks = tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, sym):
        tok = self.next()
        if tok[0] != "sym" or tok[1] != sym:
            raise ParseError(f"expected {sym!r}, found {_show(tok)}", tok[2])
        return tok

    def accept(self, sym):
        tok = self.peek()
        if tok[0] == "sym" and tok[1] == sym:
            self.i += 1
            return True
        return False

    def integer(self, signed=False):
        neg = signed and self.accept("-")
        tok = self.next()
        if tok[0] != "int":
            raise ParseError(f"expected an integer, found {_show(tok)}", tok[2])
        return -tok[1] if neg else tok[1]

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {_show(tok)}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while True:
            if self.accept("+"):
                node = BinOp("+", node, self.term())
            elif self.accept("-"):
                node = BinOp("-", node, self.term())
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            if self.accept("*"):
                node = BinOp("*", node, self.unary())
            elif self.accept("/"):
                node = BinOp("/", node, self.unary())
            else:
                return node

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept("^"):
            return Pow(base, self.integer(signed=True))
        return base

    def atom(self):
        tok = self.next()
        kind, val, pos = tok
        if kind == "int":
            return Num(val)
        if kind == "sym" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind != "name":
            raise ParseError(f"unexpected {_show(tok)}", pos)
        if val in ("q", "t"):
            return Var(val)
        if val in BASIS_NAMES:
            if self.accept("[["):
                parts = [self.integer()]
                while self.accept(","):
                    parts.append(self.integer())
                self.expect("]]")
                return Basis(val, tuple(parts))
            self.expect("[")
            n = self.integer()
            self.expect("]")
            return Basis(val, (n,) if n else ())
        if val == "G":
            self.expect("(")
            k = self.integer()
            self.expect(",")
            n = self.integer()
            self.expect(")")
            return Petrie(k, n)
        if val in OPERATORS:
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Apply(val, None, arg)
        if val in INDEXED_OPS:
            self.expect("[")
            a = self.integer(signed=True)
            self.expect("]")
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Apply(val, a, arg)
        raise ParseError(f"unknown name {val!r}", pos)


def _show(tok):
    return "end of input" if tok[0] == "end" else repr(str(tok[1]))


def parse(src):
    return _Parser(src).parse()


# -- evaluation -------------------------------------------------------------------


def _as_sym(v):
    return v if isinstance(v, SymFun) else SymFun.scalar(v)


def evaluate(node):
    """Evaluate to a QTRat (pure scalar) or a SymFun."""
    from . import hallops
    from .macdonald import nabla
    from .symfun import omega

    if isinstance(node, Num):
        return qt(node.value)
    if isinstance(node, Var):
        return Q_QT if node.name == "q" else T_QT
    if isinstance(node, Basis):
        parts = tuple(sorted((x for x in node.parts if x), reverse=True))
        return basis_inject(node.basis, parts)
    if isinstance(node, Petrie):
        return petrie(node.k, node.n)
    if isinstance(node, Neg):
        return -evaluate(node.arg)
    if isinstance(node, Pow):
        base = evaluate(node.base)
        if isinstance(base, SymFun):
            if node.exp < 0:
                raise ValueError("negative power of a symmetric function")
            return base ** node.exp
        return base ** node.exp
    if isinstance(node, BinOp):
        a, b = evaluate(node.left), evaluate(node.right)
        if node.op == "/":
            if isinstance(b, SymFun):
                co = b.terms
                if set(co) - {()}:
                    raise ValueError("division by a non-scalar symmetric function")
                b = co.get((), qt(0))
            if not b:
                raise ZeroDivisionError("division by zero")
            return a / b
        if isinstance(a, SymFun) or isinstance(b, SymFun):
            a, b = _as_sym(a), _as_sym(b)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        return a * b
    if isinstance(node, Apply):
        f = _as_sym(evaluate(node.arg))
        if node.op == "nabla":
            return nabla(f)
        if node.op == "omega":
            return omega(f)
        fn = {"C": hallops.c_apply, "Cvee": hallops.c_vee, "Cstar": hallops.c_star}[node.op]
        return fn(node.index, f)
    raise TypeError(f"not an expression node: {node!r}")


def eval_expr(src):
    """Parse and evaluate to a SymFun."""
    return _as_sym(evaluate(parse(src)))


def to_expr(f, basis="s"):
    """A source string that re-parses to f."""
    co = basis_extract(f, basis)
    if not co:
        return "0"
    from . import combinat as cb
    pieces = []
    for lam in sorted(co, key=lambda k: (sum(k), cb.sort_key(k))):
        atom = f"{basis}[[{','.join(map(str, lam))}]]" if lam else "1"
        pieces.append(f"({co[lam]})*{atom}")
    return " + ".join(pieces)


def from_json_obj(obj):
    """Inverse of symfun.to_json_obj."""
    coeffs = {}
    for term in obj["terms"]:
        c = evaluate(parse(term["coeff"]))
        if isinstance(c, SymFun):
            raise ValueError("coefficient is not a scalar")
        coeffs[tuple(term["partition"])] = c
    return from_basis(obj["basis"], coeffs)
