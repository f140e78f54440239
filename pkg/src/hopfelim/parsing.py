"""Expression parser for the command line.

Grammar (whitespace-insensitive)::

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := "-" unary | primary
    primary := RATIONAL | SYMBOL | USYMBOL | "(" expr ")" | "[" expr "," expr "]"

``RATIONAL`` is ``p`` or ``p/q``; ``USYMBOL`` is ``u[...]`` (an identifier
immediately followed by a bracketed subscript, which juxtaposition-free
syntax makes unambiguous).  Columns in errors are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact import LinComb, as_rational
from .free_lie import LiePolynomial, bracket
from .tensor import Tensor
from .words import Alphabet, UnknownSymbol


class ParseError(ValueError):
    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(f"{message} at column {column}")


@dataclass(frozen=True)
class Num:
    value: Fraction
    column: int = 0


@dataclass(frozen=True)
class Sym:
    name: str
    column: int = 0


@dataclass(frozen=True)
class Neg:
    arg: object
    column: int = 0


@dataclass(frozen=True)
class Sum:
    terms: tuple
    column: int = 0


@dataclass(frozen=True)
class Prod:
    factors: tuple
    column: int = 0


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object
    column: int = 0


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<usym>[A-Za-z_][A-Za-z0-9_]*\[[^\[\],]*\])
  | (?P<num>\d+(?:/\d+)?)
  | (?P<sym>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*(),\[\]])
""", re.VERBOSE)


def tokenize(source: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if not m:
            raise ParseError(f"unexpected character {source[pos]!r}", pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos + 1))
        pos = m.end()
    out.append(("end", "", len(source) + 1))
    return out


class _Parser:
    def __init__(self, source: str, symbols, lie: bool):
        self.tokens = tokenize(source)
        self.i = 0
        self.symbols = symbols
        self.lie = lie

    def peek(self):
        return self.tokens[self.i]

    def take(self, text: str | None = None):
        tok = self.tokens[self.i]
        if text is not None and tok[1] != text:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {text!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        col = self.peek()[2]
        terms = [self.term()]
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            terms.append(t if op == "+" else Neg(t, t.column))
        return terms[0] if len(terms) == 1 else Sum(tuple(terms), col)

    def term(self):
        col = self.peek()[2]
        factors = [self.unary()]
        while self.peek()[1] == "*":
            self.take()
            factors.append(self.unary())
        return factors[0] if len(factors) == 1 else Prod(tuple(factors), col)

    def unary(self):
        tok = self.peek()
        if tok[1] == "-":
            self.take()
            return Neg(self.unary(), tok[2])
        return self.primary()

    def primary(self):
        kind, text, col = self.take()
        if kind == "num":
            return Num(Fraction(text), col)
        if kind in ("sym", "usym"):
            if self.symbols is not None and text not in self.symbols:
                raise ParseError(f"unknown symbol {text!r}", col)
            return Sym(text, col)
        if text == "(":
            node = self.expr()
            self.take(")")
            return node
        if text == "[":
            if not self.lie:
                raise ParseError("Lie bracket not allowed here", col)
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return Bracket(left, right, col)
        what = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"unexpected {what}", col)


class _SymbolTable:
    def __init__(self, alphabets):
        self.alphabets = alphabets

    def __contains__(self, name):
        for a in self.alphabets:
            try:
                a.resolve(name)
                return True
            except UnknownSymbol:
                pass
        return False


def parse(source: str, alphabets: Alphabet | list[Alphabet] | None = None, lie: bool = True):
    """Parse ``source`` to an AST; symbols are validated against ``alphabets`` when given."""
    if isinstance(alphabets, Alphabet):
        alphabets = [alphabets]
    table = _SymbolTable(alphabets) if alphabets is not None else None
    p = _Parser(source, table, lie)
    node = p.expr()
    kind, text, col = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {text!r}", col)
    return node


class EvalError(ValueError):
    pass


def _scalar(node) -> Fraction | None:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Neg):
        inner = _scalar(node.arg)
        return None if inner is None else -inner
    if isinstance(node, Prod):
        vals = [_scalar(f) for f in node.factors]
        if all(v is not None for v in vals):
            out = Fraction(1)
            for v in vals:
                out *= v
            return out
    if isinstance(node, Sum):
        vals = [_scalar(t) for t in node.terms]
        if all(v is not None for v in vals):
            return sum(vals, Fraction(0))
    return None


def to_tensor(node, alphabet: Alphabet, extra: Callable[[str], Tensor] | None = None) -> Tensor:
    """Evaluate in the tensor algebra; ``[x,y]`` is the commutator ``xy - yx``.

    Symbols outside ``alphabet`` are passed to ``extra`` (which raises
    :class:`UnknownSymbol` to reject them), e.g. to substitute U-generators.
    """
    def ev(n):
        if isinstance(n, Num):
            return Tensor.word(alphabet, (), n.value)
        if isinstance(n, Sym):
            try:
                return Tensor.word(alphabet, (alphabet.resolve(n.name),))
            except UnknownSymbol:
                pass
            try:
                if extra is not None:
                    return extra(n.name)
            except UnknownSymbol:
                pass
            raise EvalError(f"symbol {n.name!r} not in this algebra (column {n.column})")
        if isinstance(n, Neg):
            return -ev(n.arg)
        if isinstance(n, Sum):
            out = Tensor.zero(alphabet)
            for t in n.terms:
                out = out + ev(t)
            return out
        if isinstance(n, Prod):
            out = Tensor.unit(alphabet)
            for f in n.factors:
                out = out * ev(f)
            return out
        if isinstance(n, Bracket):
            x, y = ev(n.left), ev(n.right)
            return x * y - y * x
        raise TypeError(n)
    return ev(node)


def to_lie(node, alphabet: Alphabet) -> LiePolynomial:
    """Evaluate in the free Lie algebra: sums, rational multiples and brackets only."""
    s = _scalar(node)
    if s is not None:
        if s:
            raise EvalError("a nonzero constant is not a Lie element")
        return LiePolynomial.zero(alphabet)
    if isinstance(node, Sym):
        try:
            return LiePolynomial.generator(alphabet, node.name)
        except UnknownSymbol:
            raise EvalError(f"symbol {node.name!r} not in this algebra (column {node.column})") from None
    if isinstance(node, Neg):
        return -to_lie(node.arg, alphabet)
    if isinstance(node, Sum):
        out = LiePolynomial.zero(alphabet)
        for t in node.terms:
            out = out + to_lie(t, alphabet)
        return out
    if isinstance(node, Prod):
        scalars = [f for f in node.factors if _scalar(f) is not None]
        rest = [f for f in node.factors if _scalar(f) is None]
        if len(rest) != 1:
            raise EvalError(f"product of Lie elements at column {node.column}; use [x,y]")
        c = Fraction(1)
        for f in scalars:
            c *= _scalar(f)
        return to_lie(rest[0], alphabet).scale(c)
    if isinstance(node, Bracket):
        return bracket(to_lie(node.left, alphabet), to_lie(node.right, alphabet))
    raise TypeError(node)


def lie_from_tensor_json(alphabet: Alphabet, data: list[dict]) -> LiePolynomial:
    """Inverse of serialising a Lie polynomial (monomials are its Lyndon words)."""
    terms = []
    for item in data:
        terms.append((tuple(alphabet.resolve(s) for s in item["monomial"]), as_rational(item["coefficient"])))
    return LiePolynomial(alphabet, LinComb(terms))
