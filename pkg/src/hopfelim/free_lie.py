"""Free Lie algebras in the Lyndon basis.

A :class:`LiePolynomial` is a combination of Lyndon words, each standing for
its standard bracketing.  Brackets are computed by expanding into the tensor
algebra, taking the commutator and extracting coordinates again; extraction
relies on ``expand(w) = w + (lexicographically larger words)``.
"""

from __future__ import annotations

import functools
import heapq
import math
from fractions import Fraction
from typing import Sequence

from .exact import Accumulator, LinComb
from .tensor import Tensor, TensorPower, _Element, _check_same, coproduct, format_terms
from .words import Alphabet, Letter, is_lyndon, standard_factorization


class NotALieElement(ValueError):
    """Raised by :func:`lie_extract`; ``residual`` is what could not be eliminated."""

    def __init__(self, residual: Tensor):
        self.residual = residual
        super().__init__(f"not a Lie element; residual {format_tensor_short(residual)}")


def format_tensor_short(t: Tensor, limit: int = 8) -> str:
    from .tensor import format_tensor

    if len(t) <= limit:
        return format_tensor(t)
    head = Tensor(t.alphabet, LinComb(list(t.body)[:limit]))
    return format_tensor(head) + f" + ... ({len(t) - limit} more terms)"


class LiePolynomial(_Element):
    """Element of the free Lie algebra over ``alphabet`` in the Lyndon basis."""

    __slots__ = ()

    def __init__(self, alphabet: Alphabet, body=()):
        super().__init__(alphabet, body)
        for w in self.body.terms:
            if not w or not is_lyndon(w):
                raise ValueError(f"{w!r} is not a Lyndon word")

    @classmethod
    def generator(cls, alphabet: Alphabet, letter: Letter | str, c=1) -> LiePolynomial:
        if isinstance(letter, str):
            letter = alphabet.resolve(letter)
        return cls(alphabet, LinComb.basis((letter,), c))

    @classmethod
    def lyndon(cls, alphabet: Alphabet, w: Sequence[Letter], c=1) -> LiePolynomial:
        return cls(alphabet, LinComb.basis(tuple(w), c))

    @classmethod
    def zero(cls, alphabet: Alphabet) -> LiePolynomial:
        return cls(alphabet, LinComb.zero())

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        return f"LiePolynomial({format_lie(self)})"


@functools.lru_cache(maxsize=None)
def _expand_int(w: tuple) -> dict:
    if len(w) == 1:
        return {w: 1}
    u, v = standard_factorization(w)
    eu, ev = _expand_int(u), _expand_int(v)
    out: dict = {}
    for a, ca in eu.items():
        for b, cb in ev.items():
            c = ca * cb
            out[a + b] = out.get(a + b, 0) + c
            out[b + a] = out.get(b + a, 0) - c
    return {k: c for k, c in out.items() if c}


def expand_lyndon(w: tuple) -> LinComb:
    """Commutator expansion of the standard bracketing of a Lyndon word."""
    return LinComb(_expand_int(tuple(w)))


def expand(x: LiePolynomial) -> Tensor:
    out: dict = {}
    for w, c in x.body.terms.items():
        for word, m in _expand_int(w).items():
            out[word] = out.get(word, 0) + c * m
    return Tensor(x.alphabet, LinComb._wrap({k: Fraction(c) for k, c in out.items() if c}))


def _common_denominator(values) -> int:
    d = 1
    for c in values:
        d = math.lcm(d, c.denominator)
    return d


def _extract_int(rest: dict) -> tuple[dict, dict]:
    """Integer triangular elimination; returns ``(coords, residual)``, residual empty on success.

    ``rest`` is consumed.  Expansions are integral with leading coefficient
    1, so integral input stays integral throughout.
    """
    heap = list(rest)
    heapq.heapify(heap)
    coords: dict = {}
    while heap:
        w = heapq.heappop(heap)
        c = rest.get(w)
        if c is None:
            continue
        if not w or not is_lyndon(w):
            return coords, rest
        coords[w] = c
        for word, m in _expand_int(w).items():
            old = rest.get(word)
            nv = (old or 0) - c * m
            if nv:
                rest[word] = nv
                if old is None:
                    heapq.heappush(heap, word)
            else:
                del rest[word]
    return coords, rest


def lie_extract(t: Tensor) -> LiePolynomial:
    """Lyndon coordinates of a Lie element of the tensor algebra.

    Repeatedly takes the smallest remaining word: it must be Lyndon, and its
    coefficient is the coordinate of that Lyndon word.
    """
    scale = _common_denominator(t.body.terms.values())
    coords, residual = _extract_int({w: int(c * scale) for w, c in t.body.terms.items()})
    if residual:
        raise NotALieElement(Tensor(t.alphabet, LinComb._wrap(
            {k: Fraction(v, scale) for k, v in residual.items()})))
    return LiePolynomial(t.alphabet, LinComb._wrap({w: Fraction(c, scale) for w, c in coords.items()}))


@functools.lru_cache(maxsize=None)
def _bracket_lyndon(u: tuple, v: tuple) -> dict:
    # Lyndon coordinates of [P_u, P_v]: expand, commute, extract
    eu, ev = _expand_int(u), _expand_int(v)
    comm: dict = {}
    for a, ca in eu.items():
        for b, cb in ev.items():
            c = ca * cb
            comm[a + b] = comm.get(a + b, 0) + c
            comm[b + a] = comm.get(b + a, 0) - c
    coords, residual = _extract_int({k: c for k, c in comm.items() if c})
    if residual:
        raise AssertionError("commutator of Lie elements is not a Lie element")
    return coords


def bracket(x: LiePolynomial, y: LiePolynomial) -> LiePolynomial:
    """Lie bracket, bilinear over the Lyndon-pair brackets ``[P_u, P_v]``."""
    _check_same(x.alphabet, y.alphabet)
    acc = Accumulator()
    for u, cu in x.body.terms.items():
        for v, cv in y.body.terms.items():
            if u == v:
                continue
            c = cu * cv
            for w, m in _bracket_lyndon(u, v).items():
                acc.add(w, c * m)
    return LiePolynomial(x.alphabet, acc.result())


def is_primitive(t: Tensor) -> bool:
    one = Tensor.unit(t.alphabet)
    return coproduct(t) == TensorPower.pure(t, one) + TensorPower.pure(one, t)


def bracket_text(w: Sequence[Letter]) -> str:
    """``[a,[a,b]]``-style rendering of the standard bracketing."""
    if len(w) == 1:
        return w[0].symbol
    u, v = standard_factorization(w)
    return f"[{bracket_text(u)},{bracket_text(v)}]"


def format_lie(x: LiePolynomial) -> str:
    return format_terms((bracket_text(w), c) for w, c in x.body)
