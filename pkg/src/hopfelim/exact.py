"""Exact rational coefficients and sparse linear combinations.

Every algebraic element in the package is a :class:`LinComb` keyed by some
totally ordered basis type (words, pairs of words, ...) with
:class:`fractions.Fraction` coefficients.  Zero coefficients are never stored,
so two combinations are equal exactly when their term dictionaries are equal.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Callable, Generic, Hashable, Iterable, Iterator, Mapping, TypeVar

K = TypeVar("K", bound=Hashable)
L = TypeVar("L", bound=Hashable)


def as_rational(c) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction; floats are refused."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c.strip())
    raise TypeError(f"not an exact rational: {c!r}")


def format_rational(c: Fraction) -> str:
    """Render as reduced ``p/q``, or a bare integer when the denominator is 1."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class LinComb(Generic[K]):
    """Immutable finite linear combination of basis keys over the rationals.

    Iteration yields ``(key, coefficient)`` pairs in key order.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[K, object] | Iterable[tuple[K, object]] = ()):
        acc: dict[K, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            c = as_rational(c)
            if c:
                total = acc.get(key, 0) + c
                if total:
                    acc[key] = total
                else:
                    acc.pop(key, None)
        self._terms = acc

    @classmethod
    def _wrap(cls, terms: dict[K, Fraction]) -> LinComb[K]:
        # terms must already be zero-free Fractions
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> LinComb[K]:
        return cls._wrap({})

    @classmethod
    def basis(cls, key: K, c=1) -> LinComb[K]:
        return cls([(key, c)])

    @property
    def terms(self) -> Mapping[K, Fraction]:
        return self._terms

    def coefficient(self, key: K) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def support(self) -> list[K]:
        return sorted(self._terms)

    def __iter__(self) -> Iterator[tuple[K, Fraction]]:
        for key in sorted(self._terms):
            yield key, self._terms[key]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: LinComb[K]) -> LinComb[K]:
        if not isinstance(other, LinComb):
            return NotImplemented
        return lincomb_add(self, other)

    def __sub__(self, other: LinComb[K]) -> LinComb[K]:
        if not isinstance(other, LinComb):
            return NotImplemented
        return lincomb_add(self, lincomb_scale(-1, other))

    def __neg__(self) -> LinComb[K]:
        return LinComb._wrap({k: -c for k, c in self._terms.items()})

    def __rmul__(self, c) -> LinComb[K]:
        return lincomb_scale(c, self)

    def map_keys(self, f: Callable[[K], L]) -> LinComb[L]:
        """Linear extension of a map on basis keys (colliding images are summed)."""
        return LinComb((f(k), c) for k, c in self._terms.items())

    def __repr__(self) -> str:
        inner = ", ".join(f"{k!r}: {format_rational(c)}" for k, c in self)
        return f"LinComb({{{inner}}})"


def lincomb_add(x: LinComb[K], y: LinComb[K]) -> LinComb[K]:
    """Coefficient-wise sum; cancelled keys are dropped."""
    if len(x) < len(y):
        x, y = y, x
    out = dict(x._terms)
    for k, c in y._terms.items():
        total = out.get(k, 0) + c
        if total:
            out[k] = total
        else:
            del out[k]
    return LinComb._wrap(out)


def lincomb_scale(c, x: LinComb[K]) -> LinComb[K]:
    c = as_rational(c)
    if not c:
        return LinComb._wrap({})
    if c == 1:
        return x
    return LinComb._wrap({k: c * v for k, v in x._terms.items()})


class Accumulator(Generic[K]):
    """Mutable scratch dictionary used while building a LinComb term by term."""

    __slots__ = ("_acc",)

    def __init__(self):
        self._acc: dict[K, Fraction] = {}

    def add(self, key: K, c) -> None:
        acc = self._acc
        acc[key] = acc.get(key, 0) + c

    def add_lincomb(self, x: LinComb[K], scale=1) -> None:
        acc = self._acc
        for k, c in x._terms.items():
            acc[k] = acc.get(k, 0) + scale * c

    def result(self) -> LinComb[K]:
        return LinComb._wrap({k: Fraction(c) for k, c in self._acc.items() if c})


def rank(rows: Iterable[LinComb]) -> int:
    """Exact rank over Q of the row vectors, by sparse Gaussian elimination."""
    pivots: dict = {}
    r = 0
    for row in rows:
        vec = dict(row.terms)
        while vec:
            lead = min(vec)
            if lead not in pivots:
                c = vec[lead]
                pivots[lead] = {k: v / c for k, v in vec.items()}
                r += 1
                break
            c = vec[lead]
            for k, v in pivots[lead].items():
                nv = vec.get(k, 0) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
    return r
