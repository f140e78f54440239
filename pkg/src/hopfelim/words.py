"""Letters, alphabets, words and Lyndon-word combinatorics.

A word is a plain ``tuple`` of :class:`Letter` objects; the empty tuple is the
unit.  Letters compare by an order key, so Python's tuple comparison is the
lexicographic order used for Lyndon words (a proper prefix is smaller).

Letter order: V-letters, then W-letters, then U-letters.  U-letters (the free
generators ``u[alpha; v]`` produced by elimination) are ordered by
``(degree, alpha, v)`` and are created on demand by :class:`UAlphabet`.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

PARTS = ("V", "W", "U")
_PART_RANK = {p: i for i, p in enumerate(PARTS)}


class EmptyWord(ValueError):
    pass


class NotFactorizable(ValueError):
    pass


class UnknownSymbol(KeyError):
    pass


class Letter(tuple):
    """A generator of a tensor algebra.

    The tuple value is ``(order_key, symbol)``, so hashing and comparison of
    words (tuples of letters) stay in C.  U-letters additionally record the
    W-word ``alpha`` and V-letter ``v`` they stand for; their degree is
    ``len(alpha) + 1``.
    """

    def __new__(cls, key: tuple, symbol: str, part: str, degree: int = 1,
                alpha: tuple = (), v: Letter | None = None):
        if part not in _PART_RANK:
            raise ValueError(f"unknown part {part!r}")
        if degree < 1:
            raise ValueError("letter degree must be positive")
        self = super().__new__(cls, (key, symbol))
        self.key = key
        self.symbol = symbol
        self.part = part
        self.degree = degree
        self.alpha = alpha
        self.v = v
        return self

    def __getnewargs__(self):
        return (self.key, self.symbol, self.part, self.degree, self.alpha, self.v)

    def __repr__(self):
        return self.symbol


Word = tuple  # tuple[Letter, ...]


def word_str(w: Sequence[Letter], sep: str = "") -> str:
    return sep.join(l.symbol for l in w) if w else "1"


def degree(w: Sequence[Letter]) -> int:
    return sum(l.degree for l in w)


def multidegree(w: Sequence[Letter]) -> tuple:
    """Sorted ``(letter, count)`` pairs."""
    counts: dict[Letter, int] = {}
    for l in w:
        counts[l] = counts.get(l, 0) + 1
    return tuple(sorted(counts.items()))


class Alphabet:
    """A finite, totally ordered set of letters (order = declaration order within a part)."""

    def __init__(self, letters: Sequence[Letter]):
        symbols = [l.symbol for l in letters]
        if len(set(symbols)) != len(symbols):
            raise ValueError("alphabet symbols must be pairwise distinct")
        self.letters = tuple(sorted(letters))
        self._by_symbol = {l.symbol: l for l in self.letters}

    @classmethod
    def build(cls, entries: Sequence[tuple[str, str, int] | str]) -> Alphabet:
        """Build from ``(symbol, part, degree)`` triples, or bare symbols (part W, degree 1)."""
        letters = []
        for i, item in enumerate(entries):
            if isinstance(item, str):
                item = (item, "W", 1)
            symbol, part, deg = item
            if part in ("V", "W") and deg != 1:
                raise ValueError("V- and W-letters have degree 1")
            letters.append(Letter((_PART_RANK[part], i), symbol, part, deg))
        return cls(letters)

    def __contains__(self, letter) -> bool:
        return isinstance(letter, Letter) and self._by_symbol.get(letter.symbol) == letter

    def resolve(self, symbol: str) -> Letter:
        try:
            return self._by_symbol[symbol]
        except KeyError:
            raise UnknownSymbol(symbol) from None

    def letters_up_to(self, max_degree: int) -> list[Letter]:
        return [l for l in self.letters if l.degree <= max_degree]

    def __repr__(self):
        return f"Alphabet({' '.join(l.symbol for l in self.letters)})"


class MixedAlphabet(Alphabet):
    """The letters of V followed by the letters of W, plus the derived U-alphabet."""

    def __init__(self, v: Sequence[str], w: Sequence[str]):
        v, w = list(v), list(w)
        overlap = set(v) & set(w)
        if overlap:
            raise ValueError(f"V and W share symbols: {sorted(overlap)}")
        for s in v + w:
            if not s.isidentifier():
                raise ValueError(f"generator symbol {s!r} is not an identifier")
        self.v_letters = tuple(Letter((0, i), s, "V") for i, s in enumerate(v))
        self.w_letters = tuple(Letter((1, i), s, "W") for i, s in enumerate(w))
        super().__init__(self.v_letters + self.w_letters)
        self.u = UAlphabet(self)

    def _ident(self):
        return (tuple(l.symbol for l in self.v_letters), tuple(l.symbol for l in self.w_letters))

    def __eq__(self, other):
        return isinstance(other, MixedAlphabet) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        v, w = self._ident()
        return f"MixedAlphabet(v={list(v)}, w={list(w)})"


class UAlphabet(Alphabet):
    """The infinite graded alphabet ``{u[alpha; v]}`` over a mixed alphabet.

    There are ``|V| * |W|**m`` letters of degree ``m + 1``; they are
    materialised per degree on request.
    """

    def __init__(self, base: MixedAlphabet):
        self.base = base
        self._cache: dict[tuple, Letter] = {}

    @property
    def letters(self):
        raise TypeError("the U-alphabet is infinite; use letters_up_to()")

    def __eq__(self, other):
        return isinstance(other, UAlphabet) and self.base == other.base

    def __hash__(self):
        return hash(("U", self.base))

    def symbol_for(self, alpha: Sequence[Letter], v: Letter) -> str:
        sep = "" if all(len(l.symbol) == 1 for l in self.base.w_letters) else "."
        inner = sep.join(l.symbol for l in alpha)
        if len(self.base.v_letters) > 1:
            inner += ";" + v.symbol
        return f"u[{inner}]"

    def letter(self, alpha: Sequence[Letter], v: Letter) -> Letter:
        alpha = tuple(alpha)
        if any(l not in self.base.w_letters for l in alpha):
            raise ValueError("U-letter subscripts must be W-words")
        if v not in self.base.v_letters:
            raise ValueError(f"{v!r} is not a V-letter")
        ck = (alpha, v)
        found = self._cache.get(ck)
        if found is None:
            key = (2, len(alpha) + 1, tuple(l.key for l in alpha), v.key)
            found = Letter(key, self.symbol_for(alpha, v), "U", len(alpha) + 1, alpha, v)
            found = self._cache.setdefault(ck, found)
        return found

    def __contains__(self, letter) -> bool:
        if not isinstance(letter, Letter) or letter.part != "U":
            return False
        try:
            return self.letter(letter.alpha, letter.v) == letter
        except ValueError:
            return False

    def letters_of_degree(self, d: int) -> list[Letter]:
        if d < 1:
            return []
        out = [self.letter(alpha, v)
               for alpha in itertools.product(self.base.w_letters, repeat=d - 1)
               for v in self.base.v_letters]
        return sorted(out)

    def letters_up_to(self, max_degree: int) -> list[Letter]:
        return [l for d in range(1, max_degree + 1) for l in self.letters_of_degree(d)]

    def resolve(self, symbol: str) -> Letter:
        if not (symbol.startswith("u[") and symbol.endswith("]")):
            raise UnknownSymbol(symbol)
        inner = symbol[2:-1]
        base = self.base
        if len(base.v_letters) > 1:
            if ";" not in inner:
                raise UnknownSymbol(symbol)
            inner, vsym = inner.rsplit(";", 1)
            v = base._by_symbol.get(vsym)
        elif base.v_letters:
            v = base.v_letters[0]
        else:
            v = None
        if v is None or v.part != "V":
            raise UnknownSymbol(symbol)
        if all(len(l.symbol) == 1 for l in base.w_letters):
            parts = list(inner)
        else:
            parts = inner.split(".") if inner else []
        alpha = []
        for p in parts:
            l = base._by_symbol.get(p)
            if l is None or l.part != "W":
                raise UnknownSymbol(symbol)
            alpha.append(l)
        return self.letter(alpha, v)

    def __repr__(self):
        return f"UAlphabet({self.base!r})"


# -- Lyndon words ------------------------------------------------------------

def is_lyndon(w: Sequence[Letter]) -> bool:
    """True iff ``w`` is strictly smaller than each of its proper rotations."""
    w = tuple(w)
    if not w:
        raise EmptyWord("the empty word is not a Lyndon word candidate")
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def _lyndon_dfs(letters: Sequence[Letter], max_degree: int) -> Iterator[tuple[tuple, int]]:
    # Fredricksen-Kessler-Maiorana style extension with a degree budget: a
    # prefix survives while it is a pre-necklace; it is Lyndon when its
    # period equals its length.
    letters = sorted(letters)
    stack: list[tuple[tuple, int, int]] = [((l,), 1, l.degree) for l in reversed(letters)
                                            if l.degree <= max_degree]
    while stack:
        w, p, deg = stack.pop()
        if p == len(w):
            yield w, deg
        children = []
        for l in letters:
            nd = deg + l.degree
            if nd > max_degree:
                continue
            ref = w[len(w) - p]
            if l < ref:
                continue
            children.append((w + (l,), p if l == ref else len(w) + 1, nd))
        stack.extend(reversed(children))


def lyndon_words(alphabet: Alphabet | Sequence[Letter], max_degree: int) -> list[tuple]:
    """All Lyndon words of total degree <= ``max_degree``, ordered by degree then lexicographically."""
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    letters = (alphabet.letters_up_to(max_degree) if isinstance(alphabet, Alphabet)
               else [l for l in alphabet if l.degree <= max_degree])
    found = list(_lyndon_dfs(letters, max_degree))
    found.sort(key=lambda item: (item[1], item[0]))
    return [w for w, _ in found]


def standard_factorization(w: Sequence[Letter]) -> tuple[tuple, tuple]:
    """Split a Lyndon word as ``u + v`` with ``v`` its longest proper Lyndon suffix."""
    w = tuple(w)
    if len(w) < 2 or not is_lyndon(w):
        raise NotFactorizable(word_str(w))
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable: every letter is Lyndon")


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def witt_dimension(k: int, n: int) -> int:
    """Number of Lyndon words of length ``n`` on ``k`` letters (necklace formula)."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    total = sum(_mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0)
    assert total % n == 0
    return total // n


def graded_lyndon_count(alphabet: Alphabet | Sequence[Letter], n: int) -> int:
    """Number of Lyndon words of total degree exactly ``n`` (letters may have degree > 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    letters = (alphabet.letters_up_to(n) if isinstance(alphabet, Alphabet)
               else [l for l in alphabet if l.degree <= n])
    return sum(1 for _, d in _lyndon_dfs(letters, n) if d == n)
