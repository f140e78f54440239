"""The tensor algebra as a Hopf algebra with primitive generators.

Product is concatenation, the coproduct is the unshuffle (each letter is
primitive), the counit reads off the constant term and the antipode is
``S(l1...ln) = (-1)**n ln...l1``.  Sub-Hopf-algebras such as ``T(W)`` inside
``T(V + W)`` are just elements whose words avoid the other letters.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .exact import Accumulator, LinComb, as_rational, format_rational, lincomb_add, lincomb_scale
from .words import Alphabet, Letter, UnknownSymbol


class AlphabetMismatch(ValueError):
    pass


class NotInHopfSubalgebra(ValueError):
    pass


def _check_same(a: Alphabet, b: Alphabet) -> None:
    if a is not b and a != b:
        raise AlphabetMismatch(f"{a!r} vs {b!r}")


class _Element:
    """Shared linear structure: a LinComb plus the alphabet its keys live over."""

    __slots__ = ("alphabet", "body")

    def __init__(self, alphabet: Alphabet, body: LinComb | Iterable = ()):
        self.alphabet = alphabet
        self.body = body if isinstance(body, LinComb) else LinComb(body)

    def _new(self, body: LinComb):
        obj = type(self).__new__(type(self))
        obj.alphabet = self.alphabet
        obj.body = body
        self._copy_extra(obj)
        return obj

    def _copy_extra(self, obj) -> None:
        pass

    def __iter__(self):
        return iter(self.body)

    def __len__(self):
        return len(self.body)

    def __bool__(self):
        return bool(self.body)

    def coefficient(self, key) -> Fraction:
        return self.body.coefficient(key)

    def support(self) -> list:
        return self.body.support()

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.body
        if type(other) is not type(self):
            return NotImplemented
        return self.alphabet == other.alphabet and self.body == other.body

    def __hash__(self):
        return hash(self.body)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        _check_same(self.alphabet, other.alphabet)
        return self._new(lincomb_add(self.body, other.body))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        _check_same(self.alphabet, other.alphabet)
        return self._new(lincomb_add(self.body, -other.body))

    def __neg__(self):
        return self._new(-self.body)

    def scale(self, c):
        return self._new(lincomb_scale(c, self.body))

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented


class Tensor(_Element):
    """Element of the tensor algebra over ``alphabet``: a combination of words.

    ``x * y`` is the concatenation product, ``c * x`` scales by a rational.
    """

    __slots__ = ()

    @classmethod
    def word(cls, alphabet: Alphabet, w: Sequence[Letter], c=1) -> Tensor:
        return cls(alphabet, LinComb.basis(tuple(w), c))

    @classmethod
    def unit(cls, alphabet: Alphabet) -> Tensor:
        return cls.word(alphabet, ())

    @classmethod
    def zero(cls, alphabet: Alphabet) -> Tensor:
        return cls(alphabet, LinComb.zero())

    @classmethod
    def from_symbols(cls, alphabet: Alphabet, symbols: Sequence[str], c=1) -> Tensor:
        return cls.word(alphabet, [alphabet.resolve(s) for s in symbols], c)

    def __mul__(self, other):
        if isinstance(other, Tensor):
            return concat_product(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def letters_used(self) -> set:
        return {l for w in self.body.terms for l in w}

    def is_over(self, *parts: str) -> bool:
        return all(l.part in parts for w in self.body.terms for l in w)

    def homogeneous_part(self, d: int) -> Tensor:
        return self._new(LinComb._wrap({w: c for w, c in self.body.terms.items()
                                        if sum(l.degree for l in w) == d}))

    def __repr__(self):
        return f"Tensor({format_tensor(self)})"


class TensorPower(_Element):
    """Element of the ``k``-fold tensor power of the tensor algebra.

    Keys are ``k``-tuples of words; the product is slot-wise concatenation.
    The coproduct lands in ``TensorPower`` with ``k = 2``.
    """

    __slots__ = ("arity",)

    def __init__(self, alphabet: Alphabet, arity: int, body: LinComb | Iterable = ()):
        super().__init__(alphabet, body)
        self.arity = arity

    def _copy_extra(self, obj) -> None:
        obj.arity = self.arity

    def __eq__(self, other):
        res = super().__eq__(other)
        if res is True:
            return self.arity == other.arity or not self.body
        return res

    __hash__ = _Element.__hash__

    def __mul__(self, other):
        if isinstance(other, TensorPower):
            _check_same(self.alphabet, other.alphabet)
            if self.arity != other.arity:
                raise ValueError("tensor powers of different arity")
            acc = Accumulator()
            for k1, c1 in self.body.terms.items():
                for k2, c2 in other.body.terms.items():
                    acc.add(tuple(a + b for a, b in zip(k1, k2)), c1 * c2)
            return self._new(acc.result())
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    @classmethod
    def pure(cls, *factors: Tensor) -> TensorPower:
        """The tensor ``x1 (x) x2 (x) ...`` of tensor-algebra elements."""
        alphabet = factors[0].alphabet
        acc = Accumulator()
        for combo in itertools.product(*(f.body.terms.items() for f in factors)):
            c = 1
            for _, ci in combo:
                c *= ci
            acc.add(tuple(w for w, _ in combo), c)
        return cls(alphabet, len(factors), acc.result())

    def apply(self, slot_maps: Sequence[Callable[[tuple], LinComb] | None]) -> TensorPower:
        """Apply a linear map (given on basis words) to each slot; ``None`` is the identity."""
        acc = Accumulator()
        for key, c in self.body.terms.items():
            images = []
            for w, f in zip(key, slot_maps):
                images.append(((w, 1),) if f is None else tuple(f(w).terms.items()))
            for combo in itertools.product(*images):
                cc = c
                for _, ci in combo:
                    cc *= ci
                acc.add(tuple(wi for wi, _ in combo), cc)
        return self._new(acc.result())

    def multiply_out(self) -> Tensor:
        """The multiplication map ``M``: concatenate the slots."""
        acc = Accumulator()
        for key, c in self.body.terms.items():
            acc.add(tuple(itertools.chain.from_iterable(key)), c)
        return Tensor(self.alphabet, acc.result())

    def __repr__(self):
        parts = []
        for key, c in self.body:
            parts.append(f"{format_rational(c)}*" + " (x) ".join(_word_text(w) for w in key))
        return f"TensorPower({' + '.join(parts) or '0'})"


TensorPair = TensorPower


# -- Hopf structure ------------------------------------------------------------

def concat_product(x: Tensor, y: Tensor) -> Tensor:
    _check_same(x.alphabet, y.alphabet)
    acc = Accumulator()
    for w1, c1 in x.body.terms.items():
        for w2, c2 in y.body.terms.items():
            acc.add(w1 + w2, c1 * c2)
    return Tensor(x.alphabet, acc.result())


def unshuffles(w: tuple, slots: int = 2) -> Iterator[tuple]:
    """All ways of distributing the letters of ``w`` into ``slots`` order-preserving subwords."""
    for colouring in itertools.product(range(slots), repeat=len(w)):
        parts = [[] for _ in range(slots)]
        for letter, c in zip(w, colouring):
            parts[c].append(letter)
        yield tuple(tuple(p) for p in parts)


def _coproduct_word(w: tuple) -> dict:
    # letter-by-letter product of (l (x) 1 + 1 (x) l)
    current = {((), ()): 1}
    for l in w:
        nxt: dict = {}
        for (a, b), c in current.items():
            k1 = (a + (l,), b)
            k2 = (a, b + (l,))
            nxt[k1] = nxt.get(k1, 0) + c
            nxt[k2] = nxt.get(k2, 0) + c
        current = nxt
    return current


def coproduct_word(w: tuple) -> LinComb:
    """The coproduct of a single word, as a combination of word pairs."""
    return LinComb(_coproduct_word(tuple(w)))


def coproduct(x: Tensor) -> TensorPair:
    acc = Accumulator()
    for w, c in x.body.terms.items():
        for pair, m in _coproduct_word(w).items():
            acc.add(pair, c * m)
    return TensorPower(x.alphabet, 2, acc.result())


def counit(x: Tensor) -> Fraction:
    return x.body.coefficient(())


def antipode_word(w: tuple) -> LinComb:
    return LinComb._wrap({w[::-1]: Fraction(-1 if len(w) % 2 else 1)})


def antipode(x: Tensor) -> Tensor:
    acc = Accumulator()
    for w, c in x.body.terms.items():
        acc.add(w[::-1], -c if len(w) % 2 else c)
    return Tensor(x.alphabet, acc.result())


def n_fold_diagonal(x: Tensor, n: int) -> TensorPower:
    """The ``n``-fold diagonal: ``(Delta (x) 1 (x) ... (x) 1)`` iterated ``n`` times."""
    if n < 1:
        raise ValueError("n must be >= 1")
    result = coproduct(x)
    for _ in range(n - 1):
        result = coproduct_at(result, 0)
    return result


def coproduct_at(p: TensorPower, slot: int) -> TensorPower:
    """Apply the coproduct to one slot, raising the arity by one."""
    acc = Accumulator()
    for key, c in p.body.terms.items():
        for (a, b), m in _coproduct_word(key[slot]).items():
            acc.add(key[:slot] + (a, b) + key[slot + 1:], c * m)
    return TensorPower(p.alphabet, p.arity + 1, acc.result())


def counit_at(p: TensorPower, slot: int) -> TensorPower | Tensor:
    """Apply the counit to one slot (slot dropped); arity 1 results are returned as Tensor."""
    acc = Accumulator()
    for key, c in p.body.terms.items():
        if not key[slot]:
            acc.add(key[:slot] + key[slot + 1:], c)
    body = acc.result()
    if p.arity == 2:
        return Tensor(p.alphabet, body.map_keys(lambda k: k[0]))
    return TensorPower(p.alphabet, p.arity - 1, body)


def require_parts(h: Tensor, parts: Sequence[str]) -> None:
    for w in h.body.terms:
        for l in w:
            if l.part not in parts:
                raise NotInHopfSubalgebra(
                    f"letter {l.symbol!r} (part {l.part}) in {format_tensor(h)}")


def adjoint_action(h: Tensor, c: Tensor) -> Tensor:
    """``h . c = sum h_(1) c S(h_(2))`` for ``h`` in the Hopf subalgebra ``T(W)``."""
    _check_same(h.alphabet, c.alphabet)
    require_parts(h, ("W",))
    acc = Accumulator()
    for hw, hc in h.body.terms.items():
        for (a, b), m in _coproduct_word(hw).items():
            sb = b[::-1]
            sign = -1 if len(b) % 2 else 1
            left = hc * m * sign
            for cw, cc in c.body.terms.items():
                acc.add(a + cw + sb, left * cc)
    return Tensor(c.alphabet, acc.result())


# -- rendering -----------------------------------------------------------------

def _word_text(w: Sequence[Letter]) -> str:
    return "*".join(l.symbol for l in w) if w else "1"


def format_terms(items: Iterable[tuple[str, Fraction]]) -> str:
    """Join ``(monomial_text, coefficient)`` pairs as ``2*s*v - v*s``; empty -> ``0``."""
    out = []
    for text, c in items:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if text == "1":
            body = format_rational(mag)
        elif mag == 1:
            body = text
        else:
            body = f"{format_rational(mag)}*{text}"
        out.append((sign, body))
    if not out:
        return "0"
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def format_tensor(x: Tensor) -> str:
    return format_terms((_word_text(w), c) for w, c in x.body)


def tensor_to_json(x: _Element) -> list[dict]:
    return [{"monomial": [l.symbol for l in w], "coefficient": format_rational(c)} for w, c in x.body]


def tensor_from_json(alphabet: Alphabet, data: list[dict]) -> Tensor:
    terms = []
    for item in data:
        try:
            w = tuple(alphabet.resolve(s) for s in item["monomial"])
        except UnknownSymbol as e:
            raise ValueError(f"unknown symbol {e.args[0]!r}") from None
        terms.append((w, as_rational(item["coefficient"])))
    return Tensor(alphabet, LinComb(terms))
