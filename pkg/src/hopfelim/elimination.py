"""Elimination in ``T(V + W)``: the free algebra generated by ``H = T(W)`` and ``V``.

A mixed word ``h1 v1 h2 v2 ... hn vn h(n+1)`` (``hj`` maximal W-blocks,
possibly empty) is read as the basis tensor
``h1 (x) v1 (x) h2 (x) ... (x) vn (x) h(n+1)`` of the n-th graded piece, so
a single word type serves both pictures.

``map_I`` sends that tensor to ``(h1 . v1)(h2 . v2)...(hn . vn) h(n+1)``
where ``.`` is the adjoint action; ``map_J`` is its inverse.  The U-letter
``u[alpha; v]`` stands for ``alpha . v``; these letters freely generate the
ideal generated by ``V``, and every element of ``T(V + W)`` has unique
coordinates on ``(U-word) * (W-word)``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Accumulator, LinComb, format_rational
from .free_lie import LiePolynomial, NotALieElement, expand, lie_extract
from .tensor import (Tensor, _check_same, _coproduct_word, _Element, _word_text, adjoint_action,
                     format_terms, require_parts)
from .words import Letter, MixedAlphabet, UAlphabet, graded_lyndon_count, witt_dimension


class DecompositionFailure(RuntimeError):
    """An internal consistency check of the elimination failed (a bug, not a user error)."""


def _mixed(alphabet) -> MixedAlphabet:
    if not isinstance(alphabet, MixedAlphabet):
        raise TypeError(f"expected a MixedAlphabet, got {alphabet!r}")
    return alphabet


def blocks(w: Sequence[Letter]) -> tuple[list[tuple[tuple, Letter]], tuple]:
    """Split a mixed word into ``[(h1, v1), ..., (hn, vn)]`` and the trailing W-block."""
    out = []
    start = 0
    for i, l in enumerate(w):
        if l.part == "V":
            out.append((tuple(w[start:i]), l))
            start = i + 1
    return out, tuple(w[start:])


def v_count(w: Sequence[Letter]) -> int:
    return sum(1 for l in w if l.part == "V")


def graded_component(x: Tensor, n: int) -> Tensor:
    """The part of ``x`` made of words with exactly ``n`` V-letters."""
    return Tensor(x.alphabet, LinComb._wrap({w: c for w, c in x.body.terms.items() if v_count(w) == n}))


def _as_letter(alphabet: MixedAlphabet, v) -> Letter:
    if isinstance(v, str):
        v = alphabet.resolve(v)
    if v not in alphabet.v_letters:
        raise ValueError(f"{v!r} is not a V-letter of {alphabet!r}")
    return v


def _adjoint_on_word(h: tuple, v: Letter) -> dict:
    # h . v for a W-word h, as {word: int}
    out: dict = {}
    for (a, b), m in _coproduct_word(h).items():
        key = a + (v,) + b[::-1]
        out[key] = out.get(key, 0) + (-m if len(b) % 2 else m)
    return out


# -- the maps i, i1, j1 ----------------------------------------------------------

def map_i(h: Tensor, v) -> Tensor:
    """``h (x) v -> sum h_(1) v S(h_(2))``; equals the adjoint action of ``h`` on ``v``."""
    alphabet = _mixed(h.alphabet)
    v = _as_letter(alphabet, v)
    require_parts(h, ("W",))
    return adjoint_action(h, Tensor.word(alphabet, (v,)))


def triples(h1: Tensor, v, h2: Tensor) -> LinComb:
    """The element ``h1 (x) v (x) h2`` as a combination of ``(W-word, V-letter, W-word)`` keys."""
    alphabet = _mixed(h1.alphabet)
    _check_same(alphabet, h2.alphabet)
    v = _as_letter(alphabet, v)
    require_parts(h1, ("W",))
    require_parts(h2, ("W",))
    return LinComb([((a, v, b), ca * cb) for a, ca in h1.body.terms.items()
                    for b, cb in h2.body.terms.items()])


def triples_of(x: Tensor) -> LinComb:
    """Re-read an element of the degree-1 piece (one V-letter per word) as triples."""
    out = []
    for w, c in x.body.terms.items():
        bl, tail = blocks(w)
        if len(bl) != 1:
            raise ValueError(f"word {_word_text(w)} does not contain exactly one V-letter")
        (h, v), = bl
        out.append(((h, v, tail), c))
    return LinComb(out)


def tensor_of_triples(alphabet: MixedAlphabet, tr: LinComb) -> Tensor:
    return Tensor(alphabet, tr.map_keys(lambda k: k[0] + (k[1],) + k[2]))


def i1_triples(tr: LinComb) -> LinComb:
    """``h1 (x) v (x) h2 -> sum h1_(1) (x) v (x) S(h1_(2)) h2`` on a triple combination."""
    acc = Accumulator()
    for (h1, v, h2), c in tr.terms.items():
        for (a, b), m in _coproduct_word(h1).items():
            acc.add((a, v, b[::-1] + h2), -c * m if len(b) % 2 else c * m)
    return acc.result()


def j1_triples(tr: LinComb) -> LinComb:
    """``h1 (x) v (x) h2 -> sum h1_(1) (x) v (x) h1_(2) h2`` on a triple combination."""
    acc = Accumulator()
    for (h1, v, h2), c in tr.terms.items():
        for (a, b), m in _coproduct_word(h1).items():
            acc.add((a, v, b + h2), c * m)
    return acc.result()


def map_i1(h1: Tensor, v, h2: Tensor) -> Tensor:
    """``i1(h1 (x) v (x) h2) = sum h1_(1) v S(h1_(2)) h2``, multiplied out in ``T(V + W)``."""
    return tensor_of_triples(h1.alphabet, i1_triples(triples(h1, v, h2)))


def map_j1(h1: Tensor, v, h2: Tensor) -> LinComb:
    """``j1(h1 (x) v (x) h2) = sum h1_(1) (x) v (x) h1_(2) h2``, kept in triple form."""
    return j1_triples(triples(h1, v, h2))


# -- the graded automorphism and its inverse --------------------------------------

def _I_word(w: tuple) -> dict:
    bl, tail = blocks(w)
    current: dict = {(): 1}
    for h, v in bl:
        factor = _adjoint_on_word(h, v)
        nxt: dict = {}
        for p, c in current.items():
            for q, m in factor.items():
                nxt[p + q] = nxt.get(p + q, 0) + c * m
        current = nxt
    return {p + tail: c for p, c in current.items() if c}


def _J_word(w: tuple) -> dict:
    bl, tail = blocks(w)
    if not bl:
        return {w: 1}
    # state: (finished prefix, carried W-word still to be split)
    states: dict = {((), bl[0][0]): 1}
    for j, (_, v) in enumerate(bl):
        following = bl[j + 1][0] if j + 1 < len(bl) else tail
        nxt: dict = {}
        for (prefix, carry), c in states.items():
            for (a, b), m in _coproduct_word(carry).items():
                key = (prefix + a + (v,), b + following)
                nxt[key] = nxt.get(key, 0) + c * m
        states = nxt
    out: dict = {}
    for (prefix, carry), c in states.items():
        out[prefix + carry] = out.get(prefix + carry, 0) + c
    return out


def _apply_wordwise(x: Tensor, f) -> Tensor:
    acc = Accumulator()
    for w, c in x.body.terms.items():
        for word, m in f(w).items():
            acc.add(word, c * m)
    return Tensor(x.alphabet, acc.result())


def map_I(x: Tensor) -> Tensor:
    """The graded automorphism: ``h1 v1 ... hn vn h' -> (h1 . v1) ... (hn . vn) h'``."""
    _mixed(x.alphabet)
    return _apply_wordwise(x, _I_word)


def map_J(x: Tensor) -> Tensor:
    """Inverse of :func:`map_I`, obtained by applying ``j1`` block by block from the left."""
    _mixed(x.alphabet)
    return _apply_wordwise(x, _J_word)


# -- free generators ---------------------------------------------------------------

@dataclass(frozen=True)
class UGenerator:
    letter: Letter
    alpha: tuple
    v: Letter
    expansion: Tensor

    @property
    def degree(self) -> int:
        return len(self.alpha) + 1

    @property
    def symbol(self) -> str:
        return self.letter.symbol


@functools.lru_cache(maxsize=None)
def _u_expansion_body(alpha: tuple, v: Letter) -> LinComb:
    return LinComb(_adjoint_on_word(alpha, v))


def u_expansion(alphabet: MixedAlphabet, letter: Letter) -> Tensor:
    """``alpha . v`` in ``T(V + W)`` for the U-letter ``u[alpha; v]``."""
    if letter.part != "U":
        raise ValueError(f"{letter!r} is not a U-letter")
    return Tensor(alphabet, _u_expansion_body(letter.alpha, letter.v))


def free_generators(alphabet: MixedAlphabet, max_degree: int) -> list[UGenerator]:
    """All ``u[alpha; v]`` with ``len(alpha) + 1 <= max_degree``, in U-letter order."""
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    _mixed(alphabet)
    out = []
    for letter in alphabet.u.letters_up_to(max_degree):
        expansion = adjoint_action(Tensor.word(alphabet, letter.alpha), Tensor.word(alphabet, (letter.v,)))
        out.append(UGenerator(letter, letter.alpha, letter.v, expansion))
    return out


# -- smash product -------------------------------------------------------------------

class SmashElement(_Element):
    """Element of ``T(U) # T(W)``: a combination of ``(U-word, W-word)`` pairs.

    ``alphabet`` is the mixed alphabet; the U-letters come from ``alphabet.u``.
    ``p * q`` is the smash product.
    """

    __slots__ = ()

    @classmethod
    def pair(cls, alphabet: MixedAlphabet, uword: Sequence[Letter], wword: Sequence[Letter], c=1):
        uword, wword = tuple(uword), tuple(wword)
        if any(l.part != "U" for l in uword) or any(l.part != "W" for l in wword):
            raise ValueError("smash pairs are (U-word, W-word)")
        return cls(alphabet, LinComb.basis((uword, wword), c))

    @classmethod
    def unit(cls, alphabet: MixedAlphabet):
        return cls.pair(alphabet, (), ())

    def __mul__(self, other):
        if isinstance(other, SmashElement):
            return smash_multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def trailing_free(self) -> bool:
        """True when every term has an empty W-word, i.e. the element lies in ``T(U)``."""
        return all(not b for _, b in self.body.terms)

    def __repr__(self):
        return f"SmashElement({format_smash(self)})"


def smash_normal_form(x: Tensor) -> SmashElement:
    """Coordinates of ``x`` on the basis ``(U-word) * (W-word)``."""
    alphabet = _mixed(x.alphabet)
    ualph = alphabet.u
    acc = Accumulator()
    for w, c in map_J(x).body.terms.items():
        bl, tail = blocks(w)
        acc.add((tuple(ualph.letter(h, v) for h, v in bl), tail), c)
    return SmashElement(alphabet, acc.result())


def embed_u_word(alphabet: MixedAlphabet, uword: Sequence[Letter]) -> dict:
    """Product of the expansions of the letters of a U-word, as ``{mixed word: coefficient}``."""
    current: dict = {(): 1}
    for l in uword:
        factor = _u_expansion_body(l.alpha, l.v).terms
        nxt: dict = {}
        for p, c in current.items():
            for q, m in factor.items():
                nxt[p + q] = nxt.get(p + q, 0) + c * m
        current = nxt
    return current


def embed_smash(p: SmashElement) -> Tensor:
    """Multiply out: replace U-letters by their expansions and append the W-word."""
    acc = Accumulator()
    for (uword, wword), c in p.body.terms.items():
        for q, m in embed_u_word(p.alphabet, uword).items():
            acc.add(q + wword, c * m)
    return Tensor(p.alphabet, acc.result())


def embed_u_tensor(alphabet: MixedAlphabet, t: Tensor) -> Tensor:
    """Image in ``T(V + W)`` of an element of ``T(U)``."""
    if not isinstance(t.alphabet, UAlphabet) or t.alphabet.base != alphabet:
        raise ValueError("expected an element over the U-alphabet of this mixed alphabet")
    acc = Accumulator()
    for uword, c in t.body.terms.items():
        for q, m in embed_u_word(alphabet, uword).items():
            acc.add(q, c * m)
    return Tensor(alphabet, acc.result())


def act_on_u_word(ualph: UAlphabet, h: tuple, uword: tuple) -> dict:
    """Adjoint action of a W-word on a U-word.

    On a letter ``h . u[alpha; v] = u[h alpha; v]``; on products the
    coproduct of ``h`` distributes over the factors.
    """
    n = len(uword)
    if n == 0:
        return {(): 1} if not h else {}
    out: dict = {}
    for colouring in itertools.product(range(n), repeat=len(h)):
        parts: list[list] = [[] for _ in range(n)]
        for letter, slot in zip(h, colouring):
            parts[slot].append(letter)
        key = tuple(ualph.letter(tuple(parts[k]) + u.alpha, u.v) for k, u in enumerate(uword))
        out[key] = out.get(key, 0) + 1
    return out


def act_on_smash(h: Tensor, p: SmashElement) -> SmashElement:
    """Adjoint action of ``h`` in ``T(W)`` on an element of ``T(U)`` (trailing W-words must be empty)."""
    alphabet = _mixed(p.alphabet)
    require_parts(h, ("W",))
    if not p.trailing_free():
        raise ValueError("the action is defined here on T(U) only")
    acc = Accumulator()
    for hw, hc in h.body.terms.items():
        for (uword, _), c in p.body.terms.items():
            for key, m in act_on_u_word(alphabet.u, hw, uword).items():
                acc.add((key, ()), hc * c * m)
    return SmashElement(alphabet, acc.result())


def smash_multiply(p: SmashElement, q: SmashElement) -> SmashElement:
    """``(a1 # b1)(a2 # b2) = sum a1 (b1_(1) . a2) # b1_(2) b2``."""
    _check_same(p.alphabet, q.alphabet)
    ualph = p.alphabet.u
    acc = Accumulator()
    for (a1, b1), c1 in p.body.terms.items():
        split = _coproduct_word(b1)
        for (a2, b2), c2 in q.body.terms.items():
            c12 = c1 * c2
            for (x, y), m in split.items():
                for uw, k in act_on_u_word(ualph, x, a2).items():
                    acc.add((a1 + uw, y + b2), c12 * m * k)
    return SmashElement(p.alphabet, acc.result())


def format_smash(p: SmashElement) -> str:
    def text(key):
        uword, wword = key
        parts = [l.symbol for l in uword] + [l.symbol for l in wword]
        return "*".join(parts) if parts else "1"
    return format_terms((text(k), c) for k, c in p.body)


def smash_to_json(p: SmashElement) -> list[dict]:
    # U-symbols all start with "u[", so the split point is recoverable
    return [{"monomial": [l.symbol for l in a + b], "coefficient": format_rational(c)}
            for (a, b), c in p.body]


# -- Lie elimination ---------------------------------------------------------------

def substitute_v_zero(t: Tensor) -> Tensor:
    """The algebra map fixing W and killing V."""
    return Tensor(t.alphabet, LinComb._wrap({w: c for w, c in t.body.terms.items() if v_count(w) == 0}))


def eliminate_lie(x: LiePolynomial) -> tuple[LiePolynomial, LiePolynomial]:
    """Split ``x`` as ``embed(x_U) + x_W`` with ``x_U`` in ``F(U)`` and ``x_W`` in ``F(W)``."""
    alphabet = _mixed(x.alphabet)
    t = expand(x)
    tw = substitute_v_zero(t)
    try:
        x_w = lie_extract(tw)
    except NotALieElement as e:
        raise DecompositionFailure(f"V -> 0 image is not Lie: {e}") from e
    y = t - tw
    acc = Accumulator()
    for w, c in map_J(y).body.terms.items():
        bl, tail = blocks(w)
        if tail or not bl:
            raise DecompositionFailure(f"term {_word_text(w)} has a nonempty trailing W-block")
        acc.add(tuple(alphabet.u.letter(h, v) for h, v in bl), c)
    try:
        x_u = lie_extract(Tensor(alphabet.u, acc.result()))
    except NotALieElement as e:
        raise DecompositionFailure(f"ideal part is not Lie over U: {e}") from e
    return x_u, x_w


def embed_lie(x_u: LiePolynomial, alphabet: MixedAlphabet) -> Tensor:
    """Image of a Lie polynomial over U in ``T(V + W)``."""
    return embed_u_tensor(alphabet, expand(x_u))


# -- dimension audit -----------------------------------------------------------------

@dataclass(frozen=True)
class AuditRow:
    degree: int
    free_lie: int      # dim F(V + W)_n
    free_w: int        # dim F(W)_n
    free_u: int        # dim F(U)_n over the graded U-alphabet

    @property
    def semidirect(self) -> int:
        return self.free_w + self.free_u

    @property
    def equal(self) -> bool:
        return self.free_lie == self.semidirect


def default_symbols(prefix: str, n: int) -> list[str]:
    return [prefix] if n == 1 else [f"{prefix}{i}" for i in range(1, n + 1)]


def bigraded_dimension_audit(n_v: int, n_w: int, max_total_degree: int) -> list[AuditRow]:
    if n_v < 1 or n_w < 1 or max_total_degree < 1:
        raise ValueError("sizes and max_total_degree must be >= 1")
    alphabet = MixedAlphabet(default_symbols("v", n_v), default_symbols("s", n_w))
    rows = []
    for n in range(1, max_total_degree + 1):
        rows.append(AuditRow(n, witt_dimension(n_v + n_w, n), witt_dimension(n_w, n),
                             graded_lyndon_count(alphabet.u, n)))
    return rows


def u_monomials(alphabet: MixedAlphabet, max_degree: int) -> Iterable[tuple]:
    """All U-words of total degree between 1 and ``max_degree``."""
    letters = alphabet.u.letters_up_to(max_degree)
    stack: list[tuple[tuple, int]] = [((), 0)]
    while stack:
        w, d = stack.pop()
        if w:
            yield w
        for l in letters:
            if d + l.degree <= max_degree:
                stack.append((w + (l,), d + l.degree))
