"""Seeded invariant suites, shared by the ``check`` command and the test-suite.

Each suite returns a list of :class:`CheckResult`.  Sizes are arguments so
the command line can run scaled-down versions; defaults are the full sizes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exact import LinComb, rank
from .free_lie import LiePolynomial, bracket, expand, is_primitive, lie_extract
from .tensor import (Tensor, adjoint_action, antipode, antipode_word, coproduct,
                     coproduct_at, counit)
from .words import Alphabet, Letter, MixedAlphabet, lyndon_words, witt_dimension
from . import elimination as el


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def _result(name: str, failures: list, total: int) -> CheckResult:
    if failures:
        return CheckResult(name, False, f"{len(failures)}/{total} failed, first: {failures[0]}")
    return CheckResult(name, True, f"{total} cases")


# -- random elements -----------------------------------------------------------------

def all_words(letters: Sequence[Letter], max_len: int, min_len: int = 0):
    for n in range(min_len, max_len + 1):
        yield from itertools.product(letters, repeat=n)


def random_coefficient(rng: random.Random) -> Fraction:
    num = rng.choice([-3, -2, -1, 1, 1, 2, 3])
    return Fraction(num, rng.choice([1, 1, 1, 2, 3]))


def random_word(rng: random.Random, letters: Sequence[Letter], max_len: int, min_len: int = 0) -> tuple:
    return tuple(rng.choice(letters) for _ in range(rng.randint(min_len, max_len)))


def random_tensor(rng: random.Random, alphabet: Alphabet, letters: Sequence[Letter], max_len: int,
                  n_terms: int = 3, min_len: int = 0) -> Tensor:
    return Tensor(alphabet, LinComb((random_word(rng, letters, max_len, min_len), random_coefficient(rng))
                                    for _ in range(rng.randint(1, n_terms))))


def random_lie(rng: random.Random, alphabet: Alphabet, basis: Sequence[tuple], n_terms: int = 3) -> LiePolynomial:
    return LiePolynomial(alphabet, LinComb((rng.choice(basis), random_coefficient(rng))
                                           for _ in range(rng.randint(1, n_terms))))


def random_smash(rng: random.Random, alphabet: MixedAlphabet, max_degree: int, n_terms: int = 3) -> el.SmashElement:
    """Random combination of (U-word, W-word) pairs of total degree <= max_degree."""
    terms = []
    for _ in range(rng.randint(1, n_terms)):
        budget = rng.randint(0, max_degree)
        uword = []
        while budget > 0 and alphabet.v_letters and rng.random() < 0.6:
            d = rng.randint(1, budget)
            uword.append(alphabet.u.letter(random_word(rng, alphabet.w_letters, d - 1, d - 1),
                                           rng.choice(alphabet.v_letters)))
            budget -= d
        wword = random_word(rng, alphabet.w_letters, budget, budget) if alphabet.w_letters else ()
        terms.append(((tuple(uword), wword), random_coefficient(rng)))
    return el.SmashElement(alphabet, LinComb(terms))


# -- helpers -------------------------------------------------------------------------

def _unit(alphabet):
    return Tensor.unit(alphabet)


def convolve_antipode(x: Tensor, side: str) -> Tensor:
    """``M (1 (x) S) Delta`` (side "right") or ``M (S (x) 1) Delta`` (side "left")."""
    d = coproduct(x)
    maps = [None, antipode_word] if side == "right" else [antipode_word, None]
    return d.apply(maps).multiply_out()


def sweedler(h: Tensor):
    """``(coefficient, h_(1), h_(2))`` triples of the coproduct of ``h``."""
    for (a, b), c in coproduct(h):
        yield c, Tensor.word(h.alphabet, a), Tensor.word(h.alphabet, b)


# -- suite 1: Hopf axioms ----------------------------------------------------------------

def suite_hopf(seed: int = 0, max_degree: int = 5, n_random: int = 200, n_v: int = 2, n_w: int = 2):
    rng = random.Random(seed)
    A = MixedAlphabet(el.default_symbols("v", n_v), el.default_symbols("s", n_w))
    letters = list(A.letters)
    one = _unit(A)
    ant_fail, coa_fail = [], []
    elements = [Tensor.word(A, w) for w in all_words(letters, max_degree)]
    n_basis = len(elements)
    elements += [random_tensor(rng, A, letters, max_degree, 4) for _ in range(n_random)]
    for x in elements:
        target = one.scale(counit(x))
        if not (convolve_antipode(x, "right") == target == convolve_antipode(x, "left")):
            ant_fail.append(repr(x))
        d = coproduct(x)
        if coproduct_at(d, 0) != coproduct_at(d, 1):
            coa_fail.append(repr(x))
    total = len(elements)
    out = [_result(f"antipode axiom (|V|=|W|=2, {n_basis} basis words + {n_random} random)", ant_fail, total),
           _result("coassociativity", coa_fail, total)]
    hom_fail, anti_fail = [], []
    for _ in range(n_random):
        x = random_tensor(rng, A, letters, max_degree // 2 + 1)
        y = random_tensor(rng, A, letters, max_degree // 2 + 1)
        if coproduct(x * y) != coproduct(x) * coproduct(y) or counit(x * y) != counit(x) * counit(y):
            hom_fail.append(f"{x!r}, {y!r}")
        if antipode(x * y) != antipode(y) * antipode(x):
            anti_fail.append(f"{x!r}, {y!r}")
    out.append(_result("coproduct and counit are algebra maps", hom_fail, n_random))
    out.append(_result("antipode is an antimorphism", anti_fail, n_random))
    return out


# -- suite 2: inverse identities -------------------------------------------------------------

def suite_inverses(seed: int = 0, triple_degree: int = 5, word_degree: int = 6, n_v: int = 2, n_w: int = 2):
    A = MixedAlphabet(el.default_symbols("v", n_v), el.default_symbols("s", n_w))
    W = A.w_letters
    fail_ji, fail_ij, count = [], [], 0
    for total in range(1, triple_degree + 1):
        for k in range(total):
            for h1 in itertools.product(W, repeat=k):
                for h2 in itertools.product(W, repeat=total - 1 - k):
                    for v in A.v_letters:
                        t = LinComb.basis((h1, v, h2))
                        count += 1
                        if el.j1_triples(el.i1_triples(t)) != t:
                            fail_ji.append(t)
                        if el.i1_triples(el.j1_triples(t)) != t:
                            fail_ij.append(t)
    out = [_result(f"j1 . i1 = 1 on triple basis (degree <= {triple_degree})", fail_ji, count),
           _result(f"i1 . j1 = 1 on triple basis (degree <= {triple_degree})", fail_ij, count)]
    fail_JI, fail_IJ, count = [], [], 0
    for w in all_words(list(A.letters), word_degree):
        x = Tensor.word(A, w)
        count += 1
        if el.map_J(el.map_I(x)) != x:
            fail_JI.append(w)
        if el.map_I(el.map_J(x)) != x:
            fail_IJ.append(w)
    out.append(_result(f"J . I = 1 on mixed words (degree <= {word_degree})", fail_JI, count))
    out.append(_result(f"I . J = 1 on mixed words (degree <= {word_degree})", fail_IJ, count))
    return out


# -- suite 3: module-algebra laws ---------------------------------------------------------------

def suite_module_algebra(seed: int = 0, max_degree: int = 4, n_random: int = 200, n_v: int = 2, n_w: int = 2):
    rng = random.Random(seed)
    A = MixedAlphabet(el.default_symbols("v", n_v), el.default_symbols("s", n_w))
    letters = list(A.letters)
    one = _unit(A)
    f_hcc, f_h1, f_hc, f_act = [], [], [], []
    for _ in range(n_random):
        h = random_tensor(rng, A, A.w_letters, max_degree)
        g = random_tensor(rng, A, A.w_letters, max_degree // 2)
        c1 = random_tensor(rng, A, letters, max_degree)
        c2 = random_tensor(rng, A, letters, max_degree)
        lhs = adjoint_action(h, c1 * c2)
        rhs = Tensor.zero(A)
        for c, a, b in sweedler(h):
            rhs = rhs + (adjoint_action(a, c1) * adjoint_action(b, c2)).scale(c)
        if lhs != rhs:
            f_hcc.append((h, c1, c2))
        if adjoint_action(h, one) != one.scale(counit(h)):
            f_h1.append(h)
        rhs = Tensor.zero(A)
        for c, a, b in sweedler(h):
            rhs = rhs + (adjoint_action(a, c1) * b).scale(c)
        if h * c1 != rhs:
            f_hc.append((h, c1))
        if adjoint_action(h * g, c1) != adjoint_action(h, adjoint_action(g, c1)):
            f_act.append((h, g, c1))
    return [_result(f"h.(c1 c2) = sum (h1.c1)(h2.c2) ({n_random} random)", f_hcc, n_random),
            _result("h.1 = eps(h) 1", f_h1, n_random),
            _result("h c = sum (h1.c) h2", f_hc, n_random),
            _result("(h g).c = h.(g.c)", f_act, n_random)]


# -- suite 4: smash coherence ------------------------------------------------------------------

def suite_smash(seed: int = 0, max_degree: int = 5, n_pairs: int = 100, n_triples: int = 50,
                n_v: int = 2, n_w: int = 2):
    rng = random.Random(seed)
    A = MixedAlphabet(el.default_symbols("v", n_v), el.default_symbols("s", n_w))
    letters = list(A.letters)
    half = max(1, max_degree // 2)
    f_round, f_round2, f_mul, f_mul2, f_stable = [], [], [], [], []
    for _ in range(n_pairs):
        x = random_tensor(rng, A, letters, max_degree, 4)
        if el.embed_smash(el.smash_normal_form(x)) != x:
            f_round.append(x)
        p = random_smash(rng, A, max_degree)
        if el.smash_normal_form(el.embed_smash(p)) != p:
            f_round2.append(p)
        p, q = random_smash(rng, A, half), random_smash(rng, A, max_degree - half)
        if el.embed_smash(p * q) != el.embed_smash(p) * el.embed_smash(q):
            f_mul.append((p, q))
        x, y = random_tensor(rng, A, letters, half), random_tensor(rng, A, letters, max_degree - half)
        if el.smash_normal_form(x * y) != el.smash_normal_form(x) * el.smash_normal_form(y):
            f_mul2.append((x, y))
        h = random_tensor(rng, A, A.w_letters, half)
        p = el.SmashElement(A, LinComb((k, c) for k, c in random_smash(rng, A, max_degree - half) if not k[1]))
        acted = el.smash_normal_form(adjoint_action(h, el.embed_smash(p)))
        if not acted.trailing_free() or acted != el.act_on_smash(h, p):
            f_stable.append((h, p))
    f_assoc = []
    third = max(1, max_degree // 3)
    for _ in range(n_triples):
        p, q, r = (random_smash(rng, A, third) for _ in range(3))
        if (p * q) * r != p * (q * r):
            f_assoc.append((p, q, r))
    return [_result(f"embed . normal_form = 1 (degree <= {max_degree})", f_round, n_pairs),
            _result("normal_form . embed = 1", f_round2, n_pairs),
            _result("embed(p # q) = embed(p) embed(q)", f_mul, n_pairs),
            _result("normal_form(x y) = normal_form(x) # normal_form(y)", f_mul2, n_pairs),
            _result("T(U) stable under the adjoint action", f_stable, n_pairs),
            _result("smash product associative", f_assoc, n_triples)]


# -- suite 5: dimension audit ------------------------------------------------------------------

def brute_lyndon_count(k: int, n: int) -> int:
    """Count length-``n`` words over ``range(k)`` strictly below all their rotations."""
    count = 0
    for w in itertools.product(range(k), repeat=n):
        if all(w < w[i:] + w[:i] for i in range(1, n)):
            count += 1
    return count


def suite_dimensions(seed: int = 0, max_degree: int = 8,
                     sizes: Sequence[tuple[int, int]] = ((1, 1), (1, 2), (2, 1))):
    out = []
    for nv, nw in sizes:
        rows = el.bigraded_dimension_audit(nv, nw, max_degree)
        bad = [r for r in rows if not r.equal]
        oracle = [brute_lyndon_count(nv + nw, r.degree) for r in rows]
        if [r.free_lie for r in rows] != oracle:
            bad.append(("brute force", oracle))
        out.append(_result(f"dim F(V+W)_n = dim F(W)_n + dim F(U)_n, |V|={nv} |W|={nw}, n <= {max_degree}",
                           bad, len(rows)))
    expected = [2, 1, 2, 3, 6, 9, 18, 30][:max_degree]
    got = [brute_lyndon_count(2, n) for n in range(1, max_degree + 1)]
    cols = el.bigraded_dimension_audit(1, 1, max_degree)
    ok = got == expected == [r.free_lie for r in cols] == [r.semidirect for r in cols]
    label = ",".join(map(str, expected))
    out.append(CheckResult(f"two-letter sequence {label} in both columns", ok, f"got {got}"))
    return out


# -- suite 6: constructive elimination ---------------------------------------------------------------

def suite_eliminate(seed: int = 0, max_degree: int = 6, n_random: int = 100,
                    sizes: Sequence[tuple[int, int]] = ((1, 1), (1, 2))):
    rng = random.Random(seed)
    out = []
    for nv, nw in sizes:
        A = MixedAlphabet(el.default_symbols("v", nv), el.default_symbols("s", nw))
        basis = lyndon_words(A, max_degree)
        fails = []
        for _ in range(n_random):
            x = random_lie(rng, A, basis, 4)
            try:
                x_u, x_w = el.eliminate_lie(x)
            except el.DecompositionFailure as e:
                fails.append(str(e))
                continue
            if el.embed_lie(x_u, A) + expand(x_w) != expand(x) or not x_w.alphabet == A:
                fails.append(repr(x))
            if any(l.part != "W" for w in x_w.body.terms for l in w):
                fails.append(f"x_W outside F(W) for {x!r}")
        out.append(_result(f"embed(x_U) + x_W = x, |V|={nv} |W|={nw}, degree <= {max_degree}", fails, n_random))
    A = MixedAlphabet(["v"], ["s"])
    v, s = A.v_letters[0], A.w_letters[0]
    x_u, x_w = el.eliminate_lie(LiePolynomial.lyndon(A, (v, s)))
    expected = LiePolynomial.generator(A.u, A.u.letter((s,), v), -1)
    out.append(CheckResult("[v,s] -> (-u[s], 0)", x_u == expected and not x_w, f"got ({x_u!r}, {x_w!r})"))
    return out


# -- suite 7: freeness ------------------------------------------------------------------------------

def suite_freeness(seed: int = 0, max_degree: int = 5,
                   sizes: Sequence[tuple[int, int]] = ((1, 1), (1, 2), (2, 1), (2, 2)), max_m: int = 4):
    out = []
    for nv, nw in sizes:
        A = MixedAlphabet(el.default_symbols("v", nv), el.default_symbols("s", nw))
        by_degree: dict[int, list] = {}
        for uw in el.u_monomials(A, max_degree):
            by_degree.setdefault(sum(l.degree for l in uw), []).append(uw)
        bad, total = [], 0
        for d, words in sorted(by_degree.items()):
            rows = [LinComb(el.embed_u_word(A, uw)) for uw in words]
            r = rank(rows)
            total += len(rows)
            if r != len(rows):
                bad.append(f"degree {d}: rank {r} < {len(rows)}")
        out.append(_result(f"U-monomial expansions independent, |V|={nv} |W|={nw}, degree <= {max_degree} "
                           f"({total} monomials)", bad, len(by_degree)))
        gens = el.free_generators(A, max_m + 1)
        counts = [sum(1 for g in gens if g.degree == m + 1) for m in range(max_m + 1)]
        expected = [nv * nw ** m for m in range(max_m + 1)]
        out.append(CheckResult(f"generator counts |V|*|W|^m, |V|={nv} |W|={nw}, m <= {max_m}",
                               counts == expected, f"got {counts}"))
    return out


# -- suite 8: free Lie kernel --------------------------------------------------------------------------

def suite_free_lie(seed: int = 0, max_degree: int = 6, n_random: int = 100, k: int = 3,
                   count_degree: int = 8):
    rng = random.Random(seed)
    A = Alphabet.build([chr(ord("a") + i) for i in range(k)])
    basis = lyndon_words(A, max_degree)
    fails = [w for w in basis if lie_extract(expand(LiePolynomial.lyndon(A, w))) != LiePolynomial.lyndon(A, w)]
    out = [_result(f"lie_extract . expand = 1 on Lyndon words (k={k}, degree <= {max_degree})", fails, len(basis))]
    small = lyndon_words(A, min(4, max_degree))
    upto5 = lyndon_words(A, min(5, max_degree))
    f_jac, f_anti, f_prim = [], [], []
    for _ in range(n_random):
        x, y, z = (random_lie(rng, A, small) for _ in range(3))
        jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        if jac:
            f_jac.append((x, y, z))
        if bracket(x, y) + bracket(y, x):
            f_anti.append((x, y))
        p = random_lie(rng, A, upto5)
        if not is_primitive(expand(p)):
            f_prim.append(p)
    out += [_result(f"Jacobi identity ({n_random} random triples)", f_jac, n_random),
            _result("antisymmetry", f_anti, n_random),
            _result("Lie elements are primitive", f_prim, n_random)]
    bad = []
    for kk in range(1, k + 1):
        B = Alphabet.build([chr(ord("a") + i) for i in range(kk)])
        words = lyndon_words(B, count_degree)
        for n in range(1, count_degree + 1):
            got = sum(1 for w in words if len(w) == n)
            if got != witt_dimension(kk, n):
                bad.append((kk, n, got))
    out.append(_result(f"Lyndon counts match the necklace formula (k <= {k}, n <= {count_degree})",
                       bad, k * count_degree))
    return out


SUITES: list[tuple[str, Callable]] = [
    ("hopf", suite_hopf),
    ("inverses", suite_inverses),
    ("module_algebra", suite_module_algebra),
    ("smash", suite_smash),
    ("dimensions", suite_dimensions),
    ("eliminate", suite_eliminate),
    ("freeness", suite_freeness),
    ("free_lie", suite_free_lie),
]


def run_all(seed: int, cap: int) -> list[CheckResult]:
    """All suites with every degree bound clipped to ``cap``."""
    out = []
    out += suite_hopf(seed, max_degree=min(5, cap))
    out += suite_inverses(seed, triple_degree=min(5, cap), word_degree=min(6, cap))
    out += suite_module_algebra(seed, max_degree=min(4, cap))
    out += suite_smash(seed, max_degree=min(5, cap))
    out += suite_dimensions(seed, max_degree=min(8, cap))
    out += suite_eliminate(seed, max_degree=min(6, cap))
    out += suite_freeness(seed, max_degree=min(5, cap), max_m=min(4, cap - 1))
    out += suite_free_lie(seed, max_degree=min(6, cap), count_degree=min(8, cap))
    return out
