import itertools
import random
from fractions import Fraction

import pytest

from hopfelim.exact import LinComb, rank
from hopfelim.elimination import (DecompositionFailure, SmashElement, act_on_smash, bigraded_dimension_audit, blocks,
                                  eliminate_lie, embed_lie, embed_smash, free_generators, graded_component, i1_triples,
                                  j1_triples, map_I, map_i, map_i1, map_J, map_j1, smash_multiply, smash_normal_form,
                                  triples, triples_of, u_expansion, u_monomials)
from hopfelim.free_lie import LiePolynomial, bracket, expand, lie_extract
from hopfelim.tensor import NotInHopfSubalgebra, Tensor, adjoint_action
from hopfelim.words import MixedAlphabet, lyndon_words, witt_dimension

from conftest import all_words, tensor, word

V2W2 = MixedAlphabet(["v", "x"], ["s", "t"])


def subset_coproduct(w):
    n = len(w)
    for mask in range(2 ** n):
        yield (tuple(w[i] for i in range(n) if mask >> i & 1),
               tuple(w[i] for i in range(n) if not mask >> i & 1))


def slots_of(w):
    bl, tail = blocks(w)
    out = []
    for h, v in bl:
        out += [h, v]
    return tuple(out + [tail]), len(bl)


def flatten(slots):
    # even slots hold W-words, odd slots single V-letters
    return tuple(itertools.chain.from_iterable(x if k % 2 == 0 else (x,) for k, x in enumerate(slots)))


def literal_i(w):
    # i_n as the composite of i_1 applied to the last triple first, then leftwards
    slots, n = slots_of(w)
    state = {slots: 1}
    for k in reversed(range(n)):
        nxt = {}
        for s, c in state.items():
            h, v, h2 = s[2 * k], s[2 * k + 1], s[2 * k + 2]
            for a, b in subset_coproduct(h):
                key = s[:2 * k] + (a, v, b[::-1] + h2) + s[2 * k + 3:]
                nxt[key] = nxt.get(key, 0) + (-c if len(b) % 2 else c)
        state = nxt
    out = {}
    for s, c in state.items():
        flat = flatten(s)
        out[flat] = out.get(flat, 0) + c
    return LinComb(out)


def literal_j(w):
    # j_n as the composite of j_1 applied to the first triple first, then rightwards
    slots, n = slots_of(w)
    state = {slots: 1}
    for k in range(n):
        nxt = {}
        for s, c in state.items():
            h, v, h2 = s[2 * k], s[2 * k + 1], s[2 * k + 2]
            for a, b in subset_coproduct(h):
                key = s[:2 * k] + (a, v, b + h2) + s[2 * k + 3:]
                nxt[key] = nxt.get(key, 0) + c
        state = nxt
    out = {}
    for s, c in state.items():
        flat = flatten(s)
        out[flat] = out.get(flat, 0) + c
    return LinComb(out)


def trip(alphabet, h1, v, h2):
    return (word(alphabet, h1), alphabet.resolve(v), word(alphabet, h2))


# -- i, i1, j1 ---------------------------------------------------------------------------------

def test_map_i_examples(vs):
    one = Tensor.unit(vs)
    assert map_i(one, "v") == tensor(vs, ("v", 1))
    assert map_i(tensor(vs, ("s", 1)), "v") == tensor(vs, ("sv", 1), ("vs", -1))
    assert map_i(tensor(vs, ("ss", 1)), "v") == tensor(vs, ("ssv", 1), ("svs", -2), ("vss", 1))
    with pytest.raises(NotInHopfSubalgebra):
        map_i(tensor(vs, ("v", 1)), "v")
    with pytest.raises(ValueError):
        map_i(one, "s")


def test_map_i_is_a_module_map(vst):
    rng = random.Random(5)
    w_letters = vst.w_letters
    for _ in range(40):
        h = Tensor.word(vst, tuple(rng.choice(w_letters) for _ in range(rng.randint(0, 3))))
        g = Tensor.word(vst, tuple(rng.choice(w_letters) for _ in range(rng.randint(0, 3))))
        assert map_i(h * g, "v") == adjoint_action(h, map_i(g, "v"))


def test_map_i_has_counit_left_inverse(vst):
    # (1 (x) 1 (x) eps) applied to the triple form of i(h (x) v) gives back h (x) v
    for h in all_words(vst.w_letters, 4):
        tr = triples_of(map_i(Tensor.word(vst, h), "v"))
        kept = LinComb([((a, v), c) for (a, v, b), c in tr if not b])
        assert kept == LinComb({(h, vst.resolve("v")): 1})


def test_map_i1_examples(vs):
    one, s, ss = Tensor.unit(vs), tensor(vs, ("s", 1)), tensor(vs, ("ss", 1))
    assert map_i1(one, "v", ss) == tensor(vs, ("vss", 1))
    assert map_i1(s, "v", one) == tensor(vs, ("sv", 1), ("vs", -1))
    assert map_i1(s, "v", s) == tensor(vs, ("svs", 1), ("vss", -1))


def test_map_i1_is_i_then_multiplication(vst):
    for h1 in all_words(vst.w_letters, 3):
        for h2 in all_words(vst.w_letters, 2):
            x, y = Tensor.word(vst, h1), Tensor.word(vst, h2)
            assert map_i1(x, "v", y) == map_i(x, "v") * y


def test_map_j1_examples(vs):
    one, s = Tensor.unit(vs), tensor(vs, ("s", 1))
    assert map_j1(one, "v", s) == LinComb({trip(vs, "", "v", "s"): 1})
    assert map_j1(s, "v", one) == LinComb({trip(vs, "s", "v", ""): 1, trip(vs, "", "v", "s"): 1})
    assert j1_triples(triples_of(map_i1(s, "v", one))) == triples(s, "v", one)


def test_i1_j1_mutually_inverse_on_triple_basis():
    letters = V2W2.w_letters
    for v in V2W2.v_letters:
        for h1 in all_words(letters, 4):
            for h2 in all_words(letters, 4 - len(h1)):
                t = LinComb({(h1, v, h2): 1})
                assert j1_triples(i1_triples(t)) == t
                assert i1_triples(j1_triples(t)) == t


# -- the automorphism and its inverse ----------------------------------------------------------------------

def test_map_I_examples():
    m = MixedAlphabet(["v1", "v2"], ["s"])
    s = tensor(m, (["s"], 1))
    assert map_I(s) == s
    assert map_I(tensor(m, (["s", "v1"], 1))) == tensor(m, (["s", "v1"], 1), (["v1", "s"], -1))
    got = map_I(tensor(m, (["s", "v1", "s", "v2", "s"], 1)))
    a = tensor(m, (["s", "v1"], 1), (["v1", "s"], -1))
    b = tensor(m, (["s", "v2"], 1), (["v2", "s"], -1))
    assert got == a * b * s


def test_map_J_examples(vs):
    assert map_J(tensor(vs, ("s", 1))) == tensor(vs, ("s", 1))
    assert map_J(tensor(vs, ("sv", 1), ("vs", -1))) == tensor(vs, ("sv", 1))


def test_map_I_matches_literal_composition():
    for w in all_words(V2W2.letters, 6):
        n = sum(1 for l in w if l.part == "V")
        if n in (2, 3):
            x = Tensor.word(V2W2, w)
            assert map_I(x).body == literal_i(w)
            assert map_J(x).body == literal_j(w)


def test_I_and_J_inverse_and_grading_preserving():
    for w in all_words(V2W2.letters, 5):
        x = Tensor.word(V2W2, w)
        y = map_I(x)
        n = sum(1 for l in w if l.part == "V")
        assert graded_component(y, n) == y
        assert map_J(y) == x
        assert map_I(map_J(x)) == x


# -- free generators and the smash product -------------------------------------------------------

def test_free_generators_examples(vs, vst):
    gens = free_generators(vs, 3)
    assert [g.symbol for g in gens] == ["u[]", "u[s]", "u[ss]"]
    assert [g.expansion for g in gens] == [
        tensor(vs, ("v", 1)),
        tensor(vs, ("sv", 1), ("vs", -1)),
        tensor(vs, ("ssv", 1), ("svs", -2), ("vss", 1)),
    ]
    assert [g.symbol for g in free_generators(vst, 2) if g.degree == 2] == ["u[s]", "u[t]"]
    assert [g.expansion for g in free_generators(V2W2, 1)] == [tensor(V2W2, ("v", 1)), tensor(V2W2, ("x", 1))]
    with pytest.raises(ValueError):
        free_generators(vs, 0)


def test_generator_expansions_are_lie_with_one_v_letter():
    for g in free_generators(V2W2, 4):
        lie_extract(g.expansion)
        assert all(sum(1 for l in w if l.part == "V") == 1 for w in g.expansion.body.terms)
        assert g.expansion == u_expansion(V2W2, g.letter)


def test_generator_counts():
    for nv, nw in [(1, 1), (1, 2), (2, 1), (2, 3)]:
        m = MixedAlphabet([f"v{i}" for i in range(nv)], [f"s{i}" for i in range(nw)])
        gens = free_generators(m, 5)
        for d in range(1, 6):
            assert sum(1 for g in gens if g.degree == d) == nv * nw ** (d - 1)


def test_smash_normal_form_examples(vs):
    u = vs.u
    assert smash_normal_form(tensor(vs, ("s", 1))) == SmashElement.pair(vs, (), word(vs, "s"))
    assert smash_normal_form(tensor(vs, ("sv", 1))) == (
        SmashElement.pair(vs, [u.resolve("u[s]")], ()) + SmashElement.pair(vs, [u.resolve("u[]")], word(vs, "s")))
    assert smash_normal_form(tensor(vs, ("v", 1))) == SmashElement.pair(vs, [u.resolve("u[]")], ())


def test_embed_smash_examples(vs):
    u = vs.u
    assert embed_smash(SmashElement.pair(vs, [u.resolve("u[s]")], ())) == tensor(vs, ("sv", 1), ("vs", -1))
    assert embed_smash(SmashElement.pair(vs, (), word(vs, "ss"))) == tensor(vs, ("ss", 1))


def test_normal_form_round_trip_on_basis(vst):
    for w in all_words(vst.letters, 5):
        x = Tensor.word(vst, w)
        assert embed_smash(smash_normal_form(x)) == x


def test_smash_multiply_examples(vs):
    u = vs.u
    e = SmashElement.pair(vs, [u.resolve("u[]")], ())
    s = SmashElement.pair(vs, (), word(vs, "s"))
    one = SmashElement.unit(vs)
    p = e + SmashElement.pair(vs, [u.resolve("u[s]")], word(vs, "s"), Fraction(2, 3))
    assert one * p == p and p * one == p
    assert s * e == SmashElement.pair(vs, [u.resolve("u[s]")], ()) + SmashElement.pair(vs, [u.resolve("u[]")],
                                                                                         word(vs, "s"))
    assert e * e == SmashElement.pair(vs, [u.resolve("u[]"), u.resolve("u[]")], ())


def test_smash_product_transports_concatenation(vst):
    rng = random.Random(11)
    words = list(all_words(vst.letters, 3))
    for _ in range(60):
        x = Tensor.word(vst, rng.choice(words))
        y = Tensor.word(vst, rng.choice(words))
        p, q = smash_normal_form(x), smash_normal_form(y)
        assert embed_smash(smash_multiply(p, q)) == x * y
        assert smash_normal_form(x * y) == p * q


def test_tu_stable_under_adjoint_action(vst):
    u = vst.u
    p = SmashElement.pair(vst, [u.resolve("u[s]"), u.resolve("u[t]")], ()) + \
        SmashElement.pair(vst, [u.resolve("u[]")], (), 3)
    for h in all_words(vst.w_letters, 3):
        ht = Tensor.word(vst, h)
        image = adjoint_action(ht, embed_smash(p))
        nf = smash_normal_form(image)
        assert nf.trailing_free()
        assert nf == act_on_smash(ht, p)


def test_u_monomials_are_independent(vst):
    monos = list(u_monomials(vst, 4))
    rows = [embed_smash(SmashElement.pair(vst, m, ())).body for m in monos]
    assert rank(rows) == len(monos)


# -- Lie elimination -----------------------------------------------------------------------------

def lie_of(alphabet, text):
    from hopfelim.parsing import parse, to_lie
    return to_lie(parse(text, alphabet), alphabet)


def test_eliminate_examples(vs):
    s = lie_of(vs, "s")
    x_u, x_w = eliminate_lie(s)
    assert x_u == LiePolynomial.zero(vs.u) and x_w == s

    x_u, x_w = eliminate_lie(lie_of(vs, "[v,s]"))
    assert x_u == LiePolynomial.generator(vs.u, "u[s]", -1)
    assert x_w == LiePolynomial.zero(vs)

    x = lie_of(vs, "[[v,s],v]")
    x_u, x_w = eliminate_lie(x)
    us, ue = LiePolynomial.generator(vs.u, "u[s]"), LiePolynomial.generator(vs.u, "u[]")
    assert x_u == -bracket(us, ue)
    assert x_w == LiePolynomial.zero(vs)
    assert embed_lie(x_u, vs) == expand(x)


def test_eliminate_round_trip_on_lyndon_basis(vst):
    for w in lyndon_words(vst, 5):
        x = LiePolynomial.lyndon(vst, w, 2)
        x_u, x_w = eliminate_lie(x)
        assert embed_lie(x_u, vst) + expand(x_w) == expand(x)
        assert all(l.part == "W" for t in x_w.body.terms for l in t)


def test_decomposition_failure_is_runtime_error():
    assert issubclass(DecompositionFailure, RuntimeError)


# -- the dimension audit -----------------------------------------------------------------------------

def test_audit_examples():
    rows = bigraded_dimension_audit(1, 1, 8)
    assert [r.free_lie for r in rows] == [2, 1, 2, 3, 6, 9, 18, 30]
    assert [r.semidirect for r in rows] == [2, 1, 2, 3, 6, 9, 18, 30]
    assert (rows[1].free_w, rows[1].free_u) == (0, 1)
    assert (rows[2].free_w, rows[2].free_u) == (0, 2)
    for nv, nw in [(1, 2), (2, 1), (2, 2)]:
        rows = bigraded_dimension_audit(nv, nw, 7)
        assert rows[0].free_lie == nv + nw == rows[0].free_w + rows[0].free_u
        assert all(r.equal for r in rows)
        assert [r.free_lie for r in rows] == [witt_dimension(nv + nw, n) for n in range(1, 8)]
    with pytest.raises(ValueError):
        bigraded_dimension_audit(0, 1, 3)


# -- degenerate alphabets --------------------------------------------------------------------------

def test_empty_v():
    m = MixedAlphabet([], ["s", "t"])
    x = tensor(m, ("st", 2), ("t", -1))
    assert map_I(x) == x and map_J(x) == x
    assert smash_normal_form(x) == SmashElement(m, LinComb([(((), word(m, "st")), 2), (((), word(m, "t")), -1)]))
    assert free_generators(m, 3) == []
    y = lie_of(m, "[s,t]")
    x_u, x_w = eliminate_lie(y)
    assert x_u == LiePolynomial.zero(m.u) and x_w == y


def test_empty_w():
    m = MixedAlphabet(["v", "x"], [])
    x = tensor(m, ("vx", 2), ("xv", -1))
    assert map_I(x) == x and map_J(x) == x
    assert [g.symbol for g in free_generators(m, 4)] == ["u[;v]", "u[;x]"]
    y = lie_of(m, "[v,[v,x]]")
    x_u, x_w = eliminate_lie(y)
    assert x_w == LiePolynomial.zero(m)
    assert [len(w) for w in x_u.body.terms] == [3]
    assert embed_lie(x_u, m) == expand(y)
