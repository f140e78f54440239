from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfelim.exact import Accumulator, LinComb, as_rational, format_rational, lincomb_add, lincomb_scale, rank

fractions = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)
keys = st.sampled_from("abcde")
combos = st.dictionaries(keys, fractions, max_size=5).map(LinComb)


def oracle_add(x, y):
    # plain dict arithmetic, zeros removed afterwards
    out = {k: Fraction(0) for k in set(x.terms) | set(y.terms)}
    for k, c in x.terms.items():
        out[k] += c
    for k, c in y.terms.items():
        out[k] += c
    return {k: c for k, c in out.items() if c != 0}


def test_add_examples():
    assert lincomb_add(LinComb({"a": 1}), LinComb({"a": -1})) == LinComb()
    assert lincomb_add(LinComb({"a": Fraction(1, 2)}), LinComb({"b": 1})).terms == {"a": Fraction(1, 2), "b": 1}
    assert lincomb_add(LinComb({"a": Fraction(1, 3)}), LinComb({"a": Fraction(1, 6)})).terms == {"a": Fraction(1, 2)}


def test_scale_examples():
    assert lincomb_scale(0, LinComb({"a": 5})) == LinComb()
    x = LinComb({"a": 2, "b": Fraction(-1, 7)})
    assert lincomb_scale(1, x) == x
    assert lincomb_scale(Fraction(2, 3), LinComb({"a": Fraction(3, 4)})).terms == {"a": Fraction(1, 2)}


def test_zero_coefficients_never_stored():
    x = LinComb([("a", 1), ("b", 0), ("a", -1), ("c", 2)])
    assert x.terms == {"c": 2}
    assert len(LinComb({"a": 0})) == 0
    assert LinComb() == 0


def test_iteration_in_key_order():
    x = LinComb({"c": 1, "a": 2, "b": 3})
    assert [k for k, _ in x] == ["a", "b", "c"]


def test_rationals_are_reduced_and_zero_unique():
    assert format_rational(Fraction(4, 6)) == "2/3"
    assert format_rational(Fraction(-6, 3)) == "-2"
    assert format_rational(Fraction(0, 5)) == "0"
    assert as_rational("-3/9") == Fraction(-1, 3)
    with pytest.raises(TypeError):
        as_rational(0.5)


@given(combos, combos)
def test_add_matches_dict_oracle(x, y):
    assert (x + y).terms == oracle_add(x, y)


@given(combos, combos, combos)
def test_add_associative_and_commutative(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x


@given(combos)
def test_additive_identity_and_inverse(x):
    assert x + LinComb() == x
    assert x - x == LinComb()
    assert x + (-x) == 0


@given(fractions, fractions, combos, combos)
def test_scalar_distributivity(a, b, x, y):
    assert lincomb_scale(a, x + y) == lincomb_scale(a, x) + lincomb_scale(a, y)
    assert lincomb_scale(a + b, x) == lincomb_scale(a, x) + lincomb_scale(b, x)
    assert lincomb_scale(a * b, x) == lincomb_scale(a, lincomb_scale(b, x))


@given(combos)
def test_hash_agrees_with_equality(x):
    y = LinComb(list(x.terms.items())[::-1])
    assert x == y and hash(x) == hash(y)


def test_accumulator_drops_cancellations():
    acc = Accumulator()
    acc.add("a", 1)
    acc.add("b", 2)
    acc.add("a", -1)
    acc.add_lincomb(LinComb({"b": 1}), scale=-2)
    assert acc.result() == LinComb()


def test_rank():
    rows = [LinComb({"a": 1, "b": 1}), LinComb({"b": 1, "c": 1}), LinComb({"a": 1, "c": -1})]
    assert rank(rows) == 2
    assert rank(rows[:2]) == 2
    assert rank([LinComb({"a": Fraction(1, 3)}), LinComb({"a": 2})]) == 1
    assert rank([]) == 0
