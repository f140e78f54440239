from __future__ import annotations

import itertools
import sys

import pytest

from hopfelim.tensor import Tensor
from hopfelim.words import Alphabet, MixedAlphabet


def word(alphabet: Alphabet, text):
    """``"svs"`` (one character per letter) or a list of symbols -> tuple of letters."""
    symbols = list(text) if isinstance(text, str) else text
    return tuple(alphabet.resolve(s) for s in symbols)


def tensor(alphabet: Alphabet, *terms) -> Tensor:
    """``tensor(A, ("sv", 1), ("vs", -1))``; the empty string is the unit."""
    out = Tensor.zero(alphabet)
    for text, c in terms:
        out = out + Tensor.word(alphabet, word(alphabet, text), c)
    return out


def all_words(letters, max_len, min_len=0):
    for n in range(min_len, max_len + 1):
        yield from itertools.product(letters, repeat=n)


@pytest.fixture
def vs():
    return MixedAlphabet(["v"], ["s"])


@pytest.fixture
def vst():
    return MixedAlphabet(["v"], ["s", "t"])


@pytest.fixture
def ab():
    return Alphabet.build(["a", "b"])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.LINES:
        terminalreporter.section("acceptance criteria")
        for line in module.LINES:
            terminalreporter.write_line(line)
