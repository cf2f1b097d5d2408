import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cogrowth.words import Alphabet, Word, free_reduce, grow_random, inverse_symbol, is_freely_reduced

AB = Alphabet.standard(2)
AB3 = Alphabet.standard(3)


def test_alphabet_basic():
    assert AB.names == ("a", "A", "b", "B")
    assert AB.k == 2 and AB.size == 4 and AB.bits == 2
    assert AB3.size == 6 and AB3.bits == 3


def test_inverse_symbol_pairing():
    for s in range(4):
        assert AB.inverse(AB.inverse(s)) == s
        assert AB.inverse(s) != s
    assert inverse_symbol(0) == 1 and inverse_symbol(1) == 0
    assert AB.inverse(2) == 3  # b -> b^-1
    with pytest.raises(IndexError):
        AB.inverse(4)


def test_word_append_pop_roundtrip():
    w = Word(AB, [0, 2, 1, 3, 3])
    assert len(w) == 5
    assert w.to_list() == [0, 2, 1, 3, 3]
    assert w.pop() == 3
    assert w.to_list() == [0, 2, 1, 3]
    w.append(1)
    assert w.to_text() == "abABA"


def test_word_text_roundtrip():
    w = Word.from_text(AB, "abAB")
    assert w.to_text() == "abAB"
    assert Word.from_text(AB3, "acBC").to_list() == [0, 4, 3, 5]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=200))
def test_packed_roundtrip_2bit(symbols):
    w = Word(AB, symbols)
    back = Word.from_packed(AB, w.to_packed(), len(w))
    assert back == w and back.to_list() == symbols


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 5), max_size=200))
def test_packed_roundtrip_3bit(symbols):
    w = Word(AB3, symbols)
    back = Word.from_packed(AB3, w.to_packed(), len(w))
    assert back.to_list() == symbols


def test_packed_roundtrip_long():
    # contract covers lengths up to 2**20
    rng = np.random.default_rng(7)
    symbols = rng.integers(0, 4, size=2**20)
    w = Word(AB)
    for s in symbols:
        w.append(int(s))
    assert len(w.to_packed()) == 2**20 // 4
    back = Word.from_packed(AB, w.to_packed(), 2**20)
    idx = rng.integers(0, 2**20, size=500)
    for i in idx:
        assert back[int(i)] == symbols[int(i)]


def test_pop_clears_bits():
    w = Word(AB, [3, 3, 3])
    w.pop()
    v = Word(AB, [3, 3])
    assert w == v and w.to_packed() == v.to_packed()


def test_free_reduce_examples():
    assert free_reduce(Word.from_text(AB, "aA")).to_text() == ""
    assert free_reduce(Word.from_text(AB, "abBa")).to_text() == "aa"
    assert free_reduce(Word.from_text(AB, "abA")).to_text() == "abA"


def test_is_freely_reduced_examples():
    assert is_freely_reduced(Word(AB))
    assert not is_freely_reduced(Word.from_text(AB, "aAb"))
    assert is_freely_reduced(Word.from_text(AB, "abab"))


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=64))
def test_free_reduce_properties(symbols):
    w = Word(AB, symbols)
    r = free_reduce(w)
    assert is_freely_reduced(r)
    assert len(r) <= len(w)
    assert (len(w) - len(r)) % 2 == 0
    assert free_reduce(r) == r


def test_grow_random_contract():
    rng = np.random.default_rng(123)
    w = Word(AB)
    out = grow_random(w, rng)
    assert len(out) == 1 and len(w) == 0
    w2 = Word(AB, [0, 1])
    assert len(grow_random(w2, rng)) == 3


def test_grow_random_uniform_and_deterministic():
    rng = np.random.default_rng(42)
    n = 10**6
    counts = np.zeros(4, dtype=int)
    empty = Word(AB)
    for _ in range(n):
        counts[grow_random(empty, rng)[0]] += 1
    p = 0.25
    sigma = np.sqrt(n * p * (1 - p))
    assert np.all(np.abs(counts - n * p) < 5 * sigma)
    # determinism on replay
    a = [grow_random(Word(AB), np.random.default_rng(9)).to_list() for _ in range(3)]
    assert a[0] == a[1] == a[2]
