import random

import pytest
from hypothesis import given, strategies as st

from _oracles import naive_reduce, random_word
from simt.errors import MissingImage, WordSyntaxError
from simt.fgword import (
    Alphabet,
    Word,
    apply_endomorphism,
    classify,
    commutator,
    cyclic_reduce,
    free_reduce,
    invert,
    is_cyclic_conjugate,
    is_cyclically_reduced,
    is_reduced,
    is_self_overlap_free,
    prefixes,
    rotate,
    substitute,
    suffixes,
    w,
)

signed = st.sampled_from([1, 2, 3, -1, -2, -3])
words = st.lists(signed, max_size=24).map(Word)


def test_parse_and_print_round_trip():
    u = w("abaBbAB")
    assert u == (1, 2, 1, -2, 2, -1, -2)
    assert str(u) == "abaBbAB"
    assert u.pretty() == "a b a b^-1 b a^-1 b^-1"
    assert Word().pretty() == "1"
    assert u.generators() == {"a", "b"}


@pytest.mark.parametrize("bad", ["a1", "a b", "a-b", "é"])
def test_parse_rejects_bad_characters(bad):
    with pytest.raises(WordSyntaxError):
        Word.parse(bad)


def test_alphabet_validation():
    assert Alphabet("abc").codes == (1, 2, 3)
    for bad in ("", "aa", "aB", "a1"):
        with pytest.raises(ValueError):
            Alphabet(bad)
    assert Alphabet("ab").covers(w("abAB"))
    assert not Alphabet("ab").covers(w("c"))


def test_slicing_keeps_word_type():
    u = w("abc")
    assert isinstance(u[1:], Word)
    assert isinstance(u + w("a"), Word)
    assert u[0] == 1


@pytest.mark.parametrize(
    "raw, reduced",
    [("", ""), ("aA", ""), ("abBA", ""), ("abAB", "abAB"), ("aabBAb", "ab"), ("AaAa", "")],
)
def test_free_reduce_examples(raw, reduced):
    assert str(free_reduce(w(raw))) == reduced


@given(words)
def test_free_reduce_matches_naive(u):
    assert free_reduce(u) == naive_reduce(u)


@given(words)
def test_free_reduce_idempotent_and_reduced(u):
    r = free_reduce(u)
    assert free_reduce(r) == r
    assert is_reduced(r)


@given(words)
def test_inverse_cancels(u):
    assert free_reduce(u + invert(u)) == Word()
    assert invert(invert(u)) == u


@given(words, words)
def test_inverse_of_product(u, v):
    assert free_reduce(invert(u + v)) == free_reduce(invert(v) + invert(u))


def test_cyclic_reduce():
    conj, core = cyclic_reduce(w("abcBA"))
    assert str(conj) == "ab" and str(core) == "c"
    assert free_reduce(conj + core + invert(conj)) == w("abcBA")
    assert is_cyclically_reduced(core)
    assert not is_cyclically_reduced(w("abA"))


@given(words)
def test_cyclic_reduce_property(u):
    conj, core = cyclic_reduce(u)
    assert free_reduce(conj + core + invert(conj)) == free_reduce(u)
    assert is_cyclically_reduced(core)


def test_classify_names():
    assert classify(w("abcd")).names() == ["positive", "reduced", "cyclically_reduced", "self_overlap_free"]
    assert classify(w("abab")).names() == ["positive", "reduced", "cyclically_reduced"]
    assert classify(w("aA")).names() == ["self_overlap_free"]
    assert classify(w("aAa")).names() == []


@pytest.mark.parametrize(
    "text, expected",
    [("abcdacdadabbcdacd", True), ("aabbaabab", True), ("aba", False), ("a", True), ("", True)],
)
def test_self_overlap_free(text, expected):
    assert is_self_overlap_free(w(text)) is expected


def test_prefixes_and_suffixes():
    u = w("abc")
    assert [str(p) for p in prefixes(u)] == ["", "a", "ab", "abc"]
    assert [str(p) for p in prefixes(u, proper=True, nonempty=True)] == ["a", "ab"]
    assert [str(s) for s in suffixes(u)] == ["", "c", "bc", "abc"]


def test_commutator_and_endomorphism():
    assert str(commutator(w("a"), w("b"))) == "abAB"
    images = {"a": w("abaab"), "b": w("ab")}
    assert str(apply_endomorphism(images, w("baB"))) == "ababa"
    assert str(substitute({"a": w("b")}, w("aA"))) == "bB"
    with pytest.raises(MissingImage) as info:
        substitute({"a": w("b")}, w("c"))
    assert "c" in str(info.value)


def test_rotate_and_conjugacy():
    assert str(rotate(w("abc"), 1)) == "bca"
    assert str(rotate(w("abc"), -1)) == "cab"
    assert is_cyclic_conjugate(w("abc"), w("cab")) == 2
    assert is_cyclic_conjugate(w("abc"), w("acb")) is None
    assert is_cyclic_conjugate(w("aa"), w("aa")) == 0
    assert is_cyclic_conjugate(w(""), w("")) == 0


def test_thousand_random_words():
    rng = random.Random(7)
    for _ in range(1000):
        u = random_word(rng, 20)
        assert free_reduce(free_reduce(u)) == free_reduce(u)
        assert free_reduce(u + invert(u)) == Word()
