import itertools
import random

import pytest
from hypothesis import given, strategies as st

from simt.benois import SpecialInversePresentation
from simt.errors import MissingImage
from simt.fgword import Alphabet, Word, w
from simt.fixtures import COMMUTATOR, COUNTEREXAMPLE, I0
from simt.quotient import (
    BICYCLIC_IDENTITY,
    BicyclicElement,
    CertificateStatus,
    MonoidHom,
    abelianize,
    bicyclic_mul,
    bicyclic_normal_form,
    bicyclic_word,
    candidate_homs,
    eval_hom,
    in_integer_span,
    non_group_certificate,
)


def brute_bicyclic(word) -> BicyclicElement:
    """Rewrite x x^-1 -> 1 by repeated string replacement."""
    s = "".join("x" if c > 0 else "X" for c in word)
    while "xX" in s:
        s = s.replace("xX", "", 1)
    return BicyclicElement(s.count("X"), s.count("x"))


def test_normal_form_examples():
    assert bicyclic_normal_form(w("aA")) == BICYCLIC_IDENTITY
    assert bicyclic_normal_form(w("Aa")) == BicyclicElement(1, 1)
    assert bicyclic_normal_form(w("AAaaa")) == BicyclicElement(2, 3)
    with pytest.raises(ValueError):
        bicyclic_normal_form(w("ab"))


@given(st.lists(st.sampled_from([1, -1]), max_size=30))
def test_normal_form_matches_string_rewriting(letters):
    assert bicyclic_normal_form(letters) == brute_bicyclic(letters)


def test_multiplication_formula_thousand_pairs():
    rng = random.Random(3)
    for _ in range(1000):
        u = Word(rng.choice((1, -1)) for _ in range(rng.randint(0, 12)))
        v = Word(rng.choice((1, -1)) for _ in range(rng.randint(0, 12)))
        nf = bicyclic_normal_form
        assert bicyclic_mul(nf(u), nf(v)) == nf(u + v)


def test_only_identity_is_a_unit():
    grid = [BicyclicElement(m, n) for m in range(6) for n in range(6)]
    units = [
        e
        for e in grid
        if any(
            bicyclic_mul(e, f).is_identity() and bicyclic_mul(f, e).is_identity()
            for f in grid
        )
    ]
    assert units == [BICYCLIC_IDENTITY]


def test_bicyclic_word_round_trip():
    for m, n in itertools.product(range(4), repeat=2):
        e = BicyclicElement(m, n)
        assert bicyclic_normal_form(bicyclic_word(e)) == e


def test_hom_evaluation():
    h = MonoidHom.of(a="", b="x")
    assert eval_hom(h, w("abaBbAB")) == w("xXxX")
    assert str(h) == "a->1, b->x"
    assert h.to_json() == {"a": "", "b": "x"}
    with pytest.raises(MissingImage):
        h(w("c"))


def test_abelianize_and_span():
    ab = Alphabet("ab")
    assert abelianize(w("aabAb"), ab) == (1, 2)
    assert in_integer_span((2, 4), [(1, 2)])
    assert not in_integer_span((1, 1), [(2, 0), (0, 2)])
    assert in_integer_span((1, 0), [(3, 0), (2, 0)])
    assert in_integer_span((0, 0), [])
    assert not in_integer_span((1, 0), [(0, 0)])


def test_span_brute_force():
    rng = random.Random(5)
    for _ in range(200):
        vecs = [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(rng.randint(0, 2))]
        target = (rng.randint(-4, 4), rng.randint(-4, 4))
        coeffs = range(-12, 13)
        expected = any(
            tuple(sum(c * v[i] for c, v in zip(cs, vecs)) for i in range(2)) == target
            for cs in itertools.product(coeffs, repeat=len(vecs))
        )
        assert in_integer_span(target, vecs) == expected


def test_certificates():
    assert non_group_certificate(COUNTEREXAMPLE, MonoidHom.of(a="", b="x")).status is CertificateStatus.CERTIFIED_NOT_GROUP
    assert non_group_certificate(COMMUTATOR, MonoidHom.of(a="x", b="")).witness_letter == "a"
    # a -> x does not kill the relator of the counterexample
    assert not non_group_certificate(COUNTEREXAMPLE, MonoidHom.of(a="x", b=""))
    # a group has no bicyclic quotient with a non-unit generator
    assert not non_group_certificate(I0)
    trivial = SpecialInversePresentation.of("a", "a")
    assert non_group_certificate(trivial).status is CertificateStatus.INAPPLICABLE


def test_candidate_homs_count():
    assert len(list(candidate_homs(Alphabet("abc")))) == 27
