"""Worked examples with known answers, runnable from the CLI."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from simt import construct
from simt.benois import (
    SpecialInversePresentation,
    Verdict,
    adian_baseline,
    benois_factorize,
    benois_generators,
    benois_oracle,
    group_verdict,
    pieces_of,
)
from simt.fgword import classify, free_reduce, invert, prefixes, w
from simt.quotient import CertificateStatus, MonoidHom, non_group_certificate
from simt.stephen import StephenSearch, invertibility_goals, refine_factorization

OHARE = SpecialInversePresentation.of("abcd", "abcdacdadabbcdacd")
I0 = SpecialInversePresentation.of("ab", "aabbaabab")
COUNTEREXAMPLE = SpecialInversePresentation.of("ab", "abaBbAB")
THREE_RELATOR = SpecialInversePresentation.of("abcd", "ab", "cabd", "cdd")
COMMUTATOR = SpecialInversePresentation.of("ab", "abAB")

# I0: a^-1 as a product of Benois generators
I0_CERTIFICATE = tuple(w(x) for x in ("BABAA", "aabb", "BA", "aabb", "BA"))
# I_w: a^-1 from prefixes of a^2 b^2 and of b^-1 a^-1 b^-1 a^-3
IW_CERTIFICATE = tuple(w(x) for x in ("aabb", "BA", "aab", "BABAAA"))
OHARE_FAMILY_WORDS = ("", "a", "b", "ab", "ba", "aaaaa", "bbbbb")


@dataclass(frozen=True)
class FixtureCase:
    name: str
    anchor: str
    check: Callable[[], tuple[bool, str]]


@dataclass(frozen=True)
class FixtureResult:
    name: str
    anchor: str
    passed: bool
    detail: str


def _ohare_benois():
    f = benois_factorize(OHARE)[0]
    pieces = {str(p) for p in pieces_of([f])}
    ok = str(f) == "abcd|acd|ad|abbcd|acd" and pieces == {"ad", "acd", "abcd", "abbcd"}
    return ok, str(f)


def _ohare_adian():
    base = adian_baseline(OHARE.relators[0])
    ok = base is not None and base.is_trivial() and not benois_factorize(OHARE)[0].is_trivial()
    return ok, "adian baseline trivial, benois finer"


def _ohare_refine():
    f = benois_factorize(OHARE)[0]
    search = StephenSearch(OHARE)
    refined = refine_factorization(OHARE, f, search=search)
    return refined.cuts == f.cuts, f"{refined} (rounds={search.rounds})"


def _i0_group():
    return group_verdict(I0) is Verdict.GROUP, group_verdict(I0).value


def _i0_certificate():
    gens = set(benois_generators(I0))
    product = free_reduce(x for p in I0_CERTIFICATE for x in p)
    members = all(free_reduce(p) in gens for p in I0_CERTIFICATE)
    return product == w("A") and members, f"product reduces to {product}"


def _iw_family():
    bad = []
    for mid in OHARE_FAMILY_WORDS:
        pres = SpecialInversePresentation.of("ab", "aabb" + mid + "aaabab")
        if group_verdict(pres) is not Verdict.GROUP:
            bad.append(mid or "1")
    product = free_reduce(x for p in IW_CERTIFICATE for x in p)
    ok = not bad and product == w("A")
    return ok, "all group" if ok else f"unknown for {bad}"


def _iw_overlap_free():
    bad = [
        (kind, i)
        for kind in "ab"
        for i in range(21)
        if not classify(construct.ohare_family(kind, i).relators[0]).is_self_overlap_free
    ]
    return not bad, "i <= 20 overlap free" if not bad else str(bad)


def _counterexample_benois():
    f = benois_factorize(COUNTEREXAMPLE)[0]
    return str(f) == "a|baBbAB", str(f)


def _counterexample_membership():
    oracle = benois_oracle(COUNTEREXAMPLE)
    accepted = [
        str(invert(p)) for p in prefixes(COUNTEREXAMPLE.relators[0], proper=True, nonempty=True)
        if invert(p) in oracle
    ]
    powers = all(w("b" + "a" * n + "B") in oracle for n in range(11))
    return accepted == ["A"] and powers, f"accepted inverses {accepted}"


def _counterexample_refine():
    f = benois_factorize(COUNTEREXAMPLE)[0]
    search = StephenSearch(COUNTEREXAMPLE)
    refined = refine_factorization(COUNTEREXAMPLE, f, search=search)
    return str(refined) == "a|baB|bAB", f"{refined} (rounds={search.rounds})"


def _counterexample_a_is_one():
    result = StephenSearch(COUNTEREXAMPLE).prove(w("a"))
    return bool(result), str(result)


def _counterexample_bicyclic():
    cert = non_group_certificate(COUNTEREXAMPLE, MonoidHom.of(a="", b="x"))
    return cert.status is CertificateStatus.CERTIFIED_NOT_GROUP, cert.status.value


def _three_relator():
    facts = benois_factorize(THREE_RELATOR)
    return all(f.is_trivial() for f in facts), " ".join(str(f) for f in facts)


def _rwr():
    pres = construct.rwr_presentation(construct.GroupPresentationInput.of("ab", "abAB"))
    expected = "aAAabBBb" + "abAB" + "aAAabBBb"
    ok = str(pres.relators[0]) == expected and group_verdict(pres) is Verdict.GROUP
    return ok, str(pres.relators[0])


def _commutator_not_group():
    trivial = benois_factorize(COMMUTATOR)[0].is_trivial()
    cert = non_group_certificate(COMMUTATOR, MonoidHom.of(a="x", b=""))
    return trivial and bool(cert), cert.status.value


def _abwaab():
    rng = random.Random(0)
    bad = []
    for _ in range(100):
        mid = construct.random_positive_word(rng, I0.alphabet, 12)
        if group_verdict(construct.lemma_abwaab(mid)) is not Verdict.GROUP:
            bad.append(str(mid))
    return not bad, "100 samples group" if not bad else f"unknown for {bad[:3]}"


def _baumslag_gersten():
    checks = construct.baumslag_gersten_fixture()
    failed = [k for k, v in checks.items() if not v]
    return not failed, "all checks" if not failed else f"failed {failed}"


def _cut_prefixes_invertible():
    lines = []
    ok = True
    for pres in (OHARE, I0, COUNTEREXAMPLE):
        search = StephenSearch(pres)
        for f in benois_factorize(pres):
            for k in f.cuts:
                result = search.prove(*invertibility_goals(f.relator[:k]))
                ok &= bool(result)
        lines.append(f"{pres.relators[0]}:rounds={search.rounds}")
    return ok, " ".join(lines)


CASES = [
    FixtureCase("abwaab-sweep", "abwaab is a group", _abwaab),
    FixtureCase("baumslag-gersten", "Baumslag-Gersten relator", _baumslag_gersten),
    FixtureCase("benois-cuts-stephen", "Benois cuts are units", _cut_prefixes_invertible),
    FixtureCase("commutator-not-group", "[a,b] is not a group", _commutator_not_group),
    FixtureCase("counterexample-a-is-1", "counterexample: a = 1", _counterexample_a_is_one),
    FixtureCase("counterexample-benois", "counterexample: Benois factorization", _counterexample_benois),
    FixtureCase("counterexample-bicyclic", "counterexample: bicyclic quotient", _counterexample_bicyclic),
    FixtureCase("counterexample-membership", "counterexample: automaton", _counterexample_membership),
    FixtureCase("counterexample-refine", "counterexample: minimal pieces", _counterexample_refine),
    FixtureCase("i0-certificate", "I0: product for a^-1", _i0_certificate),
    FixtureCase("i0-group", "I0 is a group", _i0_group),
    FixtureCase("iw-group", "I_w is a group", _iw_family),
    FixtureCase("iw-overlap-free", "I_w overlap free", _iw_overlap_free),
    FixtureCase("ohare-adian", "O'Hare: Adian baseline", _ohare_adian),
    FixtureCase("ohare-benois", "O'Hare: Benois pieces", _ohare_benois),
    FixtureCase("ohare-refine", "O'Hare: refinement stable", _ohare_refine),
    FixtureCase("rwr-commutator", "rwr embedding of Z^2", _rwr),
    FixtureCase("three-relator", "three relators: trivial", _three_relator),
]


def select(filter_text: str | None = None) -> list[FixtureCase]:
    cases = sorted(CASES, key=lambda c: c.name)
    if filter_text:
        cases = [c for c in cases if filter_text in c.name]
    return cases


def run(cases: list[FixtureCase]) -> list[FixtureResult]:
    out = []
    for case in cases:
        try:
            passed, detail = case.check()
        except Exception as exc:  # a crashing fixture is a failing fixture
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(FixtureResult(case.name, case.anchor, bool(passed), detail))
    return out
