"""Presentation constructions and brute-force checks on prefix products."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from simt.benois import SpecialInversePresentation, Verdict, group_verdict
from simt.errors import NoValidRotation, NotPositive, ResourceLimit
from simt.fgword import (
    Alphabet,
    Word,
    apply_endomorphism,
    commutator,
    free_reduce,
    generator_name,
    invert,
    is_cyclic_conjugate,
    is_positive,
    letter,
    prefixes,
    rotate,
)


@dataclass(frozen=True)
class GroupPresentationInput:
    alphabet: Alphabet
    relator: Word

    def __post_init__(self):
        if not self.alphabet.covers(self.relator):
            raise ValueError(f"relator {self.relator} uses letters outside {self.alphabet.letters}")

    @classmethod
    def of(cls, gens: str, relator: str) -> "GroupPresentationInput":
        return cls(Alphabet(gens), Word.parse(relator))


def group_making_word(alphabet: Alphabet) -> Word:
    """Product over the generators of ``a a^-1 a^-1 a``; freely trivial."""
    out = Word()
    for x in alphabet.codes:
        out = out + Word((x, -x, -x, x))
    return out


def rwr_presentation(group: GroupPresentationInput) -> SpecialInversePresentation:
    r = group_making_word(group.alphabet)
    return SpecialInversePresentation(group.alphabet, (r + group.relator + r,))


def positive_transfer(group: GroupPresentationInput) -> SpecialInversePresentation:
    """Positive relator ``a1...an w an...a1`` presenting the same group.

    The relator is rotated to the first cyclic conjugate that begins and ends
    with the same letter ``a``; the other generators ``a1..an`` are taken in
    alphabet order and ``a`` is replaced by ``a1...an a an...a1``.
    """
    r = group.relator
    if not is_positive(r) or not r:
        raise NotPositive(f"{r} is not a nonempty positive word")
    if len(set(r)) < 2 or len(group.alphabet) < 2:
        raise NoValidRotation(f"{r} uses a single generator")
    for k in range(len(r)):
        rot = rotate(r, k)
        if rot[0] == rot[-1]:
            break
    else:
        raise NoValidRotation(f"no cyclic conjugate of {r} begins and ends with the same letter")
    a = rot[0]
    others = [x for x in group.alphabet.codes if x != a]
    images = {generator_name(x): Word([x]) for x in others}
    images[generator_name(a)] = Word(others) + Word([a]) + Word(reversed(others))
    return SpecialInversePresentation(group.alphabet, (apply_endomorphism(images, rot),))


OHARE_HEAD = Word.parse("aabb")
OHARE_TAIL = Word.parse("aaabab")


def ohare_family(kind: str, i: int) -> SpecialInversePresentation:
    """``<a,b | a^2 b^2 w a^3 bab>`` with ``w = a^i`` or ``b^i``."""
    if kind not in ("a", "b"):
        raise ValueError(f"kind must be 'a' or 'b', got {kind!r}")
    if i < 0:
        raise ValueError("i must be non-negative")
    middle = Word.parse(kind * i)
    return SpecialInversePresentation(Alphabet("ab"), (OHARE_HEAD + middle + OHARE_TAIL,))


@dataclass
class PrefixProductReport:
    relator: Word
    factors: list[Word]
    max_factors: int
    vanishing: list[tuple[Word, ...]] = field(default_factory=list)
    nodes: int = 0

    @property
    def used_factors(self) -> set[Word]:
        return {p for product in self.vanishing for p in product}


def check_prefix_products(
    r: Word, max_factors: int, both: bool = True, node_budget: int = 2_000_000
) -> PrefixProductReport:
    """Enumerate nonempty products of nonempty prefixes that reduce to 1.

    Factors are the nonempty prefixes of ``r`` and, with ``both``, of
    ``r^-1``.  Every product of at most ``max_factors`` factors is visited.
    """
    factors = prefixes(r, nonempty=True)
    if both:
        factors += [p for p in prefixes(invert(r), nonempty=True) if p not in factors]
    report = PrefixProductReport(r, factors, max_factors)

    def visit(value: Word, chain: tuple[Word, ...]):
        for p in factors:
            report.nodes += 1
            if report.nodes > node_budget:
                raise ResourceLimit(f"prefix product search exceeded {node_budget} nodes")
            product = free_reduce(value + p)
            extended = chain + (p,)
            if not product:
                report.vanishing.append(extended)
            if len(extended) < max_factors:
                visit(product, extended)

    visit(Word(), ())
    return report


# free group automorphism with a -> abaab, b -> ab
BG_AUTOMORPHISM = {"a": Word.parse("abaab"), "b": Word.parse("ab")}
BG_RELATOR = Word.parse("abab" "aB" "AAB" "AAB" "abab" "aab")
BG_W1 = Word.parse("ab")
BG_W2 = Word.parse("abaBAABAABab")


def baumslag_gersten_fixture() -> dict[str, bool]:
    """Named checks for the cyclically reduced presentation of <a,b | a^-1 = [a, bab^-1]>."""
    phi = lambda text: apply_endomorphism(BG_AUTOMORPHISM, Word.parse(text))
    a, b = Word.parse("a"), Word.parse("b")
    image = apply_endomorphism(BG_AUTOMORPHISM, commutator(a, Word.parse("baB")) + a)
    spliced = BG_W1 + Word.parse("aabab") + BG_W2
    pres = SpecialInversePresentation(Alphabet("ab"), (BG_RELATOR,))
    return {
        "preimage_of_a": phi("BaB") == a,
        "preimage_of_b": phi("bAbb") == b,
        "image_of_bab^-1": phi("baB") == Word.parse("ababa"),
        "image_of_relator": image == spliced,
        "cyclic_conjugate": is_cyclic_conjugate(BG_RELATOR, spliced) is not None,
        "group_verdict": group_verdict(pres) is Verdict.GROUP,
    }


@dataclass
class SamplerReport:
    u: Word
    v: Word
    samples: int
    group: int = 0
    unknown: int = 0
    first_unknown: Optional[Word] = None

    def to_json(self) -> dict:
        return {
            "u": str(self.u),
            "v": str(self.v),
            "samples": self.samples,
            "group": self.group,
            "unknown": self.unknown,
            "first_unknown": None if self.first_unknown is None else str(self.first_unknown),
            "conclusion": "no counterexample found" if not self.unknown else "non-group witness candidate found",
        }


def random_positive_word(rng: random.Random, alphabet: Alphabet, max_len: int) -> Word:
    n = rng.randint(0, max_len)
    return Word(letter(rng.choice(alphabet.letters)) for _ in range(n))


def group_making_sampler(
    u: Word,
    v: Word,
    samples: int = 100,
    max_len: int = 8,
    seed: int = 0,
    alphabet: Alphabet = Alphabet("ab"),
) -> SamplerReport:
    """Run the Benois group verdict on ``u w v`` for random positive ``w``.

    Finding no Unknown verdict is evidence, not proof, that ``(u, v)`` is
    group-making.
    """
    if not (is_positive(u) and is_positive(v)):
        raise NotPositive("u and v must be positive")
    rng = random.Random(seed)
    report = SamplerReport(u, v, samples)
    for _ in range(samples):
        mid = random_positive_word(rng, alphabet, max_len)
        rel = u + mid + v
        # an empty relator presents the free inverse monoid
        if rel and group_verdict(SpecialInversePresentation(alphabet, (rel,))) is Verdict.GROUP:
            report.group += 1
        else:
            report.unknown += 1
            if report.first_unknown is None:
                report.first_unknown = mid
    return report


def lemma_abwaab(mid: Word) -> SpecialInversePresentation:
    return SpecialInversePresentation(Alphabet("ab"), (Word.parse("ab") + mid + Word.parse("aab"),))
