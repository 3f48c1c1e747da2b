"""Quotients with decidable word problem, used as certificates.

The bicyclic monoid ``<x | x x^-1 = 1>`` has normal forms ``x^-m x^n``; its
only unit is the identity, so a well-defined homomorphism onto it that sends
some generator to a non-identity element shows the source is not a group.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Optional

from simt.benois import SpecialInversePresentation
from simt.fgword import Alphabet, Word, substitute


class BicyclicElement(NamedTuple):
    """The element ``x^-m x^n``."""

    m: int
    n: int

    def is_identity(self) -> bool:
        return self.m == 0 and self.n == 0

    def __str__(self):
        return f"x^-{self.m} x^{self.n}"


BICYCLIC_IDENTITY = BicyclicElement(0, 0)


def bicyclic_normal_form(word: Iterable[int]) -> BicyclicElement:
    """Rewrite ``x x^-1 -> 1`` to normal form; any single generator plays ``x``."""
    gen = None
    m = n = 0
    for x in word:
        if gen is None:
            gen = abs(x)
        elif abs(x) != gen:
            raise ValueError("bicyclic words use a single generator")
        if x > 0:
            n += 1
        elif n:
            n -= 1
        else:
            m += 1
    return BicyclicElement(m, n)


def bicyclic_mul(e1: BicyclicElement, e2: BicyclicElement) -> BicyclicElement:
    k = min(e1.n, e2.m)
    return BicyclicElement(e1.m + e2.m - k, e2.n + e1.n - k)


def bicyclic_word(e: BicyclicElement, x: str = "x") -> Word:
    return Word.parse(x.upper() * e.m + x * e.n)


@dataclass(frozen=True)
class MonoidHom:
    images: Mapping[str, Word]

    @classmethod
    def of(cls, **images: str) -> "MonoidHom":
        return cls({k: Word.parse(v) for k, v in images.items()})

    def __call__(self, word: Iterable[int]) -> Word:
        return eval_hom(self, word)

    def to_json(self) -> dict:
        return {k: str(v) for k, v in sorted(self.images.items())}

    def __str__(self):
        return ", ".join(f"{k}->{v or '1'}" for k, v in sorted(self.images.items()))


def eval_hom(h: MonoidHom, word: Iterable[int]) -> Word:
    return substitute(h.images, word)


def abelianize(word: Iterable[int], alphabet: Alphabet) -> tuple[int, ...]:
    sums = [0] * len(alphabet)
    for x in word:
        sums[alphabet.index(x)] += 1 if x > 0 else -1
    return tuple(sums)


def in_integer_span(target: Iterable[int], vectors: Iterable[Iterable[int]]) -> bool:
    """Whether ``target`` is an integer combination of ``vectors``.

    Row-reduces the vectors to echelon form over the integers with gcd steps,
    then peels ``target`` off pivot by pivot.
    """
    rows = [list(v) for v in vectors if any(v)]
    target = list(target)
    width = len(target)
    echelon = []
    col = 0
    while rows and col < width:
        live = [r for r in rows if r[col]]
        if not live:
            col += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            pivot = live[0]
            for r in live[1:]:
                q = r[col] // pivot[col]
                for j in range(width):
                    r[j] -= q * pivot[j]
            live = [r for r in live if r[col]]
        pivot = live[0]
        echelon.append((col, pivot))
        rows = [r for r in rows if r is not pivot and any(r)]
        col += 1
    for col, pivot in echelon:
        if target[col] % pivot[col]:
            return False
        q = target[col] // pivot[col]
        for j in range(width):
            target[j] -= q * pivot[j]
    return not any(target)


class CertificateStatus(str, enum.Enum):
    CERTIFIED_NOT_GROUP = "certified_not_group"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class NonGroupCertificate:
    status: CertificateStatus
    hom: Optional[MonoidHom] = None
    witness_letter: Optional[str] = None

    def __bool__(self):
        return self.status is CertificateStatus.CERTIFIED_NOT_GROUP

    def to_json(self) -> dict:
        return {"hom": self.hom.to_json() if self.hom else None, "witness_letter": self.witness_letter}


def _check_hom(pres: SpecialInversePresentation, h: MonoidHom) -> Optional[str]:
    if not all(bicyclic_normal_form(eval_hom(h, r)).is_identity() for r in pres.relators):
        return None
    for name in pres.alphabet:
        if not bicyclic_normal_form(h.images[name]).is_identity():
            return name
    return None


def candidate_homs(alphabet: Alphabet, target: str = "x"):
    """Every map sending each generator to 1, x or x^-1."""
    choices = ("", target, target.upper())
    for combo in itertools.product(choices, repeat=len(alphabet)):
        yield MonoidHom({g: Word.parse(c) for g, c in zip(alphabet, combo)})


def non_group_certificate(
    pres: SpecialInversePresentation, h: Optional[MonoidHom] = None
) -> NonGroupCertificate:
    """Look for a bicyclic quotient showing the presented monoid is not a group.

    With ``h`` given only that map is tried.
    """
    homs = [h] if h is not None else candidate_homs(pres.alphabet)
    for hom in homs:
        witness = _check_hom(pres, hom)
        if witness is not None:
            return NonGroupCertificate(CertificateStatus.CERTIFIED_NOT_GROUP, hom, witness)
    return NonGroupCertificate(CertificateStatus.INAPPLICABLE)
