"""Benois factorization of the defining words of a special inverse presentation.

Every prefix of a defining word, and of its inverse, is right invertible, so
everything in the submonoid they generate in the free group is right
invertible.  A prefix ``p`` whose inverse lies in that submonoid is therefore
also left invertible, i.e. a unit; cutting each defining word at all such
prefixes gives a factorization into invertible pieces.  It is sound but may
be coarser than the factorization into minimal invertible pieces.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from simt.fgword import Alphabet, Word, free_reduce, invert, is_self_overlap_free, letter, prefixes
from simt.ratfg import GeneratingSet, SubmonoidOracle


class Provenance(str, enum.Enum):
    BENOIS = "benois"
    STEPHEN_REFINED = "stephen_refined"


class Invertibility(str, enum.Enum):
    INVERTIBLE = "invertible"
    UNKNOWN = "unknown"


class Verdict(str, enum.Enum):
    GROUP = "group"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SpecialInversePresentation:
    alphabet: Alphabet
    relators: tuple[Word, ...]

    def __post_init__(self):
        if not self.relators:
            raise ValueError("a presentation needs at least one relator")
        for r in self.relators:
            if not r:
                raise ValueError("relators must be nonempty")
            if not self.alphabet.covers(r):
                raise ValueError(f"relator {r} uses letters outside {self.alphabet.letters}")

    @classmethod
    def of(cls, gens: str, *relators: str) -> "SpecialInversePresentation":
        return cls(Alphabet(gens), tuple(Word.parse(r) for r in relators))

    def __str__(self):
        rels = ", ".join(f"{r}=1" for r in self.relators)
        return f"Inv<{','.join(self.alphabet)} | {rels}>"


@dataclass(frozen=True)
class Factorization:
    relator: Word
    cuts: tuple[int, ...]
    provenance: Provenance = Provenance.BENOIS

    def __post_init__(self):
        last = 0
        for c in self.cuts:
            if not last < c < len(self.relator):
                raise ValueError(f"bad cut positions {self.cuts} for {self.relator}")
            last = c

    @property
    def pieces(self) -> tuple[Word, ...]:
        bounds = (0, *self.cuts, len(self.relator))
        return tuple(self.relator[i:j] for i, j in zip(bounds, bounds[1:]))

    def __str__(self):
        return "|".join(str(p) for p in self.pieces)

    def is_trivial(self) -> bool:
        return not self.cuts


def benois_generators(pres: SpecialInversePresentation) -> GeneratingSet:
    words = []
    for r in pres.relators:
        words.extend(prefixes(r))
        words.extend(prefixes(invert(r)))
    return GeneratingSet.of(pres.alphabet, words)


def benois_oracle(pres: SpecialInversePresentation) -> SubmonoidOracle:
    return SubmonoidOracle(benois_generators(pres))


def _factorize(relator: Word, oracle: SubmonoidOracle) -> Factorization:
    # A prefix that reduces to 1 is cut too: its inverse is trivially in <X>.
    cuts = tuple(
        k for k in range(1, len(relator)) if free_reduce(invert(relator[:k])) in oracle
    )
    return Factorization(relator, cuts, Provenance.BENOIS)


def benois_factorize(
    pres: SpecialInversePresentation, oracle: Optional[SubmonoidOracle] = None
) -> list[Factorization]:
    oracle = oracle or benois_oracle(pres)
    return [_factorize(r, oracle) for r in pres.relators]


def invertible_letters(
    pres: SpecialInversePresentation, oracle: Optional[SubmonoidOracle] = None
) -> dict[str, Invertibility]:
    oracle = oracle or benois_oracle(pres)
    out = {}
    for name in pres.alphabet:
        x = letter(name)
        both = Word([x]) in oracle and Word([-x]) in oracle
        out[name] = Invertibility.INVERTIBLE if both else Invertibility.UNKNOWN
    return out


def group_verdict(
    pres: SpecialInversePresentation, oracle: Optional[SubmonoidOracle] = None
) -> Verdict:
    letters = invertible_letters(pres, oracle)
    if all(v is Invertibility.INVERTIBLE for v in letters.values()):
        return Verdict.GROUP
    return Verdict.UNKNOWN


def pieces_of(factorizations: Sequence[Factorization]) -> list[Word]:
    seen: dict[Word, None] = {}
    for f in factorizations:
        for p in f.pieces:
            seen.setdefault(p, None)
    return sorted(seen, key=lambda x: (len(x), str(x)))


def pieces(pres: SpecialInversePresentation) -> list[Word]:
    return pieces_of(benois_factorize(pres))


def adian_baseline(relator: Word) -> Optional[Factorization]:
    """Trivial factorization for a self-overlap-free relator, else None.

    Only the overlap-free case of Adian's algorithm is covered.
    """
    if is_self_overlap_free(relator):
        return Factorization(relator, (), Provenance.BENOIS)
    return None


@dataclass
class BenoisReport:
    presentation: SpecialInversePresentation
    generators: GeneratingSet
    factorizations: list[Factorization]
    invertible_letters: dict[str, Invertibility]
    group_verdict: Verdict
    pieces: list[Word]
    refined: list[Factorization] = field(default_factory=list)
    certificate: Optional[object] = None

    def to_json(self) -> dict:
        out = {
            "generators": [str(x) for x in self.generators],
            "factorizations": [
                {
                    "relator": str(f.relator),
                    "pieces": [str(p) for p in f.pieces],
                    "provenance": f.provenance.value,
                }
                for f in self.factorizations + self.refined
            ],
            "invertible_letters": {k: v.value for k, v in self.invertible_letters.items()},
            "group_verdict": self.group_verdict.value,
            "pieces": [str(p) for p in self.pieces],
        }
        if self.certificate is not None:
            out["not_group_certificate"] = self.certificate.to_json()
        return out


def benois_report(pres: SpecialInversePresentation) -> BenoisReport:
    gens = benois_generators(pres)
    oracle = SubmonoidOracle(gens)
    facts = benois_factorize(pres, oracle)
    letters = invertible_letters(pres, oracle)
    verdict = group_verdict(pres, oracle)
    return BenoisReport(pres, gens, facts, letters, verdict, pieces_of(facts))
