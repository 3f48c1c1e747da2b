"""Words over a generator alphabet and its formal inverses.

A letter is a nonzero int: generator ``c`` is ``ord(c) - ord('a') + 1`` and its
formal inverse is the negation.  Word literals use lowercase for generators
and uppercase for inverses, so ``abaBbAB`` is a b a b^-1 b a^-1 b^-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Optional

from simt.errors import MissingImage, WordSyntaxError

_BASE = ord("a") - 1


def letter(ch: str) -> int:
    """Return the signed letter code for a single literal character."""
    if "a" <= ch <= "z":
        return ord(ch) - _BASE
    if "A" <= ch <= "Z":
        return -(ord(ch.lower()) - _BASE)
    raise WordSyntaxError(f"invalid letter {ch!r}")


def generator_name(x: int) -> str:
    return chr(abs(x) + _BASE)


def letter_literal(x: int) -> str:
    name = generator_name(x)
    return name if x > 0 else name.upper()


@dataclass(frozen=True)
class Alphabet:
    letters: str

    def __post_init__(self):
        if not self.letters:
            raise ValueError("alphabet must be nonempty")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"duplicate generators in {self.letters!r}")
        for ch in self.letters:
            if not ("a" <= ch <= "z"):
                raise ValueError(f"generator names are single lowercase letters, got {ch!r}")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, item):
        if isinstance(item, int):
            return generator_name(item) in self.letters
        return item in self.letters

    @property
    def codes(self) -> tuple[int, ...]:
        return tuple(letter(ch) for ch in self.letters)

    def index(self, x: int) -> int:
        return self.letters.index(generator_name(x))

    def covers(self, w: "Word") -> bool:
        return all(generator_name(x) in self.letters for x in w)


class Word(tuple):
    """An immutable word; the empty word is the identity."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        return cls(letter(ch) for ch in text.strip())

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)))

    def __mul__(self, n):
        return Word(tuple.__mul__(self, n))

    def __getitem__(self, item):
        got = tuple.__getitem__(self, item)
        return Word(got) if isinstance(item, slice) else got

    def __str__(self):
        return "".join(letter_literal(x) for x in self)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def pretty(self) -> str:
        """Human-readable form, e.g. ``a b a^-1``; ``1`` for the empty word."""
        if not self:
            return "1"
        return " ".join(generator_name(x) + ("" if x > 0 else "^-1") for x in self)

    def generators(self) -> set[str]:
        return {generator_name(x) for x in self}


EMPTY = Word()


def w(text: str) -> Word:
    """Shorthand for :meth:`Word.parse`."""
    return Word.parse(text)


def free_reduce(word: Iterable[int]) -> Word:
    stack: list[int] = []
    for x in word:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return Word(stack)


def reduced_product(*words: Iterable[int]) -> Word:
    return free_reduce(x for word in words for x in word)


def invert(word: Iterable[int]) -> Word:
    return Word(-x for x in reversed(tuple(word)))


def cyclic_reduce(word: Iterable[int]) -> tuple[Word, Word]:
    """Split ``word`` as ``conjugator * core * conjugator^-1`` (freely).

    ``core`` is cyclically reduced.
    """
    core = list(free_reduce(word))
    i, j = 0, len(core)
    while j - i >= 2 and core[i] == -core[j - 1]:
        i += 1
        j -= 1
    return Word(core[:i]), Word(core[i:j])


def is_reduced(word: Iterable[int]) -> bool:
    word = tuple(word)
    return all(word[k] != -word[k + 1] for k in range(len(word) - 1))


def is_cyclically_reduced(word: Iterable[int]) -> bool:
    word = tuple(word)
    return is_reduced(word) and not (len(word) >= 2 and word[0] == -word[-1])


def is_positive(word: Iterable[int]) -> bool:
    return all(x > 0 for x in word)


def is_self_overlap_free(word: Iterable[int]) -> bool:
    word = tuple(word)
    n = len(word)
    return not any(word[:k] == word[n - k:] for k in range(1, n))


class WordFlags(NamedTuple):
    is_reduced: bool
    is_cyclically_reduced: bool
    is_positive: bool
    is_self_overlap_free: bool

    def names(self) -> list[str]:
        out = []
        if self.is_positive:
            out.append("positive")
        if self.is_reduced:
            out.append("reduced")
        if self.is_cyclically_reduced:
            out.append("cyclically_reduced")
        if self.is_self_overlap_free:
            out.append("self_overlap_free")
        return out


def classify(word: Iterable[int]) -> WordFlags:
    word = tuple(word)
    return WordFlags(
        is_reduced(word),
        is_cyclically_reduced(word),
        is_positive(word),
        is_self_overlap_free(word),
    )


def prefixes(word: Iterable[int], proper: bool = False, nonempty: bool = False) -> list[Word]:
    """All prefixes from the empty word up to ``word``, shortest first."""
    word = Word(word)
    lo = 1 if nonempty else 0
    hi = len(word) if proper else len(word) + 1
    return [word[:k] for k in range(lo, hi)]


def suffixes(word: Iterable[int]) -> list[Word]:
    word = Word(word)
    return [word[k:] for k in range(len(word), -1, -1)]


def commutator(u: Iterable[int], v: Iterable[int]) -> Word:
    u, v = Word(u), Word(v)
    return u + v + invert(u) + invert(v)


def substitute(images: Mapping[str, Word], word: Iterable[int]) -> Word:
    """Replace each letter by its image, inverse letters by the inverted image.

    No reduction is performed.
    """
    out: list[int] = []
    for x in word:
        name = generator_name(x)
        if name not in images:
            raise MissingImage(name)
        image = Word(images[name])
        out.extend(image if x > 0 else invert(image))
    return Word(out)


def apply_endomorphism(images: Mapping[str, Word], word: Iterable[int]) -> Word:
    return free_reduce(substitute(images, word))


def rotate(word: Iterable[int], k: int) -> Word:
    word = Word(word)
    if not word:
        return word
    k %= len(word)
    return word[k:] + word[:k]


def is_cyclic_conjugate(u: Iterable[int], v: Iterable[int]) -> Optional[int]:
    """Smallest ``k`` with ``rotate(u, k) == v``, or None."""
    u, v = Word(u), Word(v)
    if len(u) != len(v):
        return None
    if not u:
        return 0
    for k in range(len(u)):
        if rotate(u, k) == v:
            return k
    return None
