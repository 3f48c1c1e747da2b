"""Line-oriented presentation files.

::

    # the O'Hare monoid
    gens: abcd
    rel: abcdacdadabbcdacd

``gens`` lists distinct lowercase generators; each ``rel`` line is a word
literal (uppercase for inverses) declared equal to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from simt.benois import SpecialInversePresentation
from simt.errors import ParseError, WordSyntaxError
from simt.fgword import Alphabet, Word


@dataclass(frozen=True)
class PresentationFile:
    path: Optional[Path]
    presentation: SpecialInversePresentation
    name: Optional[str] = None


def parse_presentation(text: str) -> SpecialInversePresentation:
    gens: Optional[str] = None
    rels: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if not sep or key not in ("gens", "rel"):
            raise ParseError(f"expected 'gens:' or 'rel:', got {raw.strip()!r}", lineno)
        if key == "gens":
            if gens is not None:
                raise ParseError("duplicate gens line", lineno)
            if not value:
                raise ParseError("empty generator list", lineno)
            try:
                Alphabet(value)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            gens = value
        else:
            if not value:
                raise ParseError("empty relator", lineno)
            rels.append((lineno, value))
    if gens is None:
        raise ParseError("missing gens line")
    if not rels:
        raise ParseError("no rel lines")
    relators = []
    for lineno, literal in rels:
        for ch in literal:
            if ch.lower() not in gens:
                raise ParseError(f"unknown letter {ch!r} in relator {literal!r}", lineno)
        try:
            relators.append(Word.parse(literal))
        except WordSyntaxError as exc:
            raise ParseError(str(exc), lineno) from None
    return SpecialInversePresentation(Alphabet(gens), tuple(relators))


def format_presentation(pres: SpecialInversePresentation, comment: Optional[str] = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"gens: {pres.alphabet.letters}")
    lines.extend(f"rel: {r}" for r in pres.relators)
    return "\n".join(lines) + "\n"


def load(path) -> PresentationFile:
    path = Path(path)
    return PresentationFile(path, parse_presentation(path.read_text(encoding="utf-8")), path.stem)
