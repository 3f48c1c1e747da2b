"""Computations with special inverse monoid presentations.

Free-group words, Benois saturation for submonoid membership, the Benois
factorization of defining words, a bounded Stephen procedure, bicyclic and
abelian quotient certificates, and a handful of presentation constructions.
"""

from simt.fgword import Alphabet, Word, free_reduce, invert
from simt.benois import SpecialInversePresentation, benois_report

__all__ = [
    "Alphabet",
    "SpecialInversePresentation",
    "Word",
    "benois_report",
    "free_reduce",
    "invert",
]

__version__ = "0.1.0"
