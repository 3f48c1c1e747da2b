"""Submonoid membership in free groups by Benois saturation.

A finite set ``X`` of words is turned into a flower automaton (one simple
cycle per generator through a shared base state).  Saturation then adds
epsilon transitions ``p -> q`` whenever some ``p -s-> r -s^-1-> q`` path
exists (epsilon moves allowed in between), until nothing changes.  A freely
reduced word is accepted by the saturated automaton exactly when it is the
free reduction of a product of elements of ``X``.

State sets are stored as int bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from simt.errors import ResourceLimit
from simt.fgword import Alphabet, Word, free_reduce, generator_name, invert


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class GeneratingSet:
    alphabet: Alphabet
    words: tuple[Word, ...]

    @classmethod
    def of(cls, alphabet: Alphabet, words: Iterable[Iterable[int]]) -> "GeneratingSet":
        seen: dict[Word, None] = {}
        for word in words:
            red = free_reduce(word)
            if red:
                seen.setdefault(red, None)
        out = tuple(sorted(seen, key=lambda x: (len(x), str(x))))
        for word in out:
            if not alphabet.covers(word):
                raise ValueError(f"{word} is not over alphabet {alphabet.letters}")
        return cls(alphabet, out)

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)


@dataclass
class FGAutomaton:
    """Automaton over signed letters with epsilon transitions.

    ``delta[p]`` maps a signed letter to the bitmask of targets;
    ``eps[p]`` is the bitmask of epsilon targets of ``p`` (reflexive and
    transitively closed once :func:`saturate` has run).
    """

    n_states: int
    initial: int
    finals: int
    delta: list[dict[int, int]]
    eps: list[int]
    saturated: bool = False
    letters: tuple[int, ...] = field(default=())

    def copy(self) -> "FGAutomaton":
        return FGAutomaton(
            self.n_states,
            self.initial,
            self.finals,
            [dict(d) for d in self.delta],
            list(self.eps),
            self.saturated,
            self.letters,
        )

    def transitions(self) -> list[tuple[int, int, int]]:
        return sorted(
            (p, x, q)
            for p, row in enumerate(self.delta)
            for x, mask in row.items()
            for q in _bits(mask)
        )

    def epsilons(self) -> list[tuple[int, int]]:
        return sorted((p, q) for p, mask in enumerate(self.eps) for q in _bits(mask) if p != q)

    def closure(self, mask: int) -> int:
        out = 0
        for p in _bits(mask):
            out |= self.eps[p]
        return out

    def step(self, mask: int, x: int) -> int:
        out = 0
        for p in _bits(mask):
            out |= self.delta[p].get(x, 0)
        return out

    def accepts(self, word: Iterable[int]) -> bool:
        """Run the NFA on ``word`` exactly as written (no reduction)."""
        if not self.saturated:
            _close(self)
        current = self.closure(1 << self.initial)
        for x in word:
            current = self.closure(self.step(current, x))
            if not current:
                return False
        return bool(current & self.finals)


def _close(aut: FGAutomaton) -> None:
    """Make ``aut.eps`` reflexive and transitively closed (Warshall on bitmasks)."""
    eps = aut.eps
    for p in range(aut.n_states):
        eps[p] |= 1 << p
    for k in range(aut.n_states):
        bit = 1 << k
        row = eps[k]
        for p in range(aut.n_states):
            if eps[p] & bit:
                eps[p] |= row


def flower(gens: GeneratingSet) -> FGAutomaton:
    delta: list[dict[int, int]] = [{}]
    letters: set[int] = set()

    def add(p, x, q):
        delta[p][x] = delta[p].get(x, 0) | (1 << q)
        letters.add(x)

    for word in gens:
        if len(word) == 1:
            add(0, word[0], 0)
            continue
        prev = 0
        for x in word[:-1]:
            delta.append({})
            state = len(delta) - 1
            add(prev, x, state)
            prev = state
        add(prev, word[-1], 0)
    n = len(delta)
    aut = FGAutomaton(n, 0, 1, delta, [0] * n, letters=tuple(sorted(letters)))
    _close(aut)
    return aut


def _matrix(masks: list[int], n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=np.float32)
    for p, mask in enumerate(masks):
        for q in _bits(mask):
            out[p, q] = 1.0
    return out


def _transitive(m: np.ndarray) -> np.ndarray:
    while True:
        nxt = ((m @ m) > 0).astype(np.float32)
        if np.array_equal(nxt, m):
            return m
        m = nxt


def saturate(aut: FGAutomaton, max_epsilons: Optional[int] = None) -> FGAutomaton:
    """Return a copy of ``aut`` with epsilon transitions added to the fixpoint.

    Relations are boolean matrices.  One pass adds ``D_x E D_-x`` to the
    epsilon relation ``E`` for every letter ``x`` and takes the reflexive
    transitive closure, which also covers the leading ``E`` of the rule.
    """
    aut = aut.copy()
    _close(aut)
    n = aut.n_states
    letters = sorted({x for row in aut.delta for x in row})
    pairs = [x for x in letters if -x in letters]
    step = {x: _matrix([row.get(x, 0) for row in aut.delta], n) for x in pairs}
    eps = _matrix(aut.eps, n)
    while True:
        grown = eps.copy()
        for x in pairs:
            grown += step[x] @ eps @ step[-x]
        grown = _transitive((grown > 0).astype(np.float32))
        if np.array_equal(grown, eps):
            break
        eps = grown
        if max_epsilons is not None and int(eps.sum()) - n > max_epsilons:
            raise ResourceLimit(f"saturation exceeded {max_epsilons} epsilon transitions")
    aut.eps = [
        sum(1 << int(q) for q in np.flatnonzero(row)) for row in eps
    ]
    aut.saturated = True
    return aut


class SubmonoidOracle:
    """Saturated flower automaton for ``<X>``, built once and queried many times."""

    def __init__(self, gens: GeneratingSet, max_epsilons: Optional[int] = None):
        self.gens = gens
        self.automaton = saturate(flower(gens), max_epsilons)

    def __contains__(self, word) -> bool:
        return self.automaton.accepts(free_reduce(word))

    def contains(self, word) -> bool:
        return word in self


def submonoid_contains(gens: GeneratingSet, word: Iterable[int]) -> bool:
    return SubmonoidOracle(gens).contains(word)


def subsemigroup_contains_identity(gens: GeneratingSet) -> bool:
    """Whether 1 is a nonempty product of elements of ``gens``.

    If ``x1...xn = 1`` then ``xn^-1 = x1...x(n-1)`` lies in the submonoid;
    conversely ``x^-1`` in the submonoid gives ``x^-1 x = 1``.
    """
    oracle = SubmonoidOracle(gens)
    return any(invert(x) in oracle for x in gens)


def _letter_label(x: int) -> str:
    name = generator_name(x)
    return name if x > 0 else f"{name}^-1"


def to_dot(aut: FGAutomaton, name: str = "automaton") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for p in range(aut.n_states):
        shape = "doublecircle" if aut.finals >> p & 1 else "circle"
        attrs = f'shape={shape}, label="q{p}"'
        if p == aut.initial:
            attrs += ", style=bold"
        lines.append(f"  q{p} [{attrs}];")
    edges = [(p, q, _letter_label(x)) for p, x, q in aut.transitions()]
    edges += [(p, q, "ε") for p, q in aut.epsilons()]
    for p, q, label in sorted(edges):
        style = ", style=dashed" if label == "ε" else ""
        lines.append(f'  q{p} -> q{q} [label="{label}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
