"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
import random

from simt.fgword import Word, free_reduce, invert, is_reduced

SIGNED = {"a": 1, "b": 2, "A": -1, "B": -2}


def naive_reduce(word) -> Word:
    """Quadratic free reduction: delete the first cancelling pair until none is left."""
    out = list(word)
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i] == -out[i + 1]:
                del out[i : i + 2]
                changed = True
                break
    return Word(out)


def reduced_words(max_len: int, letters=(1, 2, -1, -2)):
    """All freely reduced words of length at most ``max_len``, shortest first."""
    level = [Word()]
    yield Word()
    for _ in range(max_len):
        nxt = []
        for u in level:
            for x in letters:
                if u and u[-1] == -x:
                    continue
                v = u + Word([x])
                nxt.append(v)
                yield v
        level = nxt


def random_word(rng: random.Random, max_len: int, letters=(1, 2, -1, -2)) -> Word:
    return Word(rng.choice(letters) for _ in range(rng.randint(0, max_len)))


def random_reduced(rng: random.Random, max_len: int, letters=(1, 2, -1, -2)) -> Word:
    return free_reduce(random_word(rng, 2 * max_len, letters))[:max_len]


def bounded_products(gens, max_factors: int = 8, cap: int = 12) -> set[Word]:
    """Reduced forms of products of at most ``max_factors`` generators.

    Intermediate products longer than ``cap`` are dropped, so this is an
    under-approximation of the submonoid.
    """
    gens = [free_reduce(g) for g in gens]
    seen = {Word()}
    frontier = {Word()}
    for _ in range(max_factors):
        nxt = set()
        for u in frontier:
            for g in gens:
                v = free_reduce(u + g)
                if len(v) <= cap and v not in seen:
                    nxt.add(v)
        seen |= nxt
        frontier = nxt
    return seen


class HandAutomaton:
    """Three-state machine over signed letters with epsilon moves.

    Built literally from a transition table; no saturation or closure
    code from the package is involved.
    """

    def __init__(self, edges, eps, initial=0, finals=(0,)):
        self.edges = edges
        self.eps = eps
        self.initial = initial
        self.finals = set(finals)

    def _close(self, states):
        states = set(states)
        stack = list(states)
        while stack:
            p = stack.pop()
            for q in self.eps.get(p, ()):
                if q not in states:
                    states.add(q)
                    stack.append(q)
        return states

    def accepts(self, word) -> bool:
        current = self._close({self.initial})
        for x in word:
            current = self._close({q for p in current for q in self.edges.get((p, x), ())})
        return bool(current & self.finals)


def counterexample_machine() -> HandAutomaton:
    a, b = 1, 2
    edges = {
        (0, a): {0},
        (0, b): {0, 2},
        (0, -a): {0},
        (2, a): {1},
        (1, -b): {0},
    }
    eps = {1: {0, 2}, 2: {0}}
    return HandAutomaton(edges, eps)


def random_graph_edges(rng: random.Random, n_vertices: int, n_edges: int, gens=(1, 2)):
    return {
        (rng.randrange(n_vertices), rng.choice(gens), rng.randrange(n_vertices))
        for _ in range(n_edges)
    }


def all_reduced(words) -> bool:
    return all(is_reduced(u) for u in words)


def product(words) -> Word:
    return free_reduce(itertools.chain.from_iterable(words))


__all__ = [
    "SIGNED",
    "HandAutomaton",
    "bounded_products",
    "counterexample_machine",
    "invert",
    "naive_reduce",
    "product",
    "random_graph_edges",
    "random_reduced",
    "random_word",
    "reduced_words",
]
