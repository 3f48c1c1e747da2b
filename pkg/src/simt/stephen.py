"""Bounded Stephen procedure for the Schutzenberger graph of 1.

The graph starts as a single root vertex.  Each round sews a loop labelled by
every relator at every vertex present at the start of the round, identifies
the endpoints of relator-labelled paths, and folds.  A word labelling a
root-to-root path in any approximation equals 1 in the presented inverse
monoid, so ``Proved`` answers are sound; ``Unknown`` means nothing.

Edges are stored once, in the positive direction: ``(s, g, t)`` means
generator ``g`` leads from ``s`` to ``t`` and ``g^-1`` leads back.
"""

from __future__ import annotations

import enum
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from simt.benois import Factorization, Provenance, SpecialInversePresentation
from simt.errors import ResourceLimit
from simt.fgword import Word, generator_name, invert


@dataclass(frozen=True)
class Limits:
    max_rounds: int = 6
    max_vertices: int = 20000

    def __post_init__(self):
        if self.max_rounds < 1 or self.max_vertices < 1:
            raise ValueError("limits must be positive")


DEFAULT_LIMITS = Limits()


class Status(str, enum.Enum):
    PROVED = "proved"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ProofResult:
    status: Status
    rounds_used: int
    vertices_used: int

    def __bool__(self):
        return self.status is Status.PROVED

    def __str__(self):
        return f"{self.status.value} (rounds={self.rounds_used}, vertices={self.vertices_used})"


@dataclass(frozen=True)
class InverseWordGraph:
    """A snapshot of a word graph: vertex ids, positive edges and a root."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int, int]]
    root: int = 0

    @classmethod
    def single(cls) -> "InverseWordGraph":
        return cls(frozenset({0}), frozenset(), 0)

    @classmethod
    def linear(cls, word: Iterable[int]) -> "InverseWordGraph":
        """Path graph spelling ``word`` from the root, without folding."""
        edges = set()
        prev = 0
        for i, x in enumerate(word, start=1):
            edges.add((prev, x, i) if x > 0 else (i, -x, prev))
            prev = i
        return cls(frozenset(range(prev + 1)), frozenset(edges), 0)

    def is_deterministic(self) -> bool:
        seen = set()
        for s, g, _ in self.edges:
            if (s, g) in seen:
                return False
            seen.add((s, g))
        return True

    def is_codeterministic(self) -> bool:
        seen = set()
        for _, g, t in self.edges:
            if (t, g) in seen:
                return False
            seen.add((t, g))
        return True

    def is_folded(self) -> bool:
        return self.is_deterministic() and self.is_codeterministic()

    def canonical(self) -> tuple:
        """Breadth-first renumbering from the root; equal iff isomorphic (folded graphs)."""
        out: dict[int, dict[int, int]] = {}
        inn: dict[int, dict[int, int]] = {}
        for s, g, t in self.edges:
            out.setdefault(s, {})[g] = t
            inn.setdefault(t, {})[g] = s
        order = {self.root: 0}
        queue = deque([self.root])
        while queue:
            v = queue.popleft()
            steps = [(g, t) for g, t in out.get(v, {}).items()]
            steps += [(-g, s) for g, s in inn.get(v, {}).items()]
            for _, u in sorted(steps):
                if u not in order:
                    order[u] = len(order)
                    queue.append(u)
        edges = sorted(
            (order[s], g, order[t]) for s, g, t in self.edges if s in order and t in order
        )
        return len(order), tuple(edges)

    def read(self, word: Iterable[int], start: Optional[int] = None) -> Optional[int]:
        """End of a path labelled ``word`` (smallest id if several), or None."""
        current = {self.root if start is None else start}
        for x in word:
            if x > 0:
                current = {t for s, g, t in self.edges if g == x and s in current}
            else:
                current = {s for s, g, t in self.edges if g == -x and t in current}
            if not current:
                return None
        return min(current)


class _Folder:
    """Mutable folded graph with union-find over vertex ids."""

    def __init__(self):
        self.parent: list[int] = []
        self.out: list[dict[int, int]] = []
        self.inn: list[dict[int, int]] = []
        self.live = 0
        self.root = self.new_vertex()

    @classmethod
    def from_graph(cls, graph: InverseWordGraph, order: Optional[random.Random] = None) -> "_Folder":
        folder = cls.__new__(cls)
        ids = {v: i for i, v in enumerate(sorted(graph.vertices))}
        size = len(ids)
        folder.parent = list(range(size))
        folder.out = [{} for _ in range(size)]
        folder.inn = [{} for _ in range(size)]
        folder.live = size
        folder.root = ids[graph.root]
        edges = sorted((ids[s], g, ids[t]) for s, g, t in graph.edges)
        if order is not None:
            order.shuffle(edges)
        for s, g, t in edges:
            folder.add_edge(s, g, t)
        return folder

    def new_vertex(self) -> int:
        self.parent.append(len(self.parent))
        self.out.append({})
        self.inn.append({})
        self.live += 1
        return len(self.parent) - 1

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def add_edge(self, s: int, g: int, t: int) -> None:
        s, t = self.find(s), self.find(t)
        if g in self.out[s]:
            self.merge(self.out[s][g], t)
        elif g in self.inn[t]:
            self.merge(self.inn[t][g], s)
        else:
            self.out[s][g] = t
            self.inn[t][g] = s

    def merge(self, a: int, b: int) -> None:
        pending = [(a, b)]
        while pending:
            a, b = pending.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if len(self.out[a]) + len(self.inn[a]) < len(self.out[b]) + len(self.inn[b]):
                a, b = b, a
            if b == self.root:
                self.root = a
            self.parent[b] = a
            self.live -= 1
            for g, t in self.out[b].items():
                if g in self.out[a]:
                    pending.append((self.out[a][g], t))
                else:
                    self.out[a][g] = t
            for g, s in self.inn[b].items():
                if g in self.inn[a]:
                    pending.append((self.inn[a][g], s))
                else:
                    self.inn[a][g] = s
            self.out[b] = {}
            self.inn[b] = {}

    def step(self, v: int, x: int) -> Optional[int]:
        got = self.out[v].get(x) if x > 0 else self.inn[v].get(-x)
        return None if got is None else self.find(got)

    def read(self, word: Iterable[int], start: Optional[int] = None) -> Optional[int]:
        v = self.find(self.root if start is None else start)
        for x in word:
            v = self.step(v, x)
            if v is None:
                return None
        return v

    def vertices(self) -> list[int]:
        return [v for v in range(len(self.parent)) if self.parent[v] == v]

    def snapshot(self) -> InverseWordGraph:
        verts = self.vertices()
        edges = frozenset(
            (v, g, self.find(t)) for v in verts for g, t in self.out[v].items()
        )
        return InverseWordGraph(frozenset(verts), edges, self.find(self.root))

    def sew_loop(self, v: int, word: Sequence[int], max_vertices: int) -> None:
        """Make ``word`` label a loop at ``v``, reusing existing edges at both ends."""
        v = self.find(v)
        n = len(word)
        i, x = 0, v
        while i < n:
            nxt = self.step(x, word[i])
            if nxt is None:
                break
            x, i = nxt, i + 1
        if i == n:
            if x != v:
                self.merge(x, v)
            return
        j, y = n, v
        while j > i:
            prev = self.step(y, -word[j - 1])
            if prev is None:
                break
            y, j = prev, j - 1
        if i == j:
            self.merge(x, y)
            return
        if self.live + (j - i - 1) > max_vertices:
            raise ResourceLimit(f"graph would exceed {max_vertices} vertices")
        cur = x
        for k in range(i, j):
            target = y if k == j - 1 else self.new_vertex()
            g = word[k]
            if g > 0:
                self.add_edge(cur, g, target)
            else:
                self.add_edge(target, -g, cur)
            cur = target

    def bfs_order(self) -> list[int]:
        root = self.find(self.root)
        order = {root: None}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in [*self.out[v].values(), *self.inn[v].values()]:
                u = self.find(u)
                if u not in order:
                    order[u] = None
                    queue.append(u)
        return list(order)

    def expand(self, relators: Sequence[Word], max_vertices: int) -> None:
        # nearest vertices first, so a round cut short by the vertex limit
        # has still expanded around the root
        for v in self.bfs_order():
            for r in relators:
                self.sew_loop(v, r, max_vertices)


def fold(graph: InverseWordGraph, seed: Optional[int] = None) -> InverseWordGraph:
    """Fold ``graph`` into a deterministic, co-deterministic graph.

    ``seed`` shuffles the order in which edges are inserted; the result is
    the same up to renumbering for every order.
    """
    order = random.Random(seed) if seed is not None else None
    return _Folder.from_graph(graph, order).snapshot()


def expand_round(
    graph: InverseWordGraph, pres: SpecialInversePresentation, limits: Limits = DEFAULT_LIMITS
) -> InverseWordGraph:
    folder = _Folder.from_graph(graph)
    folder.expand(pres.relators, limits.max_vertices)
    return folder.snapshot()


class StephenSearch:
    """Incrementally expanded approximation, shared across many goals."""

    def __init__(self, pres: SpecialInversePresentation, limits: Limits = DEFAULT_LIMITS):
        self.pres = pres
        self.limits = limits
        self.folder = _Folder()
        self.rounds = 0
        self.exhausted = False

    @property
    def vertices_used(self) -> int:
        return self.folder.live

    def advance(self) -> bool:
        """Run one more round; False once the limits are exhausted."""
        if self.exhausted or self.rounds >= self.limits.max_rounds:
            self.exhausted = True
            return False
        before = self.folder.snapshot().canonical() if self.rounds else None
        try:
            self.folder.expand(self.pres.relators, self.limits.max_vertices)
        except ResourceLimit:
            # the partially expanded graph is still a valid approximation
            self.exhausted = True
        self.rounds += 1
        if before is not None and self.folder.snapshot().canonical() == before:
            # fixpoint: this is the full Schutzenberger graph
            self.exhausted = True
        return True

    def holds(self, word: Iterable[int]) -> bool:
        root = self.folder.find(self.folder.root)
        return self.folder.read(word) == root

    def result(self, proved: bool) -> ProofResult:
        return ProofResult(
            Status.PROVED if proved else Status.UNKNOWN, self.rounds, self.vertices_used
        )

    def prove(self, *goals: Iterable[int]) -> ProofResult:
        goals = [Word(g) for g in goals]
        while True:
            if all(self.holds(g) for g in goals):
                return self.result(True)
            if not self.advance():
                return self.result(False)

    @property
    def graph(self) -> InverseWordGraph:
        return self.folder.snapshot()


def proves_identity(
    pres: SpecialInversePresentation, u: Iterable[int], limits: Limits = DEFAULT_LIMITS
) -> ProofResult:
    return StephenSearch(pres, limits).prove(u)


def invertibility_goals(u: Iterable[int]) -> tuple[Word, Word]:
    u = Word(u)
    return u + invert(u), invert(u) + u


def proves_invertible(
    pres: SpecialInversePresentation, u: Iterable[int], limits: Limits = DEFAULT_LIMITS
) -> ProofResult:
    return StephenSearch(pres, limits).prove(*invertibility_goals(u))


def refine_factorization(
    pres: SpecialInversePresentation,
    base: Factorization,
    limits: Limits = DEFAULT_LIMITS,
    search: Optional[StephenSearch] = None,
) -> Factorization:
    """Add a cut at every prefix the bounded Stephen procedure proves invertible."""
    search = search or StephenSearch(pres, limits)
    relator = base.relator
    cuts = set(base.cuts)
    pending = [k for k in range(1, len(relator)) if k not in cuts]
    while True:
        for k in list(pending):
            if all(search.holds(g) for g in invertibility_goals(relator[:k])):
                cuts.add(k)
                pending.remove(k)
        if not pending or not search.advance():
            break
    return Factorization(relator, tuple(sorted(cuts)), Provenance.STEPHEN_REFINED)


def to_dot(graph: InverseWordGraph, name: str = "stephen") -> str:
    n, edges = graph.canonical()
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for v in range(n):
        attrs = 'shape=doublecircle' if v == 0 else 'shape=circle'
        lines.append(f'  v{v} [{attrs}, label="{v}"];')
    for s, g, t in edges:
        lines.append(f'  v{s} -> v{t} [label="{generator_name(g)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
