"""Oriented-graph core type.

A Digraph is a loopless directed graph without 2-cycles on at most 62
vertices.  Adjacency is stored as one out-neighbour bitset per vertex, so a
single machine word holds a neighbourhood and adjacency tests are constant
time in the search inner loops.  Values are immutable after build; every
surgery operation returns a new value, which makes them safe to share across
workers.

Vertices are 0-based everywhere in the API.  Text formats (see formats.py)
present them 1-based, matching the usual matrix labelling convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    DuplicateArcError,
    LastVertexError,
    LoopArcError,
    MissingArcError,
    TooLargeError,
    TwoCycleError,
)

MAX_VERTICES = 62


class Arc(NamedTuple):
    tail: int
    head: int


@dataclass(frozen=True)
class Digraph:
    """Immutable oriented graph.

    n         -- vertex count, 1 <= n <= 62
    out_adj   -- per-vertex bitset of out-neighbours
    in_adj    -- per-vertex bitset of in-neighbours (transpose of out_adj)
    arc_count -- total number of arcs
    """

    n: int
    out_adj: tuple[int, ...]
    in_adj: tuple[int, ...]
    arc_count: int

    # -- queries -------------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def arcs(self) -> Iterator[Arc]:
        """All arcs in (tail, head) lexicographic order."""
        for u in range(self.n):
            row = self.out_adj[u]
            while row:
                low = row & -row
                yield Arc(u, low.bit_length() - 1)
                row ^= low

    def out_degree(self, v: int) -> int:
        return self.out_adj[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_adj[v].bit_count()

    def degree(self, v: int) -> int:
        return self.out_adj[v].bit_count() + self.in_adj[v].bit_count()

    def degrees(self) -> tuple[tuple[int, int], ...]:
        """Per-vertex (in, out) degree pairs."""
        return tuple(
            (self.in_adj[v].bit_count(), self.out_adj[v].bit_count())
            for v in range(self.n)
        )

    def min_in_degree(self) -> int:
        return min(r.bit_count() for r in self.in_adj)

    def min_out_degree(self) -> int:
        return min(r.bit_count() for r in self.out_adj)

    def is_tournament(self) -> bool:
        return 2 * self.arc_count == self.n * (self.n - 1)

    def nonadjacent_pairs(self) -> Iterator[tuple[int, int]]:
        """Unordered vertex pairs with no arc in either direction, u < v."""
        for u in range(self.n):
            joined = self.out_adj[u] | self.in_adj[u]
            for v in range(u + 1, self.n):
                if not (joined >> v & 1):
                    yield u, v

    # -- surgery (returns new values) -----------------------------------

    def remove_arc(self, arc: tuple[int, int]) -> Digraph:
        u, v = arc
        if not (0 <= u < self.n and 0 <= v < self.n) or not self.has_arc(u, v):
            raise MissingArcError(f"no arc {u}->{v}")
        out = list(self.out_adj)
        inn = list(self.in_adj)
        out[u] &= ~(1 << v)
        inn[v] &= ~(1 << u)
        return Digraph(self.n, tuple(out), tuple(inn), self.arc_count - 1)

    def add_arc(self, arc: tuple[int, int]) -> Digraph:
        u, v = arc
        if u == v:
            raise LoopArcError(f"loop at {u}")
        if self.has_arc(u, v):
            raise DuplicateArcError(f"arc {u}->{v} already present")
        if self.has_arc(v, u):
            raise TwoCycleError(f"adding {u}->{v} against existing {v}->{u}")
        out = list(self.out_adj)
        inn = list(self.in_adj)
        out[u] |= 1 << v
        inn[v] |= 1 << u
        return Digraph(self.n, tuple(out), tuple(inn), self.arc_count + 1)

    def delete_vertex(self, v: int) -> Digraph:
        """Remove v and compact the remaining indices, order preserved."""
        if self.n == 1:
            raise LastVertexError("cannot delete the only vertex")
        if not 0 <= v < self.n:
            raise ValueError(f"no vertex {v}")
        low = (1 << v) - 1
        out = []
        for u in range(self.n):
            if u == v:
                continue
            row = self.out_adj[u] & ~(1 << v)
            out.append((row & low) | ((row >> (v + 1)) << v))
        return build_from_rows(self.n - 1, out)

    def relabel(self, perm: Iterable[int]) -> Digraph:
        """Apply a permutation: new index perm[v] receives old vertex v."""
        perm = list(perm)
        out = [0] * self.n
        for u in range(self.n):
            row = self.out_adj[u]
            new_row = 0
            while row:
                low = row & -row
                new_row |= 1 << perm[low.bit_length() - 1]
                row ^= low
            out[perm[u]] = new_row
        return build_from_rows(self.n, out)

    def transpose(self) -> Digraph:
        return Digraph(self.n, self.in_adj, self.out_adj, self.arc_count)


def build_from_rows(n: int, out_rows: Iterable[int]) -> Digraph:
    """Assemble a Digraph from trusted out-neighbour bitsets (no validation
    beyond the transpose; callers guarantee looplessness and orientation)."""
    out = tuple(out_rows)
    inn = [0] * n
    for u in range(n):
        row = out[u]
        while row:
            low = row & -row
            inn[low.bit_length() - 1] |= 1 << u
            row ^= low
    return Digraph(n, out, tuple(inn), sum(r.bit_count() for r in out))


def build(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Validated constructor: rejects loops, 2-cycles, duplicates, n > 62."""
    if n > MAX_VERTICES:
        raise TooLargeError(f"n={n} exceeds {MAX_VERTICES}")
    if n < 1:
        raise TooLargeError("need at least one vertex")
    out = [0] * n
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc endpoint out of range: {u}->{v}")
        if u == v:
            raise LoopArcError(f"loop at {u}")
        if out[u] >> v & 1:
            raise DuplicateArcError(f"arc {u}->{v} repeated")
        if out[v] >> u & 1:
            raise TwoCycleError(f"both {u}->{v} and {v}->{u} given")
        out[u] |= 1 << v
    return build_from_rows(n, out)
