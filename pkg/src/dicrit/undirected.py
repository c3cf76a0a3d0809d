"""Small undirected graphs: the base objects whose orientations we enumerate.

Same bitset representation and the same canonical-labelling engine as the
directed side (an undirected graph is handed to the canonizer with its
adjacency playing both the out- and in-role)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import canon
from .canon import group_elements
from .errors import DuplicateArcError, LoopArcError, TooLargeError


@dataclass(frozen=True)
class UGraph:
    n: int
    adj: tuple[int, ...]
    edge_count: int

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            while row:
                low = row & -row
                row ^= low
                yield (u, low.bit_length() - 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.adj)

    def min_degree(self) -> int:
        return min(self.degrees())

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2


def ubuild_from_rows(n: int, rows: Sequence[int]) -> UGraph:
    count = sum(r.bit_count() for r in rows)
    assert count % 2 == 0
    return UGraph(n, tuple(rows), count // 2)


def ubuild(n: int, edges: Iterable[tuple[int, int]]) -> UGraph:
    if n < 1 or n > 62:
        raise TooLargeError(f"vertex count {n} outside 1..62")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopArcError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if rows[u] >> v & 1:
            raise DuplicateArcError(f"duplicate edge ({u},{v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return ubuild_from_rows(n, rows)


def ucanonical_form(g: UGraph) -> bytes:
    if g.n > canon.MAX_CANON_VERTICES:
        raise TooLargeError(f"canonical labelling supports n <= {canon.MAX_CANON_VERTICES}")
    enc, _, _ = canon._canonize(g.n, g.adj, g.adj)
    return canon._pack(g.n, enc)


def ucanonical_data(g: UGraph) -> canon.CanonData:
    if g.n > canon.MAX_CANON_VERTICES:
        raise TooLargeError(f"canonical labelling supports n <= {canon.MAX_CANON_VERTICES}")
    enc, order, gens = canon._canonize(g.n, g.adj, g.adj)
    return canon.CanonData(canon._pack(g.n, enc), order, tuple(gens))


def udecode(code: bytes) -> UGraph:
    n, rows = canon._unpack(code)
    return ubuild_from_rows(n, rows)


def uare_isomorphic(g1: UGraph, g2: UGraph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return ucanonical_form(g1) == ucanonical_form(g2)


def uautomorphisms(g: UGraph) -> list[tuple[int, ...]]:
    data = ucanonical_data(g)
    return group_elements(g.n, data.generators)


def complete_graph(n: int) -> UGraph:
    return ubuild(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def circulant(n: int, connections: Iterable[int]) -> UGraph:
    """Vertices 0..n-1, i adjacent to i +- c (mod n) for each connection c."""
    edges = set()
    for c in connections:
        for i in range(n):
            u, v = i, (i + c) % n
            if u != v:
                edges.add((min(u, v), max(u, v)))
    return ubuild(n, sorted(edges))
