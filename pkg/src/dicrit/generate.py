"""Isomorph-free exhaustive generation.

Three generators, all built on the same canonical-labelling engine:

* tournaments(n): canonical augmentation.  A tournament on m+1 vertices is
  kept only if the vertex just added lies in the automorphism orbit of the
  vertex the canonical labelling puts last, so every isomorphism class is
  produced from exactly one parent class and exactly once.
* undirected_graphs(n, m, min_deg): the same augmentation scheme on
  undirected graphs, with feasibility pruning against the target edge count
  and degree bound at every level.
* orientations(g, min_in, min_out): backtracking over the edges of a fixed
  undirected graph with degree-feasibility pruning; per isomorphism class
  exactly one orientation survives, the one whose arc list is lexicographically
  least over the automorphism group of g.

Orientations of non-isomorphic base graphs are never isomorphic (the
underlying graph is an invariant), so streaming bases and deduping inside
each base is already globally duplicate-free.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .canon import canonical_data, canonical_form, decode_code, orbit
from .digraph import Digraph, build, build_from_rows
from .errors import InfeasibleError, TooLargeError
from .undirected import (
    UGraph,
    uautomorphisms,
    ubuild_from_rows,
    ucanonical_data,
    udecode,
)

MAX_TOURNAMENT_N = 9
MAX_UNDIRECTED_N = 10
MAX_ORIENT_EDGES = 30

_SHARD_LEVEL = 6


def _assert_strictly_increasing(codes: Sequence[bytes]) -> None:
    # isomorph-freeness within a generated level, asserted during generation
    for a, b in zip(codes, codes[1:]):
        assert a < b, "duplicate isomorphism class in generated stream"


def _tournament_children(t: Digraph) -> list[bytes]:
    """Canonical codes of the accepted one-vertex extensions of t."""
    m = t.n
    seen: set[bytes] = set()
    for bits in range(1 << m):
        rows = list(t.out_adj)
        zrow = 0
        for u in range(m):
            if bits >> u & 1:
                zrow |= 1 << u
            else:
                rows[u] |= 1 << m
        rows.append(zrow)
        child = build_from_rows(m + 1, rows)
        data = canonical_data(child)
        if m in orbit(data.generators, data.order[m]):
            seen.add(data.code)
    out = sorted(seen)
    _assert_strictly_increasing(out)
    return out


def _expand_tournament_level(codes: list[bytes]) -> list[bytes]:
    nxt: list[bytes] = []
    for c in codes:
        nxt.extend(_tournament_children(decode_code(c)))
    nxt.sort()
    _assert_strictly_increasing(nxt)
    return nxt


def tournaments(n: int, shard: tuple[int, int] | None = None) -> Iterator[Digraph]:
    """All tournaments on n vertices, one per isomorphism class.

    With shard=(i, k) only the i-th of k slices is produced: the augmentation
    tree is split at an intermediate level and each slice takes every k-th
    subtree.  Slices are disjoint and their union is the full stream (classes
    produced from distinct parents never coincide)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > MAX_TOURNAMENT_N:
        raise TooLargeError(f"tournament enumeration supports n <= {MAX_TOURNAMENT_N}")
    i, k = shard if shard is not None else (0, 1)
    if k < 1 or not 0 <= i < k:
        raise ValueError(f"bad shard {i}/{k}")

    codes = [canonical_form(build(1, []))]
    size = 1
    split = n if k == 1 else min(n, _SHARD_LEVEL)
    while size < split:
        codes = _expand_tournament_level(codes)
        size += 1
    if k > 1:
        codes = codes[i::k]
        while size < n:
            codes = _expand_tournament_level(codes)
            size += 1
    for c in codes:
        yield decode_code(c)


# -- undirected graphs with prescribed size and minimum degree -----------------


def _ugraph_feasible(n: int, m: int, min_deg: int, k: int, ecount: int,
                     degs: Sequence[int]) -> bool:
    """Can a graph on k vertices still grow to n vertices, m edges, min degree?"""
    rem = n - k
    if ecount > m:
        return False
    if ecount + k * rem + rem * (rem - 1) // 2 < m:
        return False
    deficit = 0
    for dg in degs:
        if dg + rem < min_deg:
            return False
        if dg < min_deg:
            deficit += min_deg - dg
    if deficit > m - ecount:
        return False
    # future vertices: their degree sum is (m - ecount) + (edges among them)
    if rem and (m - ecount) + rem * (rem - 1) // 2 < rem * min_deg:
        return False
    return True


def _ugraph_children(g: UGraph, n: int, m: int, min_deg: int) -> list[bytes]:
    k = g.n
    lo = max(0, min_deg - (n - k - 1))
    hi = m - g.edge_count
    seen: set[bytes] = set()
    for bits in range(1 << k):
        bc = bits.bit_count()
        if bc < lo or bc > hi:
            continue
        rows = [g.adj[u] | (((bits >> u) & 1) << k) for u in range(k)]
        rows.append(bits)
        child = ubuild_from_rows(k + 1, rows)
        if not _ugraph_feasible(n, m, min_deg, k + 1, child.edge_count, child.degrees()):
            continue
        data = ucanonical_data(child)
        if k in orbit(data.generators, data.order[k]):
            seen.add(data.code)
    out = sorted(seen)
    _assert_strictly_increasing(out)
    return out


def undirected_graphs(n: int, m: int, min_deg: int = 0) -> Iterator[UGraph]:
    """All undirected graphs with n vertices, exactly m edges, min degree bound."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > MAX_UNDIRECTED_N:
        raise TooLargeError(f"undirected enumeration supports n <= {MAX_UNDIRECTED_N}")
    if m < (n * min_deg + 1) // 2:
        raise InfeasibleError(f"{m} edges cannot give {n} vertices min degree {min_deg}")
    if m > n * (n - 1) // 2:
        raise InfeasibleError(f"{m} edges do not fit on {n} vertices")

    if not _ugraph_feasible(n, m, min_deg, 1, 0, (0,)):
        return
    codes = [ucanonical_data(ubuild_from_rows(1, [0])).code]
    size = 1
    while size < n:
        nxt: list[bytes] = []
        for c in codes:
            nxt.extend(_ugraph_children(udecode(c), n, m, min_deg))
        nxt.sort()
        _assert_strictly_increasing(nxt)
        codes = nxt
        size += 1
    for c in codes:
        yield udecode(c)


# -- orientations of a fixed undirected graph -----------------------------------


def orientations(g: UGraph, min_in: int = 0, min_out: int = 0) -> Iterator[Digraph]:
    """All orientations of g with min in-/out-degree bounds, one per class.

    Backtracking over a fixed edge order; after directing an edge, the two
    touched endpoints must still be able to reach both degree bounds through
    their undirected edges left.  A finished orientation is emitted only if
    its sorted arc list is minimal over Aut(g)."""
    if g.edge_count > MAX_ORIENT_EDGES:
        raise TooLargeError(f"orientation enumeration supports m <= {MAX_ORIENT_EDGES}")
    n = g.n
    edges = sorted(g.edges())
    m_e = len(edges)
    nontrivial = [a for a in uautomorphisms(g) if any(a[v] != v for v in range(n))]

    left = [0] * n  # undirected edges not yet directed, per vertex
    for u, v in edges:
        left[u] += 1
        left[v] += 1
    if any(left[v] < min_in + min_out for v in range(n)):
        return

    indeg = [0] * n
    outdeg = [0] * n
    arcs: list[tuple[int, int]] = []
    results: list[Digraph] = []

    def emit() -> None:
        if nontrivial:
            key = sorted(arcs)
            for s in nontrivial:
                if sorted((s[a], s[b]) for a, b in arcs) < key:
                    return
        rows = [0] * n
        for a, b in arcs:
            rows[a] |= 1 << b
        results.append(build_from_rows(n, rows))

    def rec(idx: int) -> None:
        if idx == m_e:
            emit()
            return
        u, v = edges[idx]
        left[u] -= 1
        left[v] -= 1
        for a, b in ((u, v), (v, u)):
            outdeg[a] += 1
            indeg[b] += 1
            if (indeg[u] + left[u] >= min_in and outdeg[u] + left[u] >= min_out
                    and indeg[v] + left[v] >= min_in and outdeg[v] + left[v] >= min_out):
                arcs.append((a, b))
                rec(idx + 1)
                arcs.pop()
            outdeg[a] -= 1
            indeg[b] -= 1
        left[u] += 1
        left[v] += 1

    rec(0)
    yield from results


def labeled_orientations(g: UGraph) -> Iterator[Digraph]:
    """All 2^m labeled orientations of g, streamed, no isomorphism dedup."""
    n = g.n
    edges = sorted(g.edges())
    for bits in range(1 << len(edges)):
        rows = [0] * n
        for i, (u, v) in enumerate(edges):
            if bits >> i & 1:
                rows[v] |= 1 << u
            else:
                rows[u] |= 1 << v
        yield build_from_rows(n, rows)


def oriented_graphs(n: int) -> Iterator[Digraph]:
    """Every oriented graph on n vertices up to isomorphism.

    Streamed by underlying edge count, then by base graph, then by
    orientation; the complete base is handled by the tournament generator."""
    top = n * (n - 1) // 2
    for m in range(top + 1):
        if m == top:
            yield from tournaments(n)
        else:
            for base in undirected_graphs(n, m, 0):
                yield from orientations(base)
