"""Canonical labelling, isomorphism, deduplication, sub-digraph containment.

The canonizer is a complete individualization-refinement search for graphs of
at most 16 vertices.  Vertices are first partitioned by (in, out) degree and
the partition is refined by iterated neighbourhood degree profiles (for every
vertex, the vector of out- and in-adjacency counts into each current cell)
until stable.  Cells are kept in an order determined only by those profiles,
so the ordered partition is identical for isomorphic inputs.  Remaining
symmetry is resolved by backtracking: individualize each vertex of the first
non-singleton cell in turn, re-refine, and recurse; every discrete leaf gives
a candidate labelling and the canonical form is the lexicographically least
row-major adjacency encoding over all leaves.

Automorphisms discovered when two leaves produce equal encodings are used to
prune sibling branches (a branch is skipped when a known automorphism fixing
the current individualization path maps it onto an already-handled sibling).
The recorded automorphisms generate the full automorphism group, which the
enumeration module uses for orbit computations.

The canonical code doubles as a total order: deterministic outputs everywhere
in this package are sorted by it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .digraph import Digraph, build_from_rows
from .errors import TooLargeError

MAX_CANON_VERTICES = 16


# -- core engine --------------------------------------------------------------


def _refine(out_rows: Sequence[int], in_rows: Sequence[int],
            cells: list[list[int]]) -> list[list[int]]:
    """Stable iterated refinement of an ordered partition.

    Sub-cells produced by a split are ordered by their profile key, which is
    computed from cell positions that are already canonical, so the returned
    ordered partition is a label-independent function of the input graph."""
    while True:
        masks = [0] * len(cells)
        for i, cell in enumerate(cells):
            m = 0
            for v in cell:
                m |= 1 << v
            masks[i] = m
        changed = False
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                ov = out_rows[v]
                iv = in_rows[v]
                key = tuple(
                    ((ov & m).bit_count() << 8) | (iv & m).bit_count()
                    for m in masks
                )
                buckets.setdefault(key, []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(buckets):
                    new_cells.append(buckets[key])
        if not changed:
            return cells
        cells = new_cells


def _encode(order: Sequence[int], out_rows: Sequence[int]) -> tuple[int, ...]:
    """Row-major adjacency of the relabelled graph, one n-bit int per row."""
    enc = []
    for u in order:
        r = out_rows[u]
        x = 0
        for v in order:
            x = (x << 1) | (r >> v & 1)
        enc.append(x)
    return tuple(enc)


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p after q, as vertex maps."""
    return tuple(p[q[v]] for v in range(len(p)))


def _canonize(n: int, out_rows: Sequence[int], in_rows: Sequence[int]
              ) -> tuple[tuple[int, ...], tuple[int, ...], list[tuple[int, ...]]]:
    """Return (min encoding, one ordering achieving it, automorphism generators).

    The ordering maps canonical position -> original vertex.  Generators are
    vertex maps sigma with sigma preserving adjacency; together they generate
    the full automorphism group."""
    if n == 1:
        return (0,), (0,), []

    by_key: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        by_key.setdefault((out_rows[v].bit_count(), in_rows[v].bit_count()), []).append(v)
    cells = [by_key[k] for k in sorted(by_key)]
    cells = _refine(out_rows, in_rows, cells)

    if all(len(c) == 1 for c in cells):
        order = tuple(c[0] for c in cells)
        return _encode(order, out_rows), order, []

    best_enc: tuple[int, ...] | None = None
    best_order: tuple[int, ...] | None = None
    first_enc: tuple[int, ...] | None = None
    first_inv: list[int] | None = None  # vertex -> canonical position of first leaf
    gens: list[tuple[int, ...]] = []

    def leaf(order: tuple[int, ...]) -> None:
        nonlocal best_enc, best_order, first_enc, first_inv
        enc = _encode(order, out_rows)
        if first_enc is None:
            first_enc = enc
            first_inv = [0] * n
            for pos, v in enumerate(order):
                first_inv[v] = pos
            best_enc, best_order = enc, order
            return
        if enc == first_enc:
            # order and the first leaf label the same graph: their difference
            # is an automorphism.
            sigma = tuple(order[first_inv[v]] for v in range(n))
            if any(sigma[v] != v for v in range(n)):
                gens.append(sigma)
        if best_enc is None or enc < best_enc:
            best_enc, best_order = enc, order

    def search(cells: list[list[int]], path: list[int]) -> None:
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target is None:
            leaf(tuple(c[0] for c in cells))
            return
        cell = cells[target]
        handled: list[int] = []
        for v in cell:
            skip = False
            for g in gens:
                if g[v] in handled and all(g[p] == p for p in path):
                    skip = True
                    break
            if not skip:
                rest = [u for u in cell if u != v]
                child = cells[:target] + [[v], rest] + cells[target + 1:]
                path.append(v)
                search(_refine(out_rows, in_rows, child), path)
                path.pop()
            handled.append(v)

    search(cells, [])
    assert best_enc is not None and best_order is not None
    return best_enc, best_order, gens


def _pack(n: int, enc: tuple[int, ...]) -> bytes:
    bits = n * n
    value = 0
    for row in enc:
        value = (value << n) | row
    value <<= (-bits) % 8
    return bytes([n]) + value.to_bytes((bits + 7) // 8, "big")


def _unpack(code: bytes) -> tuple[int, list[int]]:
    n = code[0]
    value = int.from_bytes(code[1:], "big") >> ((-(n * n)) % 8)
    rows = []
    mask = (1 << n) - 1
    for i in range(n - 1, -1, -1):
        raw = (value >> (i * n)) & mask
        # _encode stores column 0 in the high bit; adjacency rows keep
        # vertex j at bit j, so mirror the row.
        row = 0
        for j in range(n):
            row |= (raw >> (n - 1 - j) & 1) << j
        rows.append(row)
    return n, rows


# -- digraph-facing API --------------------------------------------------------


@dataclass(frozen=True)
class CanonData:
    """Canonical code plus the labelling and automorphism generators behind it.

    order maps canonical position -> original vertex; generators are vertex
    maps that generate Aut(D)."""

    code: bytes
    order: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]


def _check_size(n: int) -> None:
    if n > MAX_CANON_VERTICES:
        raise TooLargeError(f"canonical labelling supports n <= {MAX_CANON_VERTICES}, got {n}")


def canonical_data(d: Digraph) -> CanonData:
    _check_size(d.n)
    enc, order, gens = _canonize(d.n, d.out_adj, d.in_adj)
    return CanonData(_pack(d.n, enc), order, tuple(gens))


def canonical_form(d: Digraph) -> bytes:
    """Canonical code; equal codes characterize isomorphism."""
    _check_size(d.n)
    enc, _, _ = _canonize(d.n, d.out_adj, d.in_adj)
    return _pack(d.n, enc)


def decode_code(code: bytes) -> Digraph:
    n, rows = _unpack(code)
    return build_from_rows(n, rows)


def canonical_digraph(d: Digraph) -> Digraph:
    """The canonically relabelled representative of d's isomorphism class."""
    return decode_code(canonical_form(d))


def are_isomorphic(d1: Digraph, d2: Digraph) -> bool:
    if d1.n != d2.n or d1.arc_count != d2.arc_count:
        return False
    if sorted(d1.degrees()) != sorted(d2.degrees()):
        return False
    return canonical_form(d1) == canonical_form(d2)


def dedupe(graphs: Iterable[Digraph]) -> list[Digraph]:
    """One canonical representative per isomorphism class, sorted by code."""
    codes = {canonical_form(d) for d in graphs}
    return [decode_code(c) for c in sorted(codes)]


def orbit(generators: Sequence[Sequence[int]], v: int) -> frozenset[int]:
    """Orbit of vertex v under the group generated by the given maps."""
    seen = {v}
    frontier = [v]
    while frontier:
        u = frontier.pop()
        for g in generators:
            w = g[u]
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return frozenset(seen)


def group_elements(n: int, generators: Sequence[Sequence[int]],
                   limit: int = 100000) -> list[tuple[int, ...]]:
    """All elements of the generated permutation group (small groups only)."""
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        p = frontier.pop()
        for g in generators:
            q = _compose(g, p)
            if q not in seen:
                if len(seen) >= limit:
                    raise TooLargeError(f"automorphism group larger than {limit}")
                seen.add(q)
                frontier.append(q)
    return sorted(seen)


def automorphisms(d: Digraph) -> list[tuple[int, ...]]:
    """The full automorphism group as vertex maps (intended for small groups)."""
    data = canonical_data(d)
    return group_elements(d.n, data.generators)


# -- sub-digraph containment ----------------------------------------------------


def find_embedding(h: Digraph, g: Digraph) -> tuple[int, ...] | None:
    """An injective vertex map sending every arc of h to an arc of g.

    Non-arcs of h are unconstrained.  Vertices of h are matched in descending
    total-degree order; candidate images are tried ascending, so the first
    embedding found is deterministic.  Returns the map h-vertex -> g-vertex,
    or None."""
    if h.n > g.n:
        return None
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    h_out, h_in = h.out_adj, h.in_adj
    g_out, g_in = g.out_adj, g.in_adj
    # degree-based candidate pools
    pools = []
    for v in order:
        ho, hi = h_out[v].bit_count(), h_in[v].bit_count()
        pools.append([w for w in range(g.n)
                      if g_out[w].bit_count() >= ho and g_in[w].bit_count() >= hi])

    image = [-1] * h.n
    used = [False] * g.n

    def extend(depth: int) -> bool:
        if depth == h.n:
            return True
        v = order[depth]
        ov, iv = h_out[v], h_in[v]
        for w in pools[depth]:
            if used[w]:
                continue
            ok = True
            for d2 in range(depth):
                u = order[d2]
                x = image[u]
                if ov >> u & 1 and not g_out[w] >> x & 1:
                    ok = False
                    break
                if iv >> u & 1 and not g_in[w] >> x & 1:
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(depth + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    if extend(0):
        return tuple(image)
    return None


def contains_subdigraph(h: Digraph, g: Digraph) -> bool:
    """True iff some injective vertex map sends A(h) into A(g).

    When both graphs are tournaments and h has exactly one vertex fewer, the
    test reduces to isomorphism against each vertex-deleted subtournament,
    which is much cheaper than general backtracking."""
    if h.n > g.n:
        return False
    if h.is_tournament() and g.is_tournament() and h.n == g.n - 1:
        target = canonical_form(h)
        return any(canonical_form(g.delete_vertex(v)) == target for v in range(g.n))
    return find_embedding(h, g) is not None
