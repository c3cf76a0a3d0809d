"""Acyclicity, 2-dicolorability, dichromatic number, dicriticality.

Two independent 2-colorability routes are kept on purpose.  The default,
`two_dicolorable`, is a backtracking search with incremental cycle checks.
`two_dicolorable_oracle` is a line-by-line transcription of the published
enumeration (try every 2-coloring; for every color class, run the recursive
cycle search from every vertex) and exists so the fast version can be tested
against it differentially.  Do not fold them together.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .digraph import Arc, Digraph

RED = 0
BLUE = 1


@dataclass(frozen=True)
class TwoColoring:
    """A red/blue vertex assignment whose classes both induce acyclic graphs."""

    assignment: tuple[int, ...]

    @property
    def red(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.assignment) if c == RED)

    @property
    def blue(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.assignment) if c == BLUE)


@dataclass(frozen=True)
class CycleWitness:
    """A directed cycle, as the vertex sequence v0 -> v1 -> ... -> v0.

    Falsy, so `if is_acyclic(d):` reads correctly.  `color` is filled in when
    the cycle was found inside one class of an attempted coloring."""

    vertices: tuple[int, ...]
    color: int | None = None

    def __bool__(self) -> bool:
        return False


def _subset_mask(d: Digraph, subset: Iterable[int] | None) -> int:
    if subset is None:
        return (1 << d.n) - 1
    mask = 0
    for v in subset:
        if not 0 <= v < d.n:
            raise ValueError(f"vertex {v} out of range for n={d.n}")
        mask |= 1 << v
    return mask


def is_acyclic(d: Digraph, subset: Iterable[int] | None = None) -> bool | CycleWitness:
    """True if the subdigraph induced on subset (default: all) has no circuit.

    Otherwise returns a CycleWitness, which is falsy.  Iterative DFS with an
    explicit stack; gray vertices on the current path expose the cycle."""
    mask = _subset_mask(d, subset)
    out = d.out_adj
    state = [0] * d.n  # 0 unvisited, 1 on path, 2 done
    for root in range(d.n):
        if not mask >> root & 1 or state[root]:
            continue
        stack = [(root, out[root] & mask)]
        path = [root]
        state[root] = 1
        while stack:
            v, rem = stack[-1]
            if rem:
                low = rem & -rem
                stack[-1] = (v, rem ^ low)
                w = low.bit_length() - 1
                if state[w] == 1:
                    return CycleWitness(tuple(path[path.index(w):]))
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, out[w] & mask))
                    path.append(w)
            else:
                stack.pop()
                path.pop()
                state[v] = 2
    return True


def _closes_cycle(out: Sequence[int], mask: int, v: int) -> bool:
    """Does the class `mask` contain a circuit through v?

    Assumes mask minus v was acyclic, so any circuit goes through v; it exists
    iff v is reachable from its out-neighbours within the mask."""
    reach = out[v] & mask
    frontier = reach
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nxt |= out[low.bit_length() - 1]
        frontier = nxt & mask & ~reach
        reach |= frontier
    return bool(reach >> v & 1)


def _color_order(d: Digraph) -> list[int]:
    return sorted(range(d.n), key=lambda v: (-d.degree(v), v))


def two_dicolorable(d: Digraph) -> TwoColoring | None:
    """A 2-coloring with acyclic classes, or None.

    Backtracking over vertices in descending total degree (ties by index),
    red tried before blue, vertex 0 forced red to kill the color-swap
    symmetry.  Only cycles through the vertex just placed are checked.  The
    returned coloring is the first one found in this fixed exploration order,
    hence deterministic."""
    n = d.n
    out = d.out_adj
    order = _color_order(d)
    masks = [0, 0]
    assign = [RED] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for color in ((RED,) if v == 0 else (RED, BLUE)):
            with_v = masks[color] | 1 << v
            if not _closes_cycle(out, with_v, v):
                masks[color] = with_v
                assign[v] = color
                if place(i + 1):
                    return True
                masks[color] ^= 1 << v
        return False

    if place(0):
        return TwoColoring(tuple(assign))
    return None


# -- literal transcription of the published search ------------------------------


def _contains_cycle(t: Sequence[int], a: frozenset[int], m: frozenset[int], f: int) -> bool:
    """Recursive cycle search exactly as published: extend the path m by f,
    walk arcs from f into the class a, report a cycle when an arc returns to
    the path."""
    m1 = m | {f}
    for v in sorted(a):
        if t[f] >> v & 1:
            if v in m:
                return True
            if _contains_cycle(t, a, m1, v):
                return True
    return False


def two_dicolorable_oracle(d: Digraph) -> TwoColoring | None:
    """Reference 2-colorability test: try all 2^n colorings, scan both classes
    with the recursive cycle search started from every vertex.  Slow on
    purpose; kept verbatim as the differential-testing baseline."""
    n = d.n
    t = d.out_adj
    empty: frozenset[int] = frozenset()
    for bits in range(1 << n):
        good = True
        for cls in (RED, BLUE):
            a = frozenset(v for v in range(n) if (bits >> v & 1) == cls)
            for f in range(n):
                if _contains_cycle(t, a, empty, f):
                    good = False
        if good:
            return TwoColoring(tuple((bits >> v) & 1 for v in range(n)))
    return None


# -- k colors and criticality ----------------------------------------------------


def k_colorable(d: Digraph, k: int) -> tuple[int, ...] | None:
    """An assignment into at most k acyclic classes, or None.

    Same backtracking as two_dicolorable, with the usual symmetry breaking for
    unlabeled classes: a vertex may open at most one new color."""
    if k < 1:
        return None
    n = d.n
    out = d.out_adj
    order = _color_order(d)
    masks = [0] * k
    assign = [0] * n

    def place(i: int, opened: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for color in range(min(opened + 1, k)):
            with_v = masks[color] | 1 << v
            if not _closes_cycle(out, with_v, v):
                masks[color] = with_v
                assign[v] = color
                if place(i + 1, max(opened, color + 1)):
                    return True
                masks[color] ^= 1 << v
        return False

    if place(0, 0):
        return tuple(assign)
    return None


def dichromatic_number(d: Digraph) -> int:
    """Exact chi_d: smallest k such that V splits into k acyclic classes."""
    if is_acyclic(d):
        return 1
    if two_dicolorable(d) is not None:
        return 2
    k = 3
    while True:
        if k_colorable(d, k) is not None:
            return k
        k += 1


def _chi_below(d: Digraph, k: int) -> bool:
    """chi_d(d) < k, dispatched to the cheapest complete test."""
    if k - 1 == 1:
        return bool(is_acyclic(d))
    if k - 1 == 2:
        return is_acyclic(d) or two_dicolorable(d) is not None
    return k_colorable(d, k - 1) is not None


def is_k_dicritical(d: Digraph, k: int) -> bool:
    """True iff chi_d(d) >= k and every proper subdigraph has chi_d < k.

    Only arc deletions are tested, which suffices: chi_d is monotone under
    subdigraphs, and every proper subdigraph of a graph without isolated
    vertices is contained in some one-arc-deleted subdigraph (a missing arc
    gives it directly; a missing vertex is covered by deleting any of its
    incident arcs).  A graph with an isolated vertex is never k-dicritical
    for k >= 2 (deleting that vertex leaves chi_d unchanged), so it is
    rejected up front rather than trusting the arc scan."""
    if k < 2:
        raise ValueError("criticality is defined here for k >= 2")
    if any(d.degree(v) == 0 for v in range(d.n)):
        return False
    if _chi_below(d, k):
        return False
    return all(_chi_below(d.remove_arc(a), k) for a in d.arcs())


def min_degree_prune(d: Digraph, k: int) -> bool:
    """Necessary condition for k-dicriticality: min in- and out-degree k-1."""
    return d.min_in_degree() >= k - 1 and d.min_out_degree() >= k - 1
