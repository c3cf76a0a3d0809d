"""Independent re-checks of the witnesses stored in reports.

The search code proves positive claims by attaching witnesses: a coloring,
a cycle, or an embedding.  Everything here re-validates those objects with
a deliberately different algorithm (sink peeling instead of depth-first
search), so a bug in the search cannot confirm its own output.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .coloring import CycleWitness, TwoColoring, two_dicolorable_oracle
from .digraph import Digraph


def peel_acyclic(d: Digraph, vertices: Iterable[int] | None = None) -> bool:
    """Acyclicity by repeatedly deleting sinks.

    Shares no code with coloring.is_acyclic; a digraph is acyclic exactly
    when sink deletion eats the whole vertex set."""
    if vertices is None:
        mask = (1 << d.n) - 1
    else:
        mask = 0
        for v in vertices:
            if not 0 <= v < d.n:
                return False
            mask |= 1 << v
    while mask:
        sinks = 0
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            if d.out_adj[low.bit_length() - 1] & mask == 0:
                sinks |= low
        if not sinks:
            return False
        mask ^= sinks
    return True


def check_coloring(d: Digraph, assignment: Sequence[int], k: int) -> bool:
    """Every vertex gets a color in 0..k-1 and every class is acyclic."""
    if len(assignment) != d.n:
        return False
    if any(not 0 <= c < k for c in assignment):
        return False
    for color in set(assignment):
        cls = [v for v in range(d.n) if assignment[v] == color]
        if not peel_acyclic(d, cls):
            return False
    return True


def check_two_coloring(d: Digraph, coloring: TwoColoring) -> bool:
    return check_coloring(d, coloring.assignment, 2)


def check_cycle(d: Digraph, witness: CycleWitness) -> bool:
    """Distinct in-range vertices and every consecutive arc present.

    Oriented graphs have no loops or digons, so a genuine directed cycle
    has length at least 3."""
    seq = witness.vertices
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < d.n for v in seq):
        return False
    return all(d.has_arc(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def check_embedding(h: Digraph, g: Digraph, mapping: Sequence[int]) -> bool:
    """mapping is injective on V(h) and carries every arc of h to an arc of g."""
    if len(mapping) != h.n or len(set(mapping)) != h.n:
        return False
    if any(not 0 <= x < g.n for x in mapping):
        return False
    return all(g.has_arc(mapping[u], mapping[v]) for u, v in h.arcs())


def check_three_dichromatic(d: Digraph) -> bool:
    """chi >= 3 established by the exhaustive two-coloring oracle.

    Negative claims carry no witness, so this is the independent route:
    the oracle enumerates every red/blue assignment without pruning.
    Expensive; meant for spot checks on small graphs."""
    return two_dicolorable_oracle(d) is None


def verify_report(report) -> list[str]:
    """Re-check every witness attached to a census report.

    Returns a list of problem descriptions; an empty list means every
    stored witness held up."""
    problems = []
    for i, entry in enumerate(report.entries):
        d = entry.digraph
        tag = f"entry {i} ({entry.role})"
        if entry.three_coloring is not None:
            if not check_coloring(d, entry.three_coloring, 3):
                problems.append(f"{tag}: invalid 3-coloring")
        if entry.deletion_colorings is not None:
            arcs = list(d.arcs())
            if len(entry.deletion_colorings) != len(arcs):
                problems.append(f"{tag}: expected one 2-coloring per arc")
                continue
            for arc, assignment in zip(arcs, entry.deletion_colorings):
                if not check_coloring(d.remove_arc(arc), assignment, 2):
                    problems.append(
                        f"{tag}: invalid 2-coloring for deleted arc "
                        f"({arc.tail}, {arc.head})"
                    )
    return problems


def verify_cover(result) -> list[str]:
    """Re-check a covering result: embeddings, matrix consistency, coverage."""
    problems = []
    for (ci, ti), mapping in sorted(result.embeddings.items()):
        if not check_embedding(result.cover[ci], result.targets[ti], mapping):
            problems.append(f"embedding cover[{ci}] -> target[{ti}] is invalid")
    for ci, row in enumerate(result.matrix):
        for ti, flag in enumerate(row):
            if flag != ((ci, ti) in result.embeddings):
                problems.append(
                    f"matrix and embeddings disagree at cover[{ci}], target[{ti}]"
                )
        if result.element_counts[ci] != sum(row):
            problems.append(f"containment count for cover[{ci}] is inconsistent")
    for ti in range(len(result.targets)):
        if not any(row[ti] for row in result.matrix):
            problems.append(f"target {ti} is not covered")
    return problems
