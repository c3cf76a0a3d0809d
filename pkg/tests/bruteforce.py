"""Independent oracles the tests compare against.

Everything here is deliberately naive and shares no code with the package:
cycle detection runs on dict adjacency instead of bitsets, colorability
tries every assignment, isomorphism classes come from minimizing over all
vertex permutations, and class counts come from Burnside's lemma applied
to the permutation action on vertex pairs.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import factorial


def has_cycle(n: int, arcs, subset=None) -> bool:
    """Plain recursive three-color DFS over a dict adjacency."""
    verts = set(range(n)) if subset is None else set(subset)
    out = {v: [] for v in verts}
    for u, v in arcs:
        if u in verts and v in verts:
            out[u].append(v)
    state = dict.fromkeys(verts, 0)

    def visit(v: int) -> bool:
        state[v] = 1
        for w in out[v]:
            if state[w] == 1:
                return True
            if state[w] == 0 and visit(w):
                return True
        state[v] = 2
        return False

    return any(state[v] == 0 and visit(v) for v in verts)


def two_colorable_brute(n: int, arcs) -> bool:
    arcs = list(arcs)
    for bits in range(1 << n):
        red = [v for v in range(n) if bits >> v & 1]
        blue = [v for v in range(n) if not bits >> v & 1]
        if not has_cycle(n, arcs, red) and not has_cycle(n, arcs, blue):
            return True
    return False


def chi_brute(n: int, arcs) -> int:
    arcs = list(arcs)
    for k in range(1, n + 1):
        for assignment in product(range(k), repeat=n):
            if all(
                not has_cycle(n, arcs, [v for v in range(n) if assignment[v] == c])
                for c in range(k)
            ):
                return k
    return n


def perm_min_code(n: int, arcs) -> tuple:
    """Isomorphism-class key: the lexicographically least relabeled arc list."""
    arcs = list(arcs)
    return min(
        tuple(sorted((p[u], p[v]) for u, v in arcs))
        for p in permutations(range(n))
    )


def tournament_classes_brute(n: int) -> set:
    pairs = list(combinations(range(n), 2))
    classes = set()
    for bits in range(1 << len(pairs)):
        arcs = [
            (u, v) if bits >> i & 1 else (v, u)
            for i, (u, v) in enumerate(pairs)
        ]
        classes.add(perm_min_code(n, arcs))
    return classes


def oriented_classes_brute(n: int) -> set:
    """All oriented-graph classes; 3^C(n,2) labelings, keep n small."""
    pairs = list(combinations(range(n), 2))
    classes = set()
    for choice in product(range(3), repeat=len(pairs)):
        arcs = []
        for c, (u, v) in zip(choice, pairs):
            if c == 1:
                arcs.append((u, v))
            elif c == 2:
                arcs.append((v, u))
        classes.add(perm_min_code(n, arcs))
    return classes


def undirected_classes_brute(n: int, m: int, min_deg: int = 0) -> set:
    pairs = list(combinations(range(n), 2))
    classes = set()
    for picked in combinations(range(len(pairs)), m):
        edges = [pairs[i] for i in picked]
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if min(deg) < min_deg:
            continue
        classes.add(perm_min_code(n, edges))
    return classes


def orientation_classes_brute(n: int, edges, min_in: int = 0,
                              min_out: int = 0) -> set:
    """Classes of orientations of one undirected graph, degree-filtered."""
    edges = list(edges)
    classes = set()
    for bits in range(1 << len(edges)):
        arcs = [
            (u, v) if bits >> i & 1 else (v, u)
            for i, (u, v) in enumerate(edges)
        ]
        indeg = [0] * n
        outdeg = [0] * n
        for u, v in arcs:
            outdeg[u] += 1
            indeg[v] += 1
        if min(indeg) < min_in or min(outdeg) < min_out:
            continue
        classes.add(perm_min_code(n, arcs))
    return classes


def _orbit_flips(perm):
    """Flip flag per orbit of the action on unordered vertex pairs.

    An orbit is flipped when following the permutation around it brings
    the ordered pair back reversed."""
    n = len(perm)
    seen = set()
    flips = []
    for start in combinations(range(n), 2):
        if start in seen:
            continue
        u, v = start
        while (min(u, v), max(u, v)) not in seen:
            seen.add((min(u, v), max(u, v)))
            u, v = perm[u], perm[v]
        flips.append((u, v) == (start[1], start[0]))
    return flips


def burnside_tournament_count(n: int) -> int:
    """Tournament classes on n vertices by Burnside's lemma.

    A permutation fixes a tournament only if no pair orbit comes back
    flipped; each unflipped orbit then contributes a free arc direction."""
    total = 0
    for perm in permutations(range(n)):
        flips = _orbit_flips(perm)
        if not any(flips):
            total += 1 << len(flips)
    return total // factorial(n)


def burnside_oriented_count(n: int) -> int:
    """Oriented-graph classes on n vertices by Burnside's lemma.

    Per pair orbit: a flipped orbit admits only the non-edge; an unflipped
    orbit admits non-edge or either consistent direction."""
    total = 0
    for perm in permutations(range(n)):
        fixed = 1
        for flipped in _orbit_flips(perm):
            fixed *= 1 if flipped else 3
        total += fixed
    return total // factorial(n)
