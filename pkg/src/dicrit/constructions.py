"""Explicit families of small 3-dicritical oriented graphs, butterfly
contraction, and the saturation experiment.

Vertex numbering is part of each builder's contract (golden canonical codes
depend on it):

* gadget_S: a=0, b=1, triangle x1,x2,x3 = 2,3,4.
* d1_general(m, L): middle circuit 0..m-1 (arc i -> i+1 mod m); the outer
  circuit attached to middle arc i occupies the next L[i] indices.
* d3: triangles v1v2v3 = 0,1,2 and v4v5v6 = 3,4,5; v7 = 6.
* o_kl(k, l): x-circuit 0..k-1, y-circuit k..k+l-1, v = k+l.
* d2_general(k): u-circuit 0..k-1, v-circuit k..2k-1, x = 2k.
"""

from __future__ import annotations

from dataclasses import dataclass
from multiprocessing import Pool

from .coloring import is_acyclic, two_dicolorable
from .digraph import Arc, Digraph, build
from .errors import (
    CreatesTwoCycleError,
    EvenMiddleError,
    MissingArcError,
    NotButterflyError,
    TooLargeError,
    TooShortError,
)
from .generate import oriented_graphs

MAX_SATURATION_N = 6


def gadget_S() -> Digraph:
    """Orientation of K5: directed triangle x1x2x3, a -> b, b -> every x_i,
    every x_i -> a.  Glued in threes it forms d1()."""
    arcs = [(2, 3), (3, 4), (4, 2), (0, 1)]
    arcs += [(1, x) for x in (2, 3, 4)]
    arcs += [(x, 0) for x in (2, 3, 4)]
    d = build(5, arcs)
    assert d.arc_count == 10
    return d


def d1_general(middle_len: int, outer_lens: list[int]) -> Digraph:
    """An odd middle circuit; every middle arc a -> b carries an outer circuit
    whose vertices all dominate a and are dominated by b."""
    if middle_len % 2 == 0:
        raise EvenMiddleError(f"middle circuit length {middle_len} is even")
    if middle_len < 3:
        raise TooShortError(f"middle circuit length {middle_len} < 3")
    if len(outer_lens) != middle_len:
        raise ValueError("need exactly one outer circuit length per middle arc")
    if any(length < 3 for length in outer_lens):
        raise TooShortError(f"outer circuit lengths {outer_lens} must all be >= 3")

    arcs = [(i, (i + 1) % middle_len) for i in range(middle_len)]
    base = middle_len
    for i, length in enumerate(outer_lens):
        a, b = i, (i + 1) % middle_len
        ring = list(range(base, base + length))
        arcs += [(ring[t], ring[(t + 1) % length]) for t in range(length)]
        arcs += [(w, a) for w in ring]
        arcs += [(b, w) for w in ring]
        base += length
    d = build(base, arcs)
    assert d.arc_count == middle_len + 3 * sum(outer_lens)
    return d


def d1() -> Digraph:
    """Three copies of the gadget glued on a directed triangle: 12 vertices,
    30 arcs, the paper's first 3-dicritical family member."""
    d = d1_general(3, [3, 3, 3])
    assert d.n == 12 and d.arc_count == 30
    return d


def d3() -> Digraph:
    """Two directed triangles and a hub: v1v2v3 -> v7 -> v4v5v6 -> v1v2v3
    (all nine arcs between the triangles); 7 vertices, 21 arcs."""
    arcs = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    arcs += [(i, 6) for i in (0, 1, 2)]
    arcs += [(i, j) for i in (3, 4, 5) for j in (0, 1, 2)]
    arcs += [(6, i) for i in (3, 4, 5)]
    d = build(7, arcs)
    assert d.arc_count == 21
    return d


def o_kl(k: int, l: int) -> Digraph:
    """Circuits x1..xk and y1..yl, all arcs x_i -> y_j, and a special vertex v
    with v -> every x_i and every y_j -> v; kl + 2k + 2l arcs."""
    if k < 3 or l < 3:
        raise TooShortError(f"o_kl needs k, l >= 3, got ({k}, {l})")
    v = k + l
    arcs = [(i, (i + 1) % k) for i in range(k)]
    arcs += [(k + j, k + (j + 1) % l) for j in range(l)]
    arcs += [(i, k + j) for i in range(k) for j in range(l)]
    arcs += [(v, i) for i in range(k)]
    arcs += [(k + j, v) for j in range(l)]
    d = build(k + l + 1, arcs)
    assert d.arc_count == k * l + 2 * k + 2 * l
    return d


def d2() -> Digraph:
    """d3 with the matching v4->v1, v5->v2, v6->v3 removed and v2->v5,
    v3->v6 added: the unique 20-arc 3-dicritical oriented graph."""
    d = d3()
    for a in ((3, 0), (4, 1), (5, 2)):
        d = d.remove_arc(Arc(*a))
    for a in ((1, 4), (2, 5)):
        d = d.add_arc(Arc(*a))
    assert d.arc_count == 20
    return d


def d2_general(k: int) -> Digraph:
    """Circuits u1..uk and v1..vk, x with every u_i -> x and x -> every v_i,
    all arcs v_i -> u_j for i != j, plus u1 -> v1 and u2 -> v2."""
    if k < 3:
        raise TooShortError(f"d2_general needs k >= 3, got {k}")
    x = 2 * k
    arcs = [(i, (i + 1) % k) for i in range(k)]
    arcs += [(k + i, k + (i + 1) % k) for i in range(k)]
    arcs += [(i, x) for i in range(k)]
    arcs += [(x, k + i) for i in range(k)]
    arcs += [(k + i, j) for i in range(k) for j in range(k) if i != j]
    arcs += [(0, k), (1, k + 1)]
    d = build(2 * k + 1, arcs)
    assert d.arc_count == k * k + 3 * k + 2
    return d


def butterfly_contract(d: Digraph, arc: Arc) -> Digraph:
    """Contract an arc that is its tail's only out-arc or its head's only
    in-arc.  The merged vertex keeps the tail's index and indices above the
    head close up.  Arcs between the endpoints vanish, parallel arcs collapse
    to one, and an opposite pair surviving the merge is an error."""
    u, v = arc
    if not d.has_arc(u, v):
        raise MissingArcError(f"arc {u}->{v} not in digraph")
    if d.out_degree(u) != 1 and d.in_degree(v) != 1:
        raise NotButterflyError(
            f"arc {u}->{v}: tail has out-degree {d.out_degree(u)}, "
            f"head has in-degree {d.in_degree(v)}")

    merged = set()
    for a, b in d.arcs():
        t = u if a == v else a
        h = u if b == v else b
        if t != h:
            merged.add((t, h))
    for t, h in merged:
        if (h, t) in merged:
            raise CreatesTwoCycleError(
                f"contracting {u}->{v} leaves both {t}->{h} and {h}->{t}")

    def shift(w: int) -> int:
        return w if w < v else w - 1

    return build(d.n - 1, sorted((shift(t), shift(h)) for t, h in merged))


@dataclass(frozen=True)
class SaturationReport:
    """Outcome of scanning order-n oriented graphs for saturation.

    scanned counts non-tournament oriented graphs; two_dichromatic those with
    dichromatic number exactly 2; saturated lists any graph all of whose
    single-arc extensions stopped being 2-dicolorable (none are expected)."""

    n: int
    scanned: int
    two_dichromatic: int
    saturated: tuple[Digraph, ...]


def _saturation_probe(d: Digraph, dicolorable) -> tuple[bool, bool]:
    """(is 2-dichromatic, no arc addition stays 2-dicolorable)."""
    if is_acyclic(d):
        return False, False
    if dicolorable(d) is None:
        return False, False
    for u, w in d.nonadjacent_pairs():
        if (dicolorable(d.add_arc(Arc(u, w))) is not None
                or dicolorable(d.add_arc(Arc(w, u))) is not None):
            return True, False
    return True, True


def _default_probe(d: Digraph) -> tuple[bool, bool]:
    return _saturation_probe(d, two_dicolorable)


def saturation_scan(n: int, dicolorable=two_dicolorable,
                    jobs: int = 1) -> SaturationReport:
    """Scan every non-tournament oriented graph on n vertices with dichromatic
    number 2 for one whose every arc addition leaves the class.

    Tournaments are excluded: with no arc to add, the defining condition is
    vacuous.  The 2-colorability predicate is injectable so the harness can
    verify that a broken predicate is caught.  jobs > 1 probes graphs in
    worker processes; results merge in enumeration order, so the report does
    not depend on completion order."""
    if n > MAX_SATURATION_N:
        raise TooLargeError(f"saturation scan supports n <= {MAX_SATURATION_N}")
    graphs = [d for d in oriented_graphs(n) if not d.is_tournament()]
    if jobs > 1 and dicolorable is two_dicolorable and len(graphs) > 1:
        with Pool(jobs) as pool:
            results = pool.map(_default_probe, graphs,
                               chunksize=max(1, len(graphs) // (jobs * 8)))
    else:
        results = [_saturation_probe(d, dicolorable) for d in graphs]
    dichromatic2 = sum(1 for two_chromatic, _ in results if two_chromatic)
    saturated = tuple(
        d for d, (_, stuck) in zip(graphs, results) if stuck
    )
    return SaturationReport(n, len(graphs), dichromatic2, saturated)
