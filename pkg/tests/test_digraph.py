"""Digraph construction, validation, and surgery."""

import pytest

from dicrit.digraph import Arc, Digraph, build, build_from_rows
from dicrit.errors import (
    DuplicateArcError,
    LoopArcError,
    MissingArcError,
    TooLargeError,
    TwoCycleError,
)


def test_build_simple():
    d = build(3, [(0, 1), (1, 2), (2, 0)])
    assert d.n == 3
    assert d.arc_count == 3
    assert d.has_arc(0, 1)
    assert not d.has_arc(1, 0)


def test_arcs_in_lex_order():
    d = build(4, [(3, 0), (1, 2), (0, 2), (0, 1)])
    assert list(d.arcs()) == [Arc(0, 1), Arc(0, 2), Arc(1, 2), Arc(3, 0)]


def test_build_rejects_loop():
    with pytest.raises(LoopArcError):
        build(2, [(1, 1)])


def test_build_rejects_two_cycle():
    with pytest.raises(TwoCycleError):
        build(2, [(0, 1), (1, 0)])


def test_build_rejects_duplicate():
    with pytest.raises(DuplicateArcError):
        build(3, [(0, 1), (0, 1)])


def test_build_rejects_out_of_range():
    with pytest.raises(ValueError):
        build(2, [(0, 2)])


def test_build_rejects_too_many_vertices():
    with pytest.raises(TooLargeError):
        build(63, [])


def test_degrees():
    d = build(3, [(0, 1), (0, 2), (1, 2)])
    assert d.out_degree(0) == 2
    assert d.in_degree(2) == 2
    assert d.degrees() == ((0, 2), (1, 1), (2, 0))
    assert d.min_in_degree() == 0
    assert d.min_out_degree() == 0


def test_is_tournament():
    assert build(3, [(0, 1), (1, 2), (2, 0)]).is_tournament()
    assert not build(3, [(0, 1), (1, 2)]).is_tournament()


def test_nonadjacent_pairs():
    d = build(3, [(0, 1)])
    assert sorted(d.nonadjacent_pairs()) == [(0, 2), (1, 2)]
    assert list(build(3, [(0, 1), (1, 2), (2, 0)]).nonadjacent_pairs()) == []


def test_add_remove_arc():
    d = build(3, [(0, 1)])
    e = d.add_arc((1, 2))
    assert e.arc_count == 2 and e.has_arc(1, 2)
    # the original is untouched
    assert d.arc_count == 1
    f = e.remove_arc((0, 1))
    assert f.arc_count == 1 and not f.has_arc(0, 1)
    with pytest.raises(MissingArcError):
        d.remove_arc((2, 0))
    with pytest.raises(TwoCycleError):
        d.add_arc((1, 0))
    with pytest.raises(DuplicateArcError):
        d.add_arc((0, 1))


def test_delete_vertex():
    d = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    e = d.delete_vertex(1)
    # indices above the deleted vertex shift down
    assert e.n == 3
    assert sorted(e.arcs()) == [(1, 2), (2, 0)]


def test_relabel_and_transpose():
    d = build(3, [(0, 1), (1, 2)])
    r = d.relabel([2, 0, 1])
    assert sorted(r.arcs()) == [(0, 1), (2, 0)]
    t = d.transpose()
    assert sorted(t.arcs()) == [(1, 0), (2, 1)]
    assert t.transpose() == d


def test_build_from_rows_matches_build():
    d = build(3, [(0, 2), (1, 0)])
    assert build_from_rows(3, d.out_adj) == d


def test_equality_and_hash():
    a = build(3, [(0, 1)])
    b = build(3, [(0, 1)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != build(3, [(1, 0)])
