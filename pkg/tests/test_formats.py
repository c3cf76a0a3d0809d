"""Matrix and digraph6 codecs."""

import random

import pytest

from dicrit.digraph import build
from dicrit.errors import (
    BadCharError,
    BadHeaderError,
    BadLengthError,
    NonZeroDiagonalError,
    NotAntisymmetricError,
    RaggedRowsError,
)
from dicrit.formats import (
    emit_d6,
    emit_matrix,
    emit_matrix_file,
    parse_d6,
    parse_d6_file,
    parse_matrix,
    parse_matrix_file,
    read_digraphs,
    write_digraphs,
)
from dicrit.generate import tournaments


def _random_oriented(rng, n):
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            c = rng.randrange(3)
            if c == 1:
                arcs.append((u, v))
            elif c == 2:
                arcs.append((v, u))
    return build(n, arcs)


def test_matrix_round_trip_simple():
    d = build(3, [(0, 1), (1, 2), (2, 0)])
    assert parse_matrix(emit_matrix(d)) == d


def test_matrix_exact_text():
    d = build(3, [(0, 1), (1, 2), (2, 0)])
    assert emit_matrix(d) == "0+-\n-0+\n+-0\n"


def test_matrix_tolerates_whitespace():
    assert parse_matrix("  0+-  \n\n -0+ \n +-0\n") == build(
        3, [(0, 1), (1, 2), (2, 0)]
    )


def test_matrix_rejects_bad_char():
    with pytest.raises(BadCharError):
        parse_matrix("0x\n-0".replace("x", "*"))


def test_matrix_rejects_nonzero_diagonal():
    with pytest.raises(NonZeroDiagonalError):
        parse_matrix("++\n-0")


def test_matrix_rejects_asymmetry():
    with pytest.raises(NotAntisymmetricError):
        parse_matrix("0+\n+0")
    with pytest.raises(NotAntisymmetricError):
        parse_matrix("0+\n00")


def test_matrix_rejects_ragged():
    with pytest.raises(RaggedRowsError):
        parse_matrix("0+-\n-0+")
    with pytest.raises(RaggedRowsError):
        parse_matrix("")


def test_d6_round_trip_simple():
    d = build(3, [(0, 1), (1, 2), (2, 0)])
    assert parse_d6(emit_d6(d)) == d


def test_d6_known_encoding():
    # single vertex: '&' + chr(63+1) + one payload byte of six zero bits
    assert emit_d6(build(1, [])) == "&@?"
    assert parse_d6("&@?") == build(1, [])


def test_d6_optional_prefix():
    d = build(2, [(0, 1)])
    assert parse_d6(">>digraph6<<" + emit_d6(d)) == d


def test_d6_rejects_bad_header():
    with pytest.raises(BadHeaderError):
        parse_d6("@?")


def test_d6_rejects_bad_length():
    with pytest.raises(BadLengthError):
        parse_d6("&")
    with pytest.raises(BadLengthError):
        parse_d6("&B?")


def test_d6_rejects_bad_payload_char():
    # '"' is ord 34, below the digraph6 payload range
    with pytest.raises(BadCharError):
        parse_d6('&A"')


def test_multi_graph_files():
    graphs = [build(2, [(0, 1)]), build(3, [(0, 1), (1, 2), (2, 0)])]
    assert parse_matrix_file(emit_matrix_file(graphs)) == graphs
    text = "".join(emit_d6(d) + "\n" for d in graphs)
    assert parse_d6_file(text) == graphs


def test_dispatch_helpers():
    graphs = [build(2, [(1, 0)])]
    for fmt in ("matrix", "d6"):
        assert read_digraphs(write_digraphs(graphs, fmt), fmt) == graphs
    with pytest.raises(ValueError):
        read_digraphs("", "dot")


def test_round_trip_random():
    rng = random.Random(20240817)
    for _ in range(300):
        d = _random_oriented(rng, rng.randint(1, 12))
        assert parse_matrix(emit_matrix(d)) == d
        assert parse_d6(emit_d6(d)) == d


def test_round_trip_tournaments():
    for t in tournaments(5):
        assert parse_matrix(emit_matrix(t)) == t
        assert parse_d6(emit_d6(t)) == t
