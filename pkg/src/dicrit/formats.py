"""Text encodings: the +/-/0 adjacency-matrix format and digraph6.

Matrix format, one graph:

    0+-
    -0+
    +-0

Row i, column j is '+' when i->j is an arc, '-' when j->i is, '0' when the
pair is non-adjacent; the diagonal is all '0'.  Rows are 1-based in the
labelling sense only; internally everything stays 0-based.  Parsing tolerates
surrounding whitespace; emission is exact: n lines, no padding.  Multi-graph
files separate consecutive graphs by one blank line.

digraph6 is the standard ASCII format: '&', then the vertex count as a
printable byte (n + 63, single byte for n <= 62), then the row-major n*n
adjacency bit vector packed 6 bits per byte (each + 63).  Multi-graph
digraph6 files hold one graph per line.
"""

from __future__ import annotations

from typing import Iterable

from .digraph import Digraph, build
from .errors import (
    BadCharError,
    BadHeaderError,
    BadLengthError,
    NonZeroDiagonalError,
    NotAntisymmetricError,
    RaggedRowsError,
    TooLargeError,
)

# -- matrix format -----------------------------------------------------------


def parse_matrix(text: str) -> Digraph:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    if not rows:
        raise RaggedRowsError("empty matrix text")
    n = len(rows[0])
    if len(rows) != n or any(len(r) != n for r in rows):
        raise RaggedRowsError(f"expected {n} rows of {n} characters")
    arcs = []
    for i, row in enumerate(rows):
        for j, ch in enumerate(row):
            if ch not in "0+-":
                raise BadCharError(f"row {i + 1} column {j + 1}: {ch!r}")
            if i == j:
                if ch != "0":
                    raise NonZeroDiagonalError(f"diagonal entry at {i + 1} is {ch!r}")
                continue
            mirror = rows[j][i]
            if (ch == "+" and mirror != "-") or (ch == "-" and mirror != "+") or (
                ch == "0" and mirror != "0"
            ):
                raise NotAntisymmetricError(
                    f"entries ({i + 1},{j + 1})={ch!r} and ({j + 1},{i + 1})={mirror!r}"
                )
            if ch == "+":
                arcs.append((i, j))
    return build(n, arcs)


def emit_matrix(d: Digraph) -> str:
    lines = []
    for i in range(d.n):
        out = d.out_adj[i]
        inn = d.in_adj[i]
        lines.append(
            "".join(
                "+" if out >> j & 1 else "-" if inn >> j & 1 else "0"
                for j in range(d.n)
            )
        )
    return "\n".join(lines) + "\n"


def parse_matrix_file(text: str) -> list[Digraph]:
    """Blank-line-separated concatenation of matrix blocks."""
    blocks: list[list[str]] = [[]]
    for line in text.splitlines():
        if line.strip():
            blocks[-1].append(line)
        elif blocks[-1]:
            blocks.append([])
    return [parse_matrix("\n".join(b)) for b in blocks if b]


def emit_matrix_file(graphs: Iterable[Digraph]) -> str:
    return "\n".join(emit_matrix(d) for d in graphs)


# -- digraph6 ----------------------------------------------------------------

_D6_OPTIONAL_PREFIX = ">>digraph6<<"


def parse_d6(text: str) -> Digraph:
    s = text.strip()
    if s.startswith(_D6_OPTIONAL_PREFIX):
        s = s[len(_D6_OPTIONAL_PREFIX):]
    if not s or s[0] != "&":
        raise BadHeaderError("digraph6 text must start with '&'")
    s = s[1:]
    if not s:
        raise BadLengthError("missing vertex count byte")
    first = ord(s[0])
    if first == 126:
        raise TooLargeError("multi-byte digraph6 order exceeds the 62-vertex cap")
    if not 63 <= first <= 125:
        raise BadCharError(f"bad order byte {s[0]!r}")
    n = first - 63
    if n < 1:
        raise BadLengthError("digraph6 order 0 not supported")
    payload = s[1:]
    need = (n * n + 5) // 6
    if len(payload) != need:
        raise BadLengthError(f"expected {need} payload bytes, got {len(payload)}")
    bits = []
    for ch in payload:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise BadCharError(f"bad payload byte {ch!r}")
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    arcs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if bits[i * n + j]
    ]
    return build(n, arcs)


def emit_d6(d: Digraph) -> str:
    bits = []
    for i in range(d.n):
        row = d.out_adj[i]
        bits.extend((row >> j) & 1 for j in range(d.n))
    while len(bits) % 6:
        bits.append(0)
    payload = "".join(
        chr(63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3
                  | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]))
        for k in range(0, len(bits), 6)
    )
    return "&" + chr(63 + d.n) + payload


def parse_d6_file(text: str) -> list[Digraph]:
    return [parse_d6(line) for line in text.splitlines() if line.strip()]


def emit_d6_file(graphs: Iterable[Digraph]) -> str:
    return "".join(emit_d6(d) + "\n" for d in graphs)


# -- format-dispatch helpers used by the CLI ---------------------------------


def read_digraphs(text: str, fmt: str) -> list[Digraph]:
    if fmt == "matrix":
        return parse_matrix_file(text)
    if fmt == "d6":
        return parse_d6_file(text)
    raise ValueError(f"unknown format {fmt!r}")


def write_digraphs(graphs: Iterable[Digraph], fmt: str) -> str:
    if fmt == "matrix":
        return emit_matrix_file(graphs)
    if fmt == "d6":
        return emit_d6_file(graphs)
    raise ValueError(f"unknown format {fmt!r}")
