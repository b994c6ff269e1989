"""Edge-list and graph6 readers and writers."""

from __future__ import annotations

import sys
from collections.abc import Iterable, Iterator
from pathlib import Path

from .errors import GraphFormatError
from .graph import Graph, graph6_pairs

GRAPH6_HEADER = ">>graph6<<"
_SHORT_FORM_MAX = 62
_LONG_FORM_MAX = 258047


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def from_edge_list(text: str) -> Graph:
    """
    Parse the edge-list format: a header line "n m", then m lines "u v".
    Blank lines and '#' comments are ignored. Each edge is written "u v"
    with u < v; loops, reversed pairs and repeated edges are rejected.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError as e:
            raise GraphFormatError(f"not an integer pair: {line!r}", lineno) from e
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("vertex and edge counts must be nonnegative", lineno)
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise GraphFormatError(f"more than the declared {m} edges", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1}: {line!r}", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)
        if a > b:
            raise GraphFormatError(f"edge endpoints must satisfy u < v: {line!r}", lineno)
        key = (a, b)
        if key in seen:
            raise GraphFormatError(f"duplicate edge {a} {b}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphFormatError("missing 'n m' header line")
    if len(edges) != header[1]:
        raise GraphFormatError(f"declared {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _decode_order(data: str) -> tuple[int, int]:
    """Return (n, number of characters the order field used)."""
    if not data:
        raise GraphFormatError("empty graph6 record")
    first = ord(data[0]) - 63
    if first < 0 or first > 63:
        raise GraphFormatError(f"invalid graph6 length byte {data[0]!r}")
    if first < 63:
        return first, 1
    if len(data) < 4 or data[1] == "~":
        raise GraphFormatError("unsupported graph6 order field")
    n = 0
    for ch in data[1:4]:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
        n = n << 6 | value
    if n <= _SHORT_FORM_MAX:
        raise GraphFormatError("graph6 long form used for a small order")
    return n, 4


def parse_graph6(line: str) -> Graph:
    data = line.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    n, offset = _decode_order(data)
    pairs = graph6_pairs(n)
    body = data[offset:]
    expected = (len(pairs) + 5) // 6
    if len(body) != expected:
        raise GraphFormatError(
            f"graph6 body has {len(body)} characters, expected {expected} for n={n}"
        )
    edges: list[tuple[int, int]] = []
    bit = 0
    for ch in body:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
        for shift in range(5, -1, -1):
            if value >> shift & 1:
                if bit >= len(pairs):
                    raise GraphFormatError("non-zero graph6 padding bits")
                edges.append(pairs[bit])
            bit += 1
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    if g.n > _LONG_FORM_MAX:
        raise GraphFormatError(f"graph6 cannot encode n={g.n}")
    if g.n <= _SHORT_FORM_MAX:
        out = [chr(63 + g.n)]
    else:
        out = ["~"] + [chr(63 + (g.n >> s & 63)) for s in (12, 6, 0)]
    bits = [1 if g.has_edge(u, v) else 0 for u, v in graph6_pairs(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = value << 1 | b
        out.append(chr(63 + value))
    return "".join(out)


def _read_text(source: Path | str) -> str:
    if str(source) == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def read_graph(source: Path | str, graph6: bool = False) -> Graph:
    """Read one graph from a file path or '-' (stdin)."""
    text = _read_text(source)
    if not graph6:
        return from_edge_list(text)
    records = [ln for _, ln in _records(text.splitlines())]
    if len(records) != 1:
        raise GraphFormatError(f"expected one graph6 record, found {len(records)}")
    return parse_graph6(records[0])


def iter_graph6(source: Path | str) -> Iterator[Graph]:
    """Stream graph6 records, one graph per non-blank line."""
    if str(source) == "-":
        for lineno, line in _records(sys.stdin):
            yield _parse_record(line, lineno)
        return
    with Path(source).open(encoding="utf-8") as fh:
        for lineno, line in _records(fh):
            yield _parse_record(line, lineno)


def _records(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    # a header on a line of its own carries no graph
    for lineno, line in enumerate(lines, start=1):
        if line.strip() not in ("", GRAPH6_HEADER):
            yield lineno, line


def _parse_record(line: str, lineno: int) -> Graph:
    try:
        return parse_graph6(line)
    except GraphFormatError as e:
        raise GraphFormatError(str(e), lineno) from e
