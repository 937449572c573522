"""Edge-list and graph6 readers/writers.

Both text formats use 1-based vertex labels in the edge-list case; graph6 has
no labels.  Internally vertices stay 0-based.
"""

from __future__ import annotations

import re

from .graph import Graph, GraphError, build_graph

EDGELIST = "edgelist"
GRAPH6 = "graph6"
FORMATS = (EDGELIST, GRAPH6)

GRAPH6_MAX_N = 62

_HEADER = re.compile(r"^\s*\d+\s+\d+\s*$")


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.offset = offset


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def parse_edgelist(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input, expected header 'n m'")
    number, header = lines[0]
    fields = header.split()
    if len(fields) != 2 or not all(f.isdigit() for f in fields):
        raise ParseError(f"malformed header {header!r}, expected 'n m'", line=number)
    n, m = int(fields[0]), int(fields[1])
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow",
                         line=number)
    edges = []
    for number, line in body:
        fields = line.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise ParseError(f"malformed edge line {line!r}", line=number)
        u, v = int(fields[0]), int(fields[1])
        for label in (u, v):
            if not 1 <= label <= n:
                raise ParseError(f"vertex {label} out of range 1..{n}", line=number)
        if u == v:
            raise ParseError(f"loop edge {u} {v}", line=number)
        edges.append((u - 1, v - 1))
    return build_graph(n, edges)


def serialize_edgelist(G: Graph) -> str:
    edges = G.edges()
    out = [f"{G.n} {len(edges)}"]
    out.extend(f"{u + 1} {v + 1}" for u, v in edges)
    return "\n".join(out) + "\n"


def _graph6_bits(G: Graph):
    # upper triangle, column by column
    for j in range(1, G.n):
        for i in range(j):
            yield 1 if G.has_edge(i, j) else 0


def serialize_graph6(G: Graph) -> str:
    if not 1 <= G.n <= GRAPH6_MAX_N:
        raise GraphError(f"graph6 supports 1 <= n <= {GRAPH6_MAX_N}, got {G.n}")
    bits = list(_graph6_bits(G))
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(G.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return "".join(chars)


def parse_graph6(line: str, line_number: int | None = None) -> Graph:
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise ParseError("empty graph6 string", line=line_number)
    for offset, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"bad graph6 byte {ch!r}", line=line_number, offset=offset)
    n = ord(line[0]) - 63
    if not 1 <= n <= GRAPH6_MAX_N:
        raise ParseError(f"graph6 vertex count {n} unsupported (1..{GRAPH6_MAX_N})",
                         line=line_number, offset=0)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(line) != expected:
        raise ParseError(f"graph6 string has {len(line)} bytes, expected {expected} for n={n}",
                         line=line_number, offset=min(len(line), expected))
    bits = []
    for ch in line[1:]:
        value = ord(ch) - 63
        bits.extend((value >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[nbits:]):
        raise ParseError("nonzero graph6 padding bits", line=line_number, offset=len(line) - 1)
    return build_graph(n, edges)


def detect_format(text: str) -> str:
    for _, line in _content_lines(text):
        return EDGELIST if _HEADER.match(line) else GRAPH6
    raise ParseError("empty input")


def parse_graph(text: str, format: str | None = None) -> Graph:
    """Parse exactly one graph; ``format=None`` auto-detects."""
    graphs = parse_graphs(text, format)
    if len(graphs) != 1:
        raise ParseError(f"expected one graph, found {len(graphs)}")
    return graphs[0]


def parse_graphs(text: str, format: str | None = None) -> list[Graph]:
    """Parse an input that holds one edge list or one graph6 string per line."""
    format = format or detect_format(text)
    if format == EDGELIST:
        return [parse_edgelist(text)]
    if format == GRAPH6:
        graphs = [parse_graph6(line, number) for number, line in _content_lines(text)]
        if not graphs:
            raise ParseError("empty input")
        return graphs
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def serialize_graph(G: Graph, format: str) -> str:
    if format == EDGELIST:
        return serialize_edgelist(G)
    if format == GRAPH6:
        return serialize_graph6(G)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
