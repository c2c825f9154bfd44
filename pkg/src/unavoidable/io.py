"""Edge-list and graph6 input/output.

Edge-list format: '#'-prefixed comment lines, then a header line "n m",
then m lines "u v" with 0 <= u < v < n.  Duplicate edges are rejected.

graph6: 6-bit big-endian encoding.  The order header N(n) is a single
byte 63+n for n <= 62, or byte 126 followed by three bytes holding n in
18 bits for 63 <= n <= 258047.  The upper triangle of the adjacency
matrix is read column by column (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3},
...), padded with zero bits to a multiple of six, and each 6-bit group
plus 63 is emitted as one printable character.
"""

from __future__ import annotations

import gzip
from pathlib import Path as FsPath
from typing import Iterable, Iterator

from .graphs import Graph

__all__ = [
    "GraphFormatError",
    "parse_edge_list",
    "format_edge_list",
    "decode_graph6",
    "encode_graph6",
    "iter_graph6_lines",
    "load_graph",
    "save_graph",
]


class GraphFormatError(ValueError):
    """Malformed graph input."""


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    if not data:
        raise GraphFormatError("edge list has no data lines")
    head = data[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"header must be 'n m', got {data[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"non-integer header: {data[0]!r}") from exc
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    if len(data) - 1 != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(data) - 1}")
    edges = set()
    for ln in data[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"non-integer edge line {ln!r}") from exc
        if not (0 <= u < v < n):
            raise GraphFormatError(f"edge ({u}, {v}) violates 0 <= u < v < n = {n}")
        if (u, v) in edges:
            raise GraphFormatError(f"duplicate edge ({u}, {v})")
        edges.add((u, v))
    return Graph(n, frozenset(edges))


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(G.edges))
    return "\n".join(lines) + "\n"


def _decode_order(data: bytes) -> tuple[int, int]:
    """Returns (n, number of header bytes consumed)."""
    if not data:
        raise GraphFormatError("empty graph6 line")
    b0 = data[0]
    if b0 == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise GraphFormatError("truncated graph6 order header")
            vals = [b - 63 for b in data[2:8]]
            if any(v < 0 or v > 63 for v in vals):
                raise GraphFormatError("graph6 order bytes out of range")
            n = 0
            for v in vals:
                n = (n << 6) | v
            return n, 8
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 order header")
        vals = [b - 63 for b in data[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise GraphFormatError("graph6 order bytes out of range")
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        return n, 4
    n = b0 - 63
    if n < 0 or n > 62:
        raise GraphFormatError(f"bad graph6 order byte {b0}")
    return n, 1


def decode_graph6(line: str | bytes) -> Graph:
    if isinstance(line, str):
        line = line.encode("ascii")
    line = line.strip()
    if line.startswith(b">>graph6<<"):
        line = line[len(b">>graph6<<"):]
    n, used = _decode_order(line)
    body = line[used:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {nbytes}")
    bits = []
    for b in body:
        v = b - 63
        if v < 0 or v > 63:
            raise GraphFormatError(f"graph6 body byte {b} out of range")
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits in graph6 body")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def encode_graph6(G: Graph) -> str:
    n = G.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise GraphFormatError("graph order too large for this encoder")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if G.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        body.append(v + 63)
    return (head + bytes(body)).decode("ascii")


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for ln in lines:
        ln = ln.strip()
        if ln:
            yield decode_graph6(ln)


def _open_text(path):
    path = FsPath(path)
    if path.suffix == ".gz":
        return gzip.open(path, "rt")
    return open(path, "r")


def detect_format(path, override: str | None = None) -> str:
    if override:
        return override
    name = str(path)
    if name.endswith(".gz"):
        name = name[:-3]
    if name.endswith(".el"):
        return "el"
    if name.endswith(".g6"):
        return "g6"
    raise GraphFormatError(f"cannot detect format of {path!r}; pass an explicit format")


def load_graph(path, fmt: str | None = None) -> Graph:
    fmt = detect_format(path, fmt)
    with _open_text(path) as fh:
        text = fh.read()
    if fmt == "el":
        return parse_edge_list(text)
    if fmt == "g6":
        for ln in text.splitlines():
            if ln.strip():
                return decode_graph6(ln)
        raise GraphFormatError("no graph6 line in file")
    raise GraphFormatError(f"unknown format {fmt!r}")


def save_graph(G: Graph, path, fmt: str | None = None) -> None:
    fmt = detect_format(path, fmt)
    if fmt == "el":
        text = format_edge_list(G)
    elif fmt == "g6":
        text = encode_graph6(G) + "\n"
    else:
        raise GraphFormatError(f"unknown format {fmt!r}")
    with open(path, "w") as fh:
        fh.write(text)
