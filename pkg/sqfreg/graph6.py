"""
graph6.py
---------
Bit-exact graph6 codec (single-byte header, so n <= 62 on the wire and
n <= 32 accepted) plus the "u-v,u-v" edge-list text format.

Upper-triangle bits are read column by column: x(0,1), x(0,2), x(1,2),
x(0,3), ... six per byte, most significant first, zero-padded.
"""
from __future__ import annotations

import re
from typing import IO, Iterable, Iterator, Optional, Tuple, Union

from . import config
from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"
_EDGE_RE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


def _data_len(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(record: Union[bytes, str]) -> Graph:
    if isinstance(record, str):
        try:
            record = record.encode("ascii")
        except UnicodeEncodeError as e:
            raise Graph6Error(f"non-ASCII graph6 record: {e}") from e
    data = record.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 record")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} at position {pos} outside 63..126")
    n = data[0] - 63
    if n > config.MAX_GRAPH6_N:
        raise Graph6Error("multi-byte graph6 headers are not supported")
    if n > config.MAX_VERTICES:
        raise Graph6Error(f"graph has {n} vertices; at most {config.MAX_VERTICES} supported")
    body = data[1:]
    if len(body) != _data_len(n):
        raise Graph6Error(f"record for n={n} needs {_data_len(n)} data bytes, got {len(body)}")

    nbits = n * (n - 1) // 2
    value = 0
    for byte in body:
        value = (value << 6) | (byte - 63)
    pad = len(body) * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    value >>= pad

    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > config.MAX_GRAPH6_N:
        raise Graph6Error("multi-byte graph6 headers are not supported")
    out = [chr(63 + g.n)]
    acc, filled = 0, 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            filled += 1
            if filled == 6:
                out.append(chr(63 + acc))
                acc, filled = 0, 0
    if filled:
        out.append(chr(63 + (acc << (6 - filled))))
    return "".join(out)


def parse_edge_list(text: str, n: Optional[int] = None) -> Graph:
    """``"0-1,1-2"`` -> Graph; ``n`` defaults to one more than the largest label."""
    pairs = []
    stripped = (text or "").strip()
    if stripped:
        for chunk in stripped.split(","):
            m = _EDGE_RE.match(chunk)
            if not m:
                raise Graph6Error(f"bad edge {chunk!r}; expected u-v with decimal labels")
            u, v = int(m.group(1)), int(m.group(2))
            if u == v:
                raise Graph6Error(f"loop {u}-{v} not allowed")
            pairs.append((u, v))
    top = max((max(p) for p in pairs), default=-1) + 1
    if n is None:
        n = top
    elif n < top:
        raise Graph6Error(f"edge label {top - 1} outside 0..{n - 1}")
    if n > config.MAX_VERTICES:
        raise Graph6Error(f"graph has {n} vertices; at most {config.MAX_VERTICES} supported")
    return Graph.from_edges(n, pairs)


def parse_pairs(text: str) -> Tuple[Tuple[int, int], ...]:
    """Matching text ``"u-v,u-v"`` -> tuple of pairs (no graph attached)."""
    out = []
    for chunk in (text or "").split(","):
        if not chunk.strip():
            continue
        m = _EDGE_RE.match(chunk)
        if not m:
            raise Graph6Error(f"bad edge {chunk!r}; expected u-v with decimal labels")
        out.append((int(m.group(1)), int(m.group(2))))
    return tuple(out)


def read_graph6_lines(stream: Union[IO[str], Iterable[str]]) -> Iterator[Tuple[int, str]]:
    """Yield ``(line_number, record)`` for every non-blank line, header stripped."""
    for lineno, line in enumerate(stream, start=1):
        rec = line.strip()
        if rec.startswith(HEADER):
            rec = rec[len(HEADER):]
        if rec:
            yield lineno, rec
