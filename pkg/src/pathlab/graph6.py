"""graph6 encoding: bit-exact reader/writer for the de-facto standard.

Upper triangle of the adjacency matrix in column-major order, packed
into 6-bit groups, each offset by 63.  Lines may carry the optional
``>>graph6<<`` header.  ``#`` comment lines and blank lines are skipped
by the stream helpers.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, TextIO

from .errors import CapacityError, Graph6Error
from .graph import Graph, _check_capacity

_HEADER = ">>graph6<<"


def _parse_n(data: bytes) -> tuple[int, int]:
    """Return (n, offset of first body byte)."""
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    b0 = data[0]
    if not 63 <= b0 <= 126:
        raise Graph6Error(f"invalid byte {b0}", 0)
    if b0 != 126:
        return b0 - 63, 1
    if len(data) < 2:
        raise Graph6Error("truncated long-form size", 1)
    if data[1] != 126:
        if len(data) < 4:
            raise Graph6Error("truncated 3-byte size", len(data))
        n = 0
        for i in range(1, 4):
            if not 63 <= data[i] <= 126:
                raise Graph6Error(f"invalid byte {data[i]}", i)
            n = (n << 6) | (data[i] - 63)
        return n, 4
    if len(data) < 8:
        raise Graph6Error("truncated 6-byte size", len(data))
    n = 0
    for i in range(2, 8):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"invalid byte {data[i]}", i)
        n = (n << 6) | (data[i] - 63)
    return n, 8


def parse_graph6(line: str) -> Graph:
    """Parse one graph6 line into a :class:`Graph`."""
    text = line.strip()
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error(f"non-ASCII input: {exc}", None) from None
    n, start = _parse_n(data)
    try:
        _check_capacity(n)
    except CapacityError:
        raise
    body = data[start:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise Graph6Error(
            f"body length {len(body)} != expected {need} for n={n}",
            start + min(len(body), need),
        )
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit // 6]
            if not 63 <= byte <= 126:
                raise Graph6Error(f"invalid byte {byte}", start + bit // 6)
            if (byte - 63) >> (5 - bit % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    for idx in range(bit // 6 + (1 if bit % 6 else 0), len(body)):
        if not 63 <= body[idx] <= 126:
            raise Graph6Error(f"invalid byte {body[idx]}", start + idx)
    return Graph._from_rows(tuple(rows))


def serialize_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (no trailing newline)."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    else:
        # 3-byte size form covers everything up to the hard capacity.
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    acc = 0
    nbits = 0
    rows = g.rows()
    for j in range(1, n):
        col = rows[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, payload) skipping blanks and comments."""
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        yield lineno, text


def read_graph6_file(path: str | os.PathLike) -> list[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        return [parse_graph6(text) for _, text in iter_graph6_lines(fh)]


def write_graph6_file(path: str | os.PathLike, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(serialize_graph6(g) + "\n")
            count += 1
    return count


def write_graph6(stream: TextIO, graphs: Iterable[Graph]) -> int:
    count = 0
    for g in graphs:
        stream.write(serialize_graph6(g) + "\n")
        count += 1
    return count
