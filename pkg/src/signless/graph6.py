"""graph6 encoding (McKay's format): N(n) header then the upper triangle,
column-major, packed six bits per printable byte (offset 63)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, from_edges

HEADER = b">>graph6<<"
MAX_N = 68719476735


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> bytes:
    if n < 0 or n > MAX_N:
        raise Graph6Error(f"graph6 cannot encode n={n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _decode_n(data: bytes) -> tuple[int, int]:
    """Returns ``(n, bytes consumed)``."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size field")
        digits, used = data[2:8], 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size field")
        digits, used = data[1:4], 4
    n = 0
    for c in digits:
        if not 63 <= c <= 126:
            raise Graph6Error(f"bad size byte {c}")
        n = (n << 6) | (c - 63)
    return n, used


def encode(g: Graph, header: bool = False) -> bytes:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3
              | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5])
        for k in range(0, len(bits), 6)
    )
    return (HEADER if header else b"") + _encode_n(g.n) + body


def decode(s: bytes | str) -> Graph:
    try:
        data = s.encode("ascii") if isinstance(s, str) else bytes(s)
    except UnicodeEncodeError:
        raise Graph6Error("graph6 text must be ASCII") from None
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    n, used = _decode_n(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = body[k // 6]
            if not 63 <= c <= 126:
                raise Graph6Error(f"bad data byte {c}")
            if (c - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)


def read_lines(stream: TextIO | Iterable[str]) -> Iterator[Graph]:
    for line in stream:
        line = line.strip()
        if line:
            yield decode(line)


def write_lines(graphs: Iterable[Graph], stream: TextIO) -> int:
    count = 0
    for g in graphs:
        stream.write(encode(g).decode("ascii") + "\n")
        count += 1
    return count
