"""Edge-list and graph6 text formats.

Edge list: first line ``n m``, then ``m`` lines ``u v`` (decimal, single
spaces, LF endings). Serialisation always writes ``u < v`` in lexicographic
order; parsing also accepts ``u > v``.

graph6: McKay's format. The vertex count is encoded as one byte
(``n <= 62``), ``~`` plus three 6-bit bytes (``n <= 258047``) or ``~~`` plus
six; then the upper triangle is read column by column, packed six bits per
byte, each byte offset by 63.
"""
from __future__ import annotations

from .errors import ParseError
from .graph import Graph, from_edge_list

EDGE_LIST = "edge-list"
GRAPH6 = "graph6"
FORMATS = (EDGE_LIST, GRAPH6)


def serialize_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _int(token: str, line: int) -> int:
    if not token.isdigit():
        raise ParseError(f"expected a nonnegative integer, got {token!r}", line=line)
    return int(token)


def parse_edge_list(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("missing header line", line=1)
    header = lines[0].split(" ")
    if len(header) != 2:
        raise ParseError("header must be 'n m'", line=1)
    n, m = _int(header[0], 1), _int(header[1], 1)
    if len(lines) - 1 != m:
        raise ParseError(f"header announces {m} edges but {len(lines) - 1} lines follow", line=1)
    edges = []
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", line=i)
        u, v = _int(parts[0], i), _int(parts[1], i)
        if u >= n or v >= n:
            raise ParseError(f"endpoint out of range for n={n}", line=i)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=i)
        edges.append((u, v))
    return from_edge_list(n, edges)


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def serialize_graph6(g: Graph) -> str:
    bits = [g.rows[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + sum(bit << (5 - k) for k, bit in enumerate(bits[i:i + 6])))
        for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip("\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"bad graph6 character {ch!r}", offset=pos)
    if not s:
        raise ParseError("empty graph6 string", offset=0)
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field", offset=len(s))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field", offset=len(s))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    need = (n * (n - 1) // 2 + 5) // 6
    if len(vals) - pos != need:
        raise ParseError(f"expected {need} data bytes for n={n}, got {len(vals) - pos}", offset=pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if vals[pos + k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if k % 6 and vals[-1] & ((1 << (6 - k % 6)) - 1):
        raise ParseError("nonzero padding bits", offset=len(s) - 1)
    return from_edge_list(n, edges)


def parse_graph(text: str, fmt: str = EDGE_LIST) -> Graph:
    if fmt == EDGE_LIST:
        return parse_edge_list(text)
    if fmt == GRAPH6:
        return parse_graph6(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def serialize_graph(g: Graph, fmt: str = EDGE_LIST) -> str:
    if fmt == EDGE_LIST:
        return serialize_edge_list(g)
    if fmt == GRAPH6:
        return serialize_graph6(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
