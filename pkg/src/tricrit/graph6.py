"""graph6 interchange format, short form (n <= 62).

Layout: one header byte ``chr(63 + n)``, then the upper triangle of the
adjacency matrix read column by column (bit order (0,1), (0,2), (1,2),
(0,3), ...), packed big-endian six bits per byte with value offset 63.
Unused padding bits in the last byte must be zero.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graph import MAX_VERTICES, Graph, build_graph


def strip_header(text: str) -> str:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    return s


def parse_graph6(text: str) -> Graph:
    s = strip_header(text)
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"non-printable graph6 byte {ord(ch)}")
    n = ord(s[0]) - 63
    if n == 63:
        raise GraphFormatError("long-form graph6 headers (n > 62) are unsupported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = s[1:]
    if len(payload) != nbytes:
        raise GraphFormatError(
            f"payload length {len(payload)} != expected {nbytes} for n={n}"
        )
    bits: list[int] = []
    for ch in payload:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits in graph6 payload")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return build_graph(n, edges)


def emit_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise GraphFormatError("graphs with n > 62 are unsupported in short form")
    out = [chr(63 + g.n)]
    bits: list[int] = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)
