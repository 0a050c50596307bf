"""graph6 encoding (the nauty/geng interchange format).

Only the 1-byte (n <= 62) and 4-byte (n <= 258047) size headers are
supported; the 8-byte form is rejected.
"""

from __future__ import annotations

from .graph import Graph, GraphFormatError, vertex_pairs

_HEADER = ">>graph6<<"
_MAX_SHORT = 62
_MAX_MEDIUM = 258047


def _encode_n(n: int) -> str:
    if n <= _MAX_SHORT:
        return chr(n + 63)
    if n <= _MAX_MEDIUM:
        return chr(126) + "".join(chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0))
    raise ValueError(f"graph6 encoding supports n <= {_MAX_MEDIUM}, got {n}")


def encode_graph6(g: Graph) -> str:
    bits = [1 if p in g.edges else 0 for p in vertex_pairs(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        body.append(chr(value + 63))
    return _encode_n(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) for c in s]
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte!r} at offset {pos} outside [63, 126]")

    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) >= 2 and data[1] == 126:
        raise GraphFormatError("8-byte graph6 size header (n >= 258048) is not supported")
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated 4-byte graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]

    pairs = vertex_pairs(n)
    expected = -(-len(pairs) // 6)
    if len(body) < expected:
        raise GraphFormatError(f"truncated graph6 body: expected {expected} bytes, got {len(body)}")
    if len(body) > expected:
        raise GraphFormatError(f"graph6 body too long: expected {expected} bytes, got {len(body)}")

    edges = []
    for k, pair in enumerate(pairs):
        byte = body[k // 6] - 63
        if byte >> (5 - k % 6) & 1:
            edges.append(pair)
    return Graph(n, edges)
