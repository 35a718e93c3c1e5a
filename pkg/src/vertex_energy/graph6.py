"""graph6 encoding and decoding.

Layout: an order header ``N(n)`` followed by the upper triangle of the
adjacency matrix, read column by column ((0,1), (0,2), (1,2), (0,3), ...),
packed six bits per byte, most significant bit first, each byte offset by 63.
The final byte is zero-padded.
"""

from __future__ import annotations

from .errors import BadHeader, TrailingData, UnsupportedOrder
from .graph import Graph, new_graph

__all__ = ["parse_graph6", "write_graph6", "MAX_ORDER"]

# largest order for the 4-byte header "~" + 18 bits; beyond it the first
# data byte would read as "~" and collide with the 8-byte form
MAX_ORDER = 258047

_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= MAX_ORDER:
        return "~" + "".join(chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0))
    raise UnsupportedOrder(f"order {n} exceeds {MAX_ORDER}")


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise BadHeader("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise UnsupportedOrder(f"8-byte order header (n > {MAX_ORDER}) not supported")
    if len(data) < 4:
        raise BadHeader("truncated extended order header")
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 line into a :class:`Graph`.

    An optional ``>>graph6<<`` prefix and surrounding whitespace are ignored.
    """
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise BadHeader("graph6 must be ASCII") from exc
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise BadHeader(f"byte {byte!r} at offset {pos} outside the printable range 63..126")

    n, start = _decode_order(data)
    if n < 1:
        raise UnsupportedOrder("graph6 with zero vertices cannot be represented")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[start:]
    if len(body) < nbytes:
        raise BadHeader(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    if len(body) > nbytes:
        raise TrailingData(f"{len(body) - nbytes} bytes after the adjacency data")

    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if ((body[bit // 6] - 63) >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise TrailingData("nonzero padding bits in final byte")
    return new_graph(n, edges)


def write_graph6(g: Graph) -> str:
    out = [_encode_order(g.n)]
    acc = 0
    k = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((i, j) in g.edges)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)
