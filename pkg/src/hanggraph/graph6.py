"""graph6 codec.

One graph per line of printable ASCII: a size header followed by the upper
triangle of the adjacency matrix, column by column, packed into 6-bit chunks
offset by 63.  An optional ">>graph6<<" prefix is accepted and stripped.
Encoding is canonical (zero padding); decoding tolerates nonzero padding bits
but rejects wrong lengths and out-of-range bytes, reporting the byte offset.
"""

from __future__ import annotations

from .graph import Graph, GraphInputError, _build

PREFIX = ">>graph6<<"


class Graph6Error(GraphInputError):
    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Error(f"graph too large for graph6: {n} vertices")


def _decode_size(s: str) -> tuple[int, int]:
    """Returns (n, bytes consumed)."""

    def group(offset: int, count: int) -> int:
        val = 0
        for i in range(count):
            pos = offset + i
            if pos >= len(s):
                raise Graph6Error("truncated size header", offset=pos)
            c = ord(s[pos]) - 63
            if not 0 <= c <= 63:
                raise Graph6Error(f"invalid byte {s[pos]!r} in size header", offset=pos)
            val = (val << 6) | c
        return val

    if not s:
        raise Graph6Error("empty graph6 string", offset=0)
    first = ord(s[0]) - 63
    if first < 0 or first > 63:
        raise Graph6Error(f"invalid leading byte {s[0]!r}", offset=0)
    if s[0] != "~":
        return first, 1
    if len(s) >= 2 and s[1] == "~":
        return group(2, 6), 8
    return group(1, 3), 4


def to_graph6(g: Graph) -> str:
    """Canonical graph6 line for g (labels are not representable and drop)."""
    head = _encode_size(g.n)
    masks = g.neighbor_masks()
    chunks = []
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = masks[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        chunks.append(chr(acc + 63))
    return head + "".join(chunks)


def from_graph6(line: str) -> Graph:
    """Decode one graph6 line; the optional ">>graph6<<" prefix is stripped."""
    s = line.strip()
    if s.startswith(PREFIX):
        s = s[len(PREFIX):]
    if not s:
        raise Graph6Error("empty graph6 string", offset=0)
    n, consumed = _decode_size(s)
    body = s[consumed:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error(
            f"truncated bit field: need {need} bytes for {n} vertices, got {len(body)}",
            offset=consumed + len(body))
    if len(body) > need:
        raise Graph6Error("trailing data after bit field", offset=consumed + need)
    bits = 0
    for pos, ch in enumerate(body):
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise Graph6Error(f"invalid byte {ch!r} in bit field", offset=consumed + pos)
        bits = (bits << 6) | c
    bits >>= 6 * need - nbits  # drop padding
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if k >= 0 and (bits >> k) & 1:
                edges.append((i, j))
            k -= 1
    return _build(n, edges)
