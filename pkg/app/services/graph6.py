# app/services/graph6.py

from __future__ import annotations

from app.services.errors import Graph6ParseError
from app.services.graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"

# graph6 packs 6 bits per printable byte, offset by 63.
_BIAS = 63
_SHORT_MAX = 62


def _encode_n(n: int) -> str:
    if n <= _SHORT_MAX:
        return chr(n + _BIAS)
    # 18-bit form: '~' then three 6-bit groups, big-endian.
    return "~" + "".join(chr(((n >> shift) & 0x3F) + _BIAS) for shift in (12, 6, 0))


def _upper_triangle_bits(g: Graph):
    # Column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            yield row >> i & 1


def to_graph6(g: Graph) -> str:
    """Header-less graph6 text for g (no trailing newline)."""
    out = [_encode_n(g.n)]
    acc = 0
    filled = 0
    for bit in _upper_triangle_bits(g):
        acc = acc << 1 | bit
        filled += 1
        if filled == 6:
            out.append(chr(acc + _BIAS))
            acc = filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + _BIAS))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """
    Parse one graph6 record. An optional '>>graph6<<' header and surrounding
    whitespace are ignored; offsets in errors refer to the stripped record.
    """
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6ParseError("Empty graph6 string", 0)

    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"Invalid graph6 character {ch!r}", pos)

    if s[0] != "~":
        n = ord(s[0]) - _BIAS
        pos = 1
    else:
        if len(s) >= 2 and s[1] == "~":
            raise Graph6ParseError(f"Vertex counts above {MAX_VERTICES} are not supported", 1)
        if len(s) < 4:
            raise Graph6ParseError("Truncated vertex count", len(s))
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - _BIAS)
        pos = 4
    if n > MAX_VERTICES:
        raise Graph6ParseError(f"Vertex counts above {MAX_VERTICES} are not supported (got {n})", 0)
    if n == 0:
        raise Graph6ParseError("Graphs must have at least one vertex", 0)

    n_bits = n * (n - 1) // 2
    n_bytes = (n_bits + 5) // 6
    body = s[pos:]
    if len(body) < n_bytes:
        raise Graph6ParseError(f"Expected {n_bytes} data bytes, found {len(body)}", len(s))
    if len(body) > n_bytes:
        raise Graph6ParseError("Trailing data after graph6 record", pos + n_bytes)

    rows = [0] * n
    i, j = 0, 1
    for offset, ch in enumerate(body):
        value = ord(ch) - _BIAS
        for shift in range(5, -1, -1):
            index = offset * 6 + (5 - shift)
            bit = value >> shift & 1
            if index >= n_bits:
                if bit:
                    raise Graph6ParseError("Non-zero padding bits", pos + offset)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._trusted(n, rows)
