"""Graph ingestion and serialization: edge-list text and graph6 records.

Edge-list format: one "u v" pair per line, '#' starts a comment, blank lines
are ignored.  Vertex tokens are arbitrary labels mapped to indices in
first-appearance order.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graphs import Graph


def parse_edge_list(text: str) -> Graph:
    labels: dict[str, int] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(
                f"line {lineno}: expected two vertex tokens, got {len(tokens)}",
                line=lineno,
            )
        pair = []
        for tok in tokens:
            if tok not in labels:
                labels[tok] = len(labels)
            pair.append(labels[tok])
        if pair[0] == pair[1]:
            raise GraphFormatError(
                f"line {lineno}: loop edge '{tokens[0]} {tokens[1]}'", line=lineno
            )
        edges.append((pair[0], pair[1]))
    if not labels:
        raise GraphFormatError("no edges found in edge-list input", line=None)
    ordered = sorted(labels, key=labels.get)
    return Graph(len(labels), edges, labels=ordered)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.label_of(u)} {g.label_of(v)}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + ("\n" if lines else "")


def decode_graph6(text: str) -> Graph:
    """Decode one graph6 record (optional '>>graph6<<' header allowed)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 record", offset=0)
    data = [ord(c) for c in s]
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(
                f"byte {i}: value {byte} outside graph6 range 63..126", offset=i
            )
    vals = [b - 63 for b in data]
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
        body_offset = 1
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated graph6 size header", offset=len(vals))
        if vals[1] == 63:
            if len(vals) < 8:
                raise GraphFormatError(
                    "truncated graph6 size header", offset=len(vals)
                )
            n = 0
            for v in vals[2:8]:
                n = (n << 6) | v
            body = vals[8:]
            body_offset = 8
        else:
            n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
            body = vals[4:]
            body_offset = 4
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(body) != need:
        raise GraphFormatError(
            f"expected {need} payload bytes for n={n}, got {len(body)}",
            offset=body_offset + min(len(body), need),
        )
    bits = []
    for v in body:
        for shift in range(5, -1, -1):
            bits.append((v >> shift) & 1)
    if any(bits[npairs:]):
        bad = npairs + bits[npairs:].index(1)
        raise GraphFormatError(
            f"nonzero padding bit at position {bad}", offset=body_offset + bad // 6
        )
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [chr(n + 63)]
    elif n <= 258047:
        head = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63),
                chr((n & 63) + 63)]
    else:
        raise ValueError("graph too large for this encoder")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return "".join(head + chars)
