"""graph6 and edge-list text formats.

graph6 follows the format description distributed with nauty: a size
prefix N(n) followed by the upper triangle of the adjacency matrix in
column order, packed six bits per printable byte (offset 63).
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .graph import Graph, GraphError, from_edge_list

_HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    """Malformed graph6 text; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> list[int]:
    if n < 0:
        raise GraphError("negative vertex count")
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= 68719476735:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise GraphError(f"n = {n} is too large for graph6")


def to_graph6(g: Graph) -> str:
    bits = []
    edges = g.edge_set
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in edges else 0)
    bits += [0] * (-len(bits) % 6)
    groups = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(v + 63) for v in _encode_n(g.n) + groups)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        base = len(_HEADER)
        s = s[base:]
    vals = []
    for k, ch in enumerate(s):
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"character {ch!r} outside the graph6 range", base + k)
        vals.append(v)
    if not vals:
        raise Graph6Error("empty graph6 string", base)
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error("truncated size field", base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated size field", base + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}",
                          base + pos + min(len(body), need))
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                pairs.append((i, j))
            k += 1
    pad_bits = need * 6 - nbits
    if pad_bits and body[-1] & ((1 << pad_bits) - 1):
        raise Graph6Error("non-zero padding bits", base + pos + need - 1)
    return from_edge_list(n, pairs)


def read_graph6_file(path: str | Path) -> list[Graph]:
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(from_graph6(line))
    return out


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> None:
    Path(path).write_text("".join(to_graph6(g) + "\n" for g in graphs))


def to_edge_list_text(g: Graph) -> str:
    return f"{g.n}\n" + "".join(f"{i} {j}\n" for i, j in g.edges)


def from_edge_list_text(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise GraphError("edge-list text is empty; expected an 'n' header line")
    try:
        n = int(lines[0])
        pairs = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge-list text: {exc}") from None
    for p in pairs:
        if len(p) != 2:
            raise GraphError(f"edge line must hold two labels, got {p}")
    return from_edge_list(n, pairs)
