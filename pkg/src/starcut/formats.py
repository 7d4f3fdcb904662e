"""Graph ingestion and emission: edge-list text and graph6.

Edge-list format: first line ``n m``, then m lines ``u v`` with 0-indexed
endpoints. One graph per file.

graph6: the standard printable encoding. The vertex count is one byte
(n + 63) for n <= 62, or '~' followed by three bytes carrying an 18-bit
big-endian value for n <= 258047. The upper triangle of the adjacency
matrix is then read in column order (x01, x02, x12, x03, x13, x23, ...),
packed big-endian into 6-bit groups, zero-padded, and each group is
emitted as group + 63. One graph per line in batch files.
"""

from __future__ import annotations

from .errors import GraphInputError
from .graphs import Graph


def _pair_order(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in graph6 column order."""
    return [(i, j) for j in range(n) for i in range(j)]


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    else:
        raise GraphInputError("graph6 emission supports n <= 258047")
    adj = g.adj
    bits = 0
    nbits = 0
    chars = []
    for j in range(n):
        col = adj[j]
        for i in range(j):
            bits = bits << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(bits + 63))
                bits = 0
                nbits = 0
    if nbits:
        chars.append(chr((bits << (6 - nbits)) + 63))
    return head + "".join(chars)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphInputError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphInputError(f"invalid graph6 byte in {line!r}")
    if data[0] == 63:  # '~'
        if len(data) < 4:
            raise GraphInputError(f"truncated graph6 header in {line!r}")
        if data[1] == 63:
            raise GraphInputError("graph6 n > 258047 not supported")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphInputError(
            f"graph6 body length {len(body)} != expected {need} for n={n}"
        )
    rows = [0] * n
    k = 0
    for j in range(n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._from_rows(n, tuple(rows))


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphInputError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphInputError(f"edge-list line 1: expected 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphInputError(f"edge-list line 1: expected integers, got {lines[0]!r}")
    if len(lines) - 1 != m:
        raise GraphInputError(f"edge-list declares {m} edges, found {len(lines) - 1}")
    edges = []
    for idx, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphInputError(f"edge-list line {idx}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"edge-list line {idx}: expected integers, got {ln!r}")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphInputError(f"edge-list line {idx}: bad edge ({u},{v}) for n={n}")
        edges.append((u, v))
    return Graph(n, edges)


def sniff_format(text: str) -> str:
    """Guess 'edgelist' or 'graph6' from the first nonempty line."""
    for raw in text.splitlines():
        ln = raw.strip()
        if not ln:
            continue
        parts = ln.split()
        if len(parts) == 2:
            try:
                int(parts[0]), int(parts[1])
                return "edgelist"
            except ValueError:
                pass
        return "graph6"
    raise GraphInputError("empty input")


def parse_graphs(text: str, fmt: str | None = None) -> list[Graph]:
    """Parse file content: a single edge-list graph or graph6 lines."""
    fmt = fmt or sniff_format(text)
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    if fmt == "graph6":
        graphs = []
        for idx, raw in enumerate(text.splitlines(), start=1):
            ln = raw.strip()
            if not ln:
                continue
            try:
                graphs.append(parse_graph6(ln))
            except GraphInputError as e:
                raise GraphInputError(f"graph6 line {idx}: {e}")
        if not graphs:
            raise GraphInputError("no graphs in input")
        return graphs
    raise GraphInputError(f"unknown format {fmt!r}")
