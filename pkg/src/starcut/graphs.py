"""Immutable bitset graphs plus the chordless-path toolkit.

Vertices are the integers 0..n-1 and vertex identity is positional. The
adjacency of vertex v is a single Python int used as a bitset, so every
set-level operation (neighbourhood intersection, component scans, common
neighbours) is a couple of machine-word operations for n <= 64 and degrades
gracefully for larger n because Python ints are arbitrary precision.

Paths are plain tuples of distinct vertices. A tuple qualifies as a
*chordless path* when consecutive entries are adjacent and no other pair is
adjacent, ends included; ``is_chordless_path`` is the authoritative check.
An *antipath* is a chordless path of the complement.

Vertex-set arguments accept any iterable of vertex ids. Functions that hand
sets back return frozensets. Helpers prefixed with an underscore work on raw
masks and are shared with the sweep harness, which cannot afford wrappers.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import GraphInputError


def _mask_of(vertices: Iterable[int], n: int) -> int:
    m = 0
    for v in vertices:
        if not 0 <= v < n:
            raise GraphInputError(f"vertex {v} out of range 0..{n - 1}")
        m |= 1 << v
    return m


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Undirected simple graph over vertices 0..n-1, immutable once built."""

    __slots__ = ("n", "adj", "full")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphInputError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u},{v}) out of range 0..{n - 1}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.full = (1 << n) - 1

    @classmethod
    def _from_rows(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        """Trusted constructor from prebuilt adjacency rows (no validation)."""
        g = cls.__new__(cls)
        g.n = n
        g.adj = rows
        g.full = (1 << n) - 1
        return g

    # -- basic queries -----------------------------------------------------

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            for v in _bits(m):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> "Graph":
        full = self.full
        rows = tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.adj))
        return Graph._from_rows(self.n, rows)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph plus the map from new ids to parent ids.

        New vertex i corresponds to parent vertex parents[i]; parents is
        sorted ascending, so relative order is preserved.
        """
        vmask = _mask_of(vertices, self.n)
        return self._induced_mask(vmask)

    def _induced_mask(self, vmask: int) -> tuple["Graph", tuple[int, ...]]:
        parents = tuple(_bits(vmask))
        pos = {p: i for i, p in enumerate(parents)}
        rows = []
        for p in parents:
            row = 0
            for q in _bits(self.adj[p] & vmask):
                row |= 1 << pos[q]
            rows.append(row)
        return Graph._from_rows(len(parents), tuple(rows)), parents

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


# -- small named constructors ----------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for v in range(n) for u in range(v)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


# -- connectivity ------------------------------------------------------------


def _is_connected_mask(adj: tuple[int, ...], mask: int) -> bool:
    """Is the subgraph induced on mask connected? Empty mask counts as no."""
    if mask == 0:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def _component_masks(adj: tuple[int, ...], mask: int) -> list[int]:
    """Connected components of the subgraph induced on mask, ascending."""
    comps = []
    rem = mask
    while rem:
        start = rem & -rem
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & mask & ~seen
            seen |= frontier
        comps.append(seen)
        rem &= ~seen
    return comps


def components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components, optionally restricted to an induced vertex set.

    Returned sets are ordered by their smallest member.
    """
    mask = g.full if within is None else _mask_of(within, g.n)
    return [frozenset(_bits(m)) for m in _component_masks(g.adj, mask)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return _is_connected_mask(g.adj, g.full)


def _is_anticonnected_mask(adj: tuple[int, ...], full: int, mask: int) -> bool:
    """Connectivity of the complement restricted to mask (mask nonempty)."""
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            nxt |= full & ~adj[b.bit_length() - 1] & ~b
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def is_anticonnected(g: Graph, vertices: Iterable[int]) -> bool:
    """True when the complement's induced subgraph on the set is connected.

    The empty set is rejected: its anticonnectedness is a convention with no
    good answer, and every caller in this package has a nonempty set in hand.
    """
    mask = _mask_of(vertices, g.n)
    if mask == 0:
        raise GraphInputError("anticonnectedness of the empty set is undefined here")
    return _is_anticonnected_mask(g.adj, g.full, mask)


def _complete_to_mask(adj: tuple[int, ...], full: int, tmask: int) -> int:
    """Mask of vertices outside tmask adjacent to every member of tmask."""
    inter = full
    m = tmask
    while m:
        b = m & -m
        m ^= b
        inter &= adj[b.bit_length() - 1]
    return inter & ~tmask


def complete_set(g: Graph, t: Iterable[int]) -> frozenset[int]:
    """All vertices outside t adjacent to every member of t. May be empty."""
    tmask = _mask_of(t, g.n)
    if tmask == 0:
        raise GraphInputError("complete_set needs a nonempty set")
    return frozenset(_bits(_complete_to_mask(g.adj, g.full, tmask)))


# -- chordless paths ---------------------------------------------------------


def is_path(g: Graph, seq: tuple[int, ...]) -> bool:
    """Distinct vertices, consecutive ones adjacent. Chords allowed."""
    if len(seq) == 0:
        return False
    if len(set(seq)) != len(seq):
        return False
    if not all(0 <= v < g.n for v in seq):
        return False
    adj = g.adj
    return all(adj[seq[i]] >> seq[i + 1] & 1 for i in range(len(seq) - 1))


def is_chordless_path(g: Graph, seq: tuple[int, ...]) -> bool:
    """The chordless-path invariant: ends included, no chord anywhere."""
    if not is_path(g, seq):
        return False
    adj = g.adj
    for i in range(len(seq)):
        for j in range(i + 2, len(seq)):
            if adj[seq[i]] >> seq[j] & 1:
                return False
    return True


def is_chordless_antipath(g: Graph, seq: tuple[int, ...]) -> bool:
    return is_chordless_path(g.complement(), seq)


def find_chordless_path(
    g: Graph, a: int, b: int, forbidden: Iterable[int] = ()
) -> tuple[int, ...] | None:
    """A shortest a-b path avoiding the forbidden set, None if none exists.

    Shortest paths cannot carry chords (a chord would shortcut them), so the
    result is chordless by construction; this is re-checked defensively.
    BFS expands vertices in ascending order, making the result deterministic.
    """
    n = g.n
    if not (0 <= a < n and 0 <= b < n):
        raise GraphInputError(f"endpoints ({a},{b}) out of range")
    fmask = _mask_of(forbidden, n)
    if fmask & (1 << a) or fmask & (1 << b):
        raise GraphInputError("endpoints may not be forbidden")
    if a == b:
        return (a,)
    adj = g.adj
    allowed = g.full & ~fmask
    parent = {a: -1}
    frontier = [a]
    seen = 1 << a
    while frontier and b not in parent:
        nxt = []
        for u in frontier:
            for w in _bits(adj[u] & allowed & ~seen):
                seen |= 1 << w
                parent[w] = u
                nxt.append(w)
        frontier = nxt
    if b not in parent:
        return None
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    out = tuple(path)
    assert is_chordless_path(g, out), "BFS shortest path must be chordless"
    return out


def _chordless_paths_mask(
    adj: tuple[int, ...], a: int, b: int, forbidden_mask: int
) -> list[tuple[int, ...]]:
    """All chordless a-b paths avoiding forbidden_mask, DFS order.

    The pruning rule is what keeps this usable: a partial path only ever
    grows by a vertex adjacent to its current end and to no earlier vertex,
    so every node of the search tree is itself a chordless path.
    """
    out: list[tuple[int, ...]] = []
    bbit = 1 << b
    path = [a]

    def extend(last: int, closed: int, pmask: int) -> None:
        cand = adj[last] & ~closed & ~pmask
        if cand & bbit:
            out.append((*path, b))
            cand ^= bbit
        newclosed = closed | adj[last]
        while cand:
            w = cand & -cand
            cand ^= w
            wv = w.bit_length() - 1
            path.append(wv)
            extend(wv, newclosed, pmask | w)
            path.pop()

    extend(a, forbidden_mask, 1 << a)
    return out


def enumerate_chordless_paths(
    g: Graph, a: int, b: int, forbidden: Iterable[int] = ()
) -> list[tuple[int, ...]]:
    """Every chordless a-b path exactly once, in deterministic DFS order.

    Worst-case exponential; meant for the small graphs the verifiers and
    oracles run on (n up to ~16). ``forbidden`` vertices are excluded, which
    is how callers ask for paths of g minus a set without re-indexing.
    """
    n = g.n
    if not (0 <= a < n and 0 <= b < n):
        raise GraphInputError(f"endpoints ({a},{b}) out of range")
    if a == b:
        raise GraphInputError("endpoints must differ")
    fmask = _mask_of(forbidden, n)
    if fmask & (1 << a) or fmask & (1 << b):
        raise GraphInputError("endpoints may not be forbidden")
    return _chordless_paths_mask(g.adj, a, b, fmask)
