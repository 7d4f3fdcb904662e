"""Hole and antihole detection and the graph-class predicates built on it.

A hole is an induced cycle of length >= 4 (length >= 5 is "long"); an
antihole is a hole of the complement. Negative class verdicts always carry a
witness that re-validates against the input graph, so a failed recognition
can be checked independently of the search that produced it.

Witness searches are deterministic: ascending start vertex, ascending DFS
extensions, first qualifying closure wins. Counts to keep in mind: these are
exhaustive searches meant for desk-scale graphs (holes: n up to ~20 is fine,
is_berge up to ~14, is_meyniel up to ~12).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphInputError
from .graphs import Graph, _bits, _component_masks

# -- certificates ------------------------------------------------------------


@dataclass(frozen=True)
class Hole:
    """An induced cycle, recorded as its vertex sequence in cyclic order."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_record(self) -> str:
        return f"hole[{self.length}]:{','.join(map(str, self.vertices))}"


@dataclass(frozen=True)
class Antihole:
    """An induced cycle of the complement, vertices in cyclic order there."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_record(self) -> str:
        return f"antihole[{self.length}]:{','.join(map(str, self.vertices))}"


@dataclass(frozen=True)
class OddCycleWitness:
    """An odd cycle (length >= 5) together with its chords, at most one."""

    vertices: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_record(self) -> str:
        verts = ",".join(map(str, self.vertices))
        return f"odd-cycle[{self.length};chords={len(self.chords)}]:{verts}"


Witness = Hole | Antihole | OddCycleWitness


@dataclass(frozen=True)
class ClassCertificate:
    """Verdict plus, when negative, a re-validating witness."""

    verdict: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.verdict


# -- witness validators -------------------------------------------------------


def is_hole_sequence(g: Graph, seq: tuple[int, ...]) -> bool:
    """Cyclically consecutive vertices adjacent, all other pairs not."""
    k = len(seq)
    if k < 4 or len(set(seq)) != k:
        return False
    if not all(0 <= v < g.n for v in seq):
        return False
    adj = g.adj
    for i in range(k):
        for j in range(i + 1, k):
            want = j - i == 1 or (i == 0 and j == k - 1)
            if bool(adj[seq[i]] >> seq[j] & 1) != want:
                return False
    return True


def is_antihole_sequence(g: Graph, seq: tuple[int, ...]) -> bool:
    return is_hole_sequence(g.complement(), seq)


def cycle_chords(g: Graph, seq: tuple[int, ...]) -> list[tuple[int, int]]:
    """Chords of a (not necessarily induced) cycle given in cyclic order."""
    k = len(seq)
    if k < 3 or len(set(seq)) != k:
        raise GraphInputError("not a cycle: repeated or too few vertices")
    adj = g.adj
    for i in range(k):
        if not adj[seq[i]] >> seq[(i + 1) % k] & 1:
            raise GraphInputError("not a cycle: missing edge")
    out = []
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if adj[seq[i]] >> seq[j] & 1:
                out.append((seq[i], seq[j]))
    return out


# -- hole search ---------------------------------------------------------------


def _find_hole_rows(
    n: int, adj: tuple[int, ...], min_len: int, parity: str
) -> tuple[int, ...] | None:
    """First induced cycle of length >= min_len matching parity, or None.

    Canonical form searched: lowest cycle vertex first, second vertex smaller
    than the last (kills the reflected duplicate). Extension candidates must
    be adjacent to the path end and to no other path vertex; a candidate
    adjacent to the start closes a cycle and is never walked through.
    """
    want_odd = parity == "odd"
    want_even = parity == "even"
    full = (1 << n) - 1

    for s in range(n):
        sbit = 1 << s
        hi = full & ~((sbit << 1) - 1)
        adj_s = adj[s]
        path = [s]

        def extend(last: int, closed: int, pmask: int) -> tuple[int, ...] | None:
            cand = adj[last] & hi & ~closed & ~pmask
            closers = cand & adj_s
            if closers:
                length = len(path) + 1
                if length >= min_len and not (
                    (want_odd and length % 2 == 0) or (want_even and length % 2 == 1)
                ):
                    p1 = path[1]
                    for w in _bits(closers):
                        if p1 < w:
                            return (*path, w)
            newclosed = closed | adj[last]
            ext = cand & ~adj_s
            while ext:
                wb = ext & -ext
                ext ^= wb
                wv = wb.bit_length() - 1
                path.append(wv)
                found = extend(wv, newclosed, pmask | wb)
                if found:
                    return found
                path.pop()
            return None

        starts = adj_s & hi
        while starts:
            vb = starts & -starts
            starts ^= vb
            v1 = vb.bit_length() - 1
            path.append(v1)
            found = extend(v1, 0, sbit | vb)
            if found:
                return found
            path.pop()
    return None


def find_hole(g: Graph, min_len: int = 4, parity: str = "any") -> Hole | None:
    """First hole of length >= min_len with the requested parity, or None."""
    if min_len < 4:
        raise GraphInputError("holes have length at least 4")
    if parity not in ("any", "odd", "even"):
        raise GraphInputError(f"parity must be any|odd|even, got {parity!r}")
    seq = _find_hole_rows(g.n, g.adj, min_len, parity)
    if seq is None:
        return None
    hole = Hole(seq)
    assert is_hole_sequence(g, hole.vertices)
    return hole


def find_long_antihole(g: Graph) -> Antihole | None:
    """First antihole of length >= 5, or None.

    C5 is self-complementary, so a graph whose only long structure is a C5
    has this too; by convention the hole is the preferred witness and this
    function is only consulted after find_hole.
    """
    co = g.complement()
    seq = _find_hole_rows(co.n, co.adj, 5, "any")
    if seq is None:
        return None
    ah = Antihole(seq)
    assert is_antihole_sequence(g, ah.vertices)
    return ah


# -- class predicates -----------------------------------------------------------


def is_weakly_chordal(g: Graph) -> ClassCertificate:
    """No hole of length >= 5 in the graph or its complement."""
    hole = find_hole(g, min_len=5)
    if hole is not None:
        return ClassCertificate(False, hole)
    ah = find_long_antihole(g)
    if ah is not None:
        return ClassCertificate(False, ah)
    return ClassCertificate(True)


def is_odd_hole_free(g: Graph) -> ClassCertificate:
    """No induced odd cycle of length >= 5."""
    hole = find_hole(g, min_len=5, parity="odd")
    if hole is not None:
        return ClassCertificate(False, hole)
    return ClassCertificate(True)


def is_berge(g: Graph) -> ClassCertificate:
    """No odd hole in the graph or its complement."""
    hole = find_hole(g, min_len=5, parity="odd")
    if hole is not None:
        return ClassCertificate(False, hole)
    co = g.complement()
    seq = _find_hole_rows(co.n, co.adj, 5, "odd")
    if seq is not None:
        ah = Antihole(seq)
        assert is_antihole_sequence(g, ah.vertices)
        return ClassCertificate(False, ah)
    return ClassCertificate(True)


def _find_bad_meyniel_cycle(
    n: int, adj: tuple[int, ...]
) -> tuple[int, ...] | None:
    """First odd cycle of length >= 5 carrying at most one chord, or None.

    Walks simple paths from each start vertex s (all others > s), tracking
    the number of adjacent non-consecutive pairs seen so far, the potential
    closing pair (p0, end) included. A branch dies once that count reaches 3:
    any cycle through it keeps at least two genuine chords. The cycle closes
    when the end is adjacent to s; its chord count is the running count minus
    one, the closing edge itself.
    """
    full = (1 << n) - 1
    for s in range(n):
        sbit = 1 << s
        hi = full & ~((sbit << 1) - 1)
        path = [s]

        def walk(last: int, pmask: int, chords: int) -> tuple[int, ...] | None:
            length = len(path)
            if (
                length >= 5
                and length % 2 == 1
                and adj[last] & sbit
                and chords <= 2
                and path[1] < last
            ):
                return tuple(path)
            lastbit = 1 << last
            cand = adj[last] & hi & ~pmask
            while cand:
                wb = cand & -cand
                cand ^= wb
                wv = wb.bit_length() - 1
                added = (adj[wv] & (pmask ^ lastbit)).bit_count()
                newchords = chords + added
                if newchords <= 2:
                    path.append(wv)
                    found = walk(wv, pmask | wb, newchords)
                    if found:
                        return found
                    path.pop()
            return None

        starts = adj[s] & hi
        while starts:
            vb = starts & -starts
            starts ^= vb
            v1 = vb.bit_length() - 1
            path.append(v1)
            found = walk(v1, sbit | vb, 0)
            if found:
                return found
            path.pop()
    return None


def is_meyniel(g: Graph) -> ClassCertificate:
    """Every odd cycle of length >= 5 has at least two chords.

    All cycles count here, induced or not, which is what makes this predicate
    the expensive one; the chord budget keeps the search polynomial-ish in
    practice but it is still meant for n up to ~12.
    """
    seq = _find_bad_meyniel_cycle(g.n, g.adj)
    if seq is None:
        return ClassCertificate(True)
    chords = tuple(cycle_chords(g, seq))
    assert len(seq) >= 5 and len(seq) % 2 == 1 and len(chords) <= 1
    return ClassCertificate(False, OddCycleWitness(seq, chords))


def is_complete(g: Graph) -> bool:
    """Every pair adjacent; vacuously true for n <= 1."""
    full = g.full
    return all(r == full & ~(1 << v) for v, r in enumerate(g.adj))


def is_complement_of_perfect_matching(g: Graph) -> bool:
    """n even and positive, and every vertex has exactly one non-neighbour."""
    if g.n == 0 or g.n % 2 == 1:
        return False
    full = g.full
    return all(
        (full & ~r & ~(1 << v)).bit_count() == 1 for v, r in enumerate(g.adj)
    )


def is_disjoint_union_of_completes(g: Graph) -> bool:
    """Every connected component induces a complete graph."""
    adj = g.adj
    for comp in _component_masks(adj, g.full):
        for v in _bits(comp):
            if adj[v] & comp != comp & ~(1 << v):
                return False
    return True
