"""Two-pairs, even pairs, and coloring by contraction.

A 2-pair is a pair of distinct vertices such that every chordless path
between them has length exactly 2; an even pair only requires every such
path to have even length. Both are vacuously valid for vertices in
different components, matching how the underlying existence proofs use
cross-component pairs.

``find_two_pair`` follows the constructive proof for weakly chordal graphs:
grow a maximal anticonnected set T from the center of an induced P3, recurse
into the graph induced on the vertices complete to T, and lift the innermost
pair back through the parent-id maps. ``find_even_pair_meyniel`` is the
analogous recursion for Meyniel graphs, descending into a P3 center's
neighbourhood. Both verify the returned pair against the definition and
raise InvariantViolationError if the construction ever produced a bad one.

Coloring contracts 2-pairs until the graph is complete and pulls the clique
coloring back through the contraction history; the color count is checked
against a brute-force maximum clique, loudly, because optimality rests on a
theorem this package does not prove.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import _first_p3, _grow_maximal_mask
from .errors import GraphInputError, InvariantViolationError
from .graphs import (
    Graph,
    _bits,
    _complete_to_mask,
    _component_masks,
    enumerate_chordless_paths,
)
from .recognition import is_complete, is_meyniel, is_weakly_chordal


@dataclass(frozen=True)
class TwoPair:
    a: int
    b: int

    def to_record(self) -> str:
        return f"two-pair:{self.a},{self.b}"


@dataclass(frozen=True)
class EvenPair:
    a: int
    b: int

    def to_record(self) -> str:
        return f"even-pair:{self.a},{self.b}"


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    num_colors: int

    def to_record(self) -> str:
        return f"coloring[{self.num_colors}]:{','.join(map(str, self.colors))}"


def _check_pair(g: Graph, a: int, b: int) -> None:
    for v in (a, b):
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} out of range for n={g.n}")
    if a == b:
        raise GraphInputError("pair vertices must be distinct")


def verify_two_pair(g: Graph, a: int, b: int) -> bool:
    """Every chordless a-b path has length exactly 2; vacuously true when
    there is none. An adjacent pair fails through the length-1 path."""
    _check_pair(g, a, b)
    return all(len(p) == 3 for p in enumerate_chordless_paths(g, a, b))


def verify_even_pair(g: Graph, a: int, b: int) -> bool:
    """Every chordless a-b path has even length; vacuously true when none."""
    _check_pair(g, a, b)
    return all(len(p) % 2 == 1 for p in enumerate_chordless_paths(g, a, b))


def _cross_component_pair(g: Graph) -> tuple[int, int]:
    comps = _component_masks(g.adj, g.full)
    assert len(comps) >= 2
    u = (comps[0] & -comps[0]).bit_length() - 1
    v = (comps[1] & -comps[1]).bit_length() - 1
    return (u, v)


def _two_pair_worker(g: Graph) -> tuple[int, int] | None:
    if is_complete(g):
        return None
    p3 = _first_p3(g.adj, g.n)
    if p3 is None:
        # disjoint union of >= 2 completes: any cross-component pair works
        return _cross_component_pair(g)
    tmask = _grow_maximal_mask(g.adj, g.full, 1 << p3[1])
    ct = _complete_to_mask(g.adj, g.full, tmask)
    sub, parents = g._induced_mask(ct)
    inner = _two_pair_worker(sub)
    if inner is None:
        # the growth invariant keeps a non-adjacent pair inside C(T)
        raise InvariantViolationError("complete set C(T) became a clique")
    return (parents[inner[0]], parents[inner[1]])


def find_two_pair(g: Graph, check_preconditions: bool = True) -> TwoPair | None:
    """A verified 2-pair of a weakly chordal graph; None iff g is complete.

    Follows the existence proof: seed T with the center of the first induced
    P3, grow it maximal, recurse into G[C(T)]; the innermost pair lifts back
    unchanged. The result is re-checked against the definition before being
    returned.
    """
    if check_preconditions:
        cert = is_weakly_chordal(g)
        if not cert:
            raise GraphInputError(
                f"graph is not weakly chordal: {cert.witness.to_record()}"
            )
    pair = _two_pair_worker(g)
    if pair is None:
        return None
    a, b = sorted(pair)
    if not verify_two_pair(g, a, b):
        raise InvariantViolationError(f"constructed pair ({a},{b}) is not a 2-pair")
    return TwoPair(a, b)


def _even_pair_worker(g: Graph) -> tuple[int, int] | None:
    if is_complete(g):
        return None
    p3 = _first_p3(g.adj, g.n)
    if p3 is None:
        return _cross_component_pair(g)
    v = p3[1]
    sub, parents = g._induced_mask(g.adj[v])
    inner = _even_pair_worker(sub)
    if inner is None:
        # N(v) holds the two non-adjacent ends of the P3
        raise InvariantViolationError("P3 center with a complete neighbourhood")
    return (parents[inner[0]], parents[inner[1]])


def find_even_pair_meyniel(g: Graph, check_preconditions: bool = True) -> EvenPair | None:
    """A verified even pair of a Meyniel graph; None iff g is complete.

    The recursion mirrors the proof: a disjoint union of completes yields a
    cross-component pair, otherwise descend into the neighbourhood of the
    first P3 center, where any even pair of the neighbourhood graph is an
    even pair of the whole graph.
    """
    if check_preconditions:
        cert = is_meyniel(g)
        if not cert:
            raise GraphInputError(f"graph is not Meyniel: {cert.witness.to_record()}")
    pair = _even_pair_worker(g)
    if pair is None:
        return None
    a, b = sorted(pair)
    if not verify_even_pair(g, a, b):
        raise InvariantViolationError(f"constructed pair ({a},{b}) is not an even pair")
    return EvenPair(a, b)


def contract_pair(g: Graph, a: int, b: int) -> tuple[Graph, tuple[int, ...]]:
    """Merge non-adjacent a and b into one vertex adjacent to N(a) | N(b).

    Returns the contracted graph and old_to_new, mapping every vertex of g
    to its id in the result; a and b map to the same id. The merged vertex
    sits where min(a, b) was, ids above max(a, b) shift down by one.
    """
    _check_pair(g, a, b)
    if g.adjacent(a, b):
        raise GraphInputError(f"cannot contract adjacent pair ({a},{b})")
    lo, hi = min(a, b), max(a, b)
    old_to_new = []
    for v in range(g.n):
        w = lo if v == hi else v
        old_to_new.append(w - 1 if w > hi else w)
    merged_row_old = (g.adj[lo] | g.adj[hi]) & ~(1 << lo) & ~(1 << hi)
    rows = []
    for v in range(g.n):
        if v == hi:
            continue
        row_old = merged_row_old if v == lo else g.adj[v]
        row = 0
        for u in _bits(row_old):
            row |= 1 << old_to_new[u]
        rows.append(row)
    return Graph._from_rows(g.n - 1, tuple(rows)), tuple(old_to_new)


def max_clique_bruteforce(g: Graph) -> int:
    """Exact maximum clique size by branch and bound; intended for n <= ~20."""
    adj = g.adj
    best = 0

    def extend(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        rem = cand
        while rem:
            if size + rem.bit_count() <= best:
                return
            b = rem & -rem
            rem ^= b
            extend(size + 1, rem & adj[b.bit_length() - 1])

    extend(0, g.full)
    return best


def color_weakly_chordal(
    g: Graph, check_preconditions: bool = True, check_optimal: bool = True
) -> Coloring:
    """Color by contracting 2-pairs until the graph is complete.

    Each intermediate graph is re-checked for weak chordality; contraction
    leaving the class would break the method and raises
    InvariantViolationError, preserving the instance. With check_optimal the
    color count is compared against a brute-force maximum clique, so a
    non-optimal run fails loudly instead of being trusted.
    """
    if check_preconditions:
        cert = is_weakly_chordal(g)
        if not cert:
            raise GraphInputError(
                f"graph is not weakly chordal: {cert.witness.to_record()}"
            )
    h = g
    history: list[tuple[int, ...]] = []
    while True:
        pair = _two_pair_worker(h)
        if pair is None:
            break
        a, b = pair
        h, old_to_new = contract_pair(h, a, b)
        history.append(old_to_new)
        cert = is_weakly_chordal(h)
        if not cert:
            raise InvariantViolationError(
                f"contracting ({a},{b}) left the class: {cert.witness.to_record()}"
            )
    colors = tuple(range(h.n))  # h is complete, one color per vertex
    for old_to_new in reversed(history):
        colors = tuple(colors[old_to_new[v]] for v in range(len(old_to_new)))
    for u, v in g.edges():
        if colors[u] == colors[v]:
            raise InvariantViolationError(f"improper coloring at edge ({u},{v})")
    k = len(set(colors)) if colors else 0
    if check_optimal:
        omega = max_clique_bruteforce(g)
        if k != omega:
            raise InvariantViolationError(f"coloring used {k} colors, clique size {omega}")
    return Coloring(colors, k)
