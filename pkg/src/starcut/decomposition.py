"""Star cutsets and the recursive decomposition of weakly chordal graphs.

A star cutset is a set S whose removal disconnects the graph, such that some
center c in S is adjacent to all of S - {c}. Every weakly chordal graph is
complete, or the complement of a perfect matching, or has a star cutset, and
the proof of that fact is constructive; ``find_star_cutset`` follows it
branch by branch:

  (i)   the graph is a disjoint union of completes: one vertex suffices;
  (ii)  the t-complete set C of a maximal anticonnected t yields a star
        cutset S of G[C], and t union S lifts to the whole graph;
  (iii) V = t union C with G[C] a co-matching: split on the structure of t
        (singleton, or recurse into G[t]);
  (iv)  some outside vertex sees C: drop the non-neighbour of its contact.

Every cutset produced is verified before being returned; a verification
failure raises InvariantViolationError since the construction guarantees it.
``star_cutset_exists_bruteforce`` is the independent oracle: it enumerates
every center and every subset of its closed neighbourhood, with no theory in
the loop, and is what the decomposition is cross-checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphInputError, InvariantViolationError
from .graphs import (
    Graph,
    _bits,
    _complete_to_mask,
    _component_masks,
    _is_anticonnected_mask,
    _is_connected_mask,
    _mask_of,
)
from .lemmas import _has_nonadjacent_pair
from .recognition import (
    is_complement_of_perfect_matching,
    is_complete,
    is_weakly_chordal,
)


@dataclass(frozen=True)
class StarCutset:
    center: int
    members: frozenset[int]

    def to_record(self) -> str:
        return f"star-cutset[center={self.center}]:{','.join(map(str, sorted(self.members)))}"


@dataclass(frozen=True)
class Leaf:
    """A terminal block: a clique or the complement of a perfect matching."""

    kind: str  # "clique" | "co-matching"
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class Split:
    """A star cutset node; children are the components of g - S, each with S."""

    cutset: StarCutset
    branch: str  # "i" | "ii" | "iii" | "iv"
    vertices: tuple[int, ...]
    children: tuple["DecompositionNode", ...]


DecompositionNode = Leaf | Split


# -- verification --------------------------------------------------------------


def _star_cutset_ok(
    adj: tuple[int, ...], full: int, center: int, members_mask: int
) -> bool:
    cbit = 1 << center
    if not members_mask & cbit:
        return False
    if members_mask & ~(cbit | adj[center]):
        return False
    rest = full & ~members_mask
    if rest.bit_count() < 2:
        return False
    return not _is_connected_mask(adj, rest)


def verify_star_cutset(g: Graph, cutset: StarCutset) -> bool:
    """Definition-level check: star shape around the center, removal disconnects."""
    if not 0 <= cutset.center < g.n:
        return False
    try:
        members_mask = _mask_of(cutset.members, g.n)
    except GraphInputError:
        return False
    return _star_cutset_ok(g.adj, g.full, cutset.center, members_mask)


# -- maximal anticonnected sets ---------------------------------------------------


def _grow_maximal_mask(adj: tuple[int, ...], full: int, seed_mask: int) -> int:
    tmask = seed_mask
    grown = True
    while grown:
        grown = False
        rest = full & ~tmask
        while rest:
            wb = rest & -rest
            rest ^= wb
            ext = tmask | wb
            if _is_anticonnected_mask(adj, full, ext) and _has_nonadjacent_pair(
                adj, _complete_to_mask(adj, full, ext)
            ):
                tmask = ext
                grown = True
                break  # restart the scan from the smallest id
    return tmask


def grow_maximal_T(g: Graph, seed: frozenset[int] | set[int]) -> frozenset[int]:
    """Extend a seed to an inclusion-maximal anticonnected set whose complete
    set keeps two non-adjacent vertices.

    Vertices are tried in ascending id order and the scan restarts after
    every successful addition, so the result is deterministic.
    """
    seed_mask = _mask_of(seed, g.n)
    if seed_mask == 0:
        raise GraphInputError("seed must be nonempty")
    if not _is_anticonnected_mask(g.adj, g.full, seed_mask):
        raise GraphInputError(f"seed {sorted(seed)} is not anticonnected")
    ct = _complete_to_mask(g.adj, g.full, seed_mask)
    if not _has_nonadjacent_pair(g.adj, ct):
        raise GraphInputError(
            f"complete set of seed {sorted(seed)} has no non-adjacent pair"
        )
    return frozenset(_bits(_grow_maximal_mask(g.adj, g.full, seed_mask)))


# -- the constructive search ------------------------------------------------------


def _first_p3(adj: tuple[int, ...], n: int) -> tuple[int, int, int] | None:
    """First induced path a-b-c by ascending (center, a, c) scan.

    A graph has no induced P3 exactly when every component is complete, so
    None doubles as the base-case detector.
    """
    for b in range(n):
        nbrs = list(_bits(adj[b]))
        for i, a in enumerate(nbrs):
            row = adj[a]
            for c in nbrs[i + 1 :]:
                if not row >> c & 1:
                    return (a, b, c)
    return None


def _find_tagged(g: Graph) -> tuple[int, int, str] | None:
    """(center, members_mask, branch) in g-local ids, or None when terminal."""
    n = g.n
    adj = g.adj
    full = g.full
    if is_complete(g) or is_complement_of_perfect_matching(g):
        return None

    p3 = _first_p3(adj, n)
    if p3 is None:
        # disjoint union of >= 2 completes on >= 3 vertices: one vertex cuts
        for v in range(n):
            rest = full & ~(1 << v)
            if rest.bit_count() >= 2 and not _is_connected_mask(adj, rest):
                return (v, 1 << v, "i")
        raise InvariantViolationError("union of completes without a one-vertex cutset")

    tmask = _grow_maximal_mask(adj, full, 1 << p3[1])
    ct = _complete_to_mask(adj, full, tmask)
    sub_c, parents_c = g._induced_mask(ct)

    rec = _find_tagged(sub_c)
    if rec is not None:
        c_center, c_members, _ = rec
        members = tmask
        for i in _bits(c_members):
            members |= 1 << parents_c[i]
        return (parents_c[c_center], members, "ii")

    # G[C] is terminal; complete is impossible since C keeps a non-adjacent pair
    if not is_complement_of_perfect_matching(sub_c):
        raise InvariantViolationError("terminal complete set that is not a co-matching")

    if tmask | ct == full:
        if tmask.bit_count() == 1:
            t0 = tmask.bit_length() - 1
            xy = None
            for x in _bits(ct):
                miss = ct & ~adj[x] & ~(1 << x)
                if miss:
                    xy = (1 << x) | (miss & -miss)
                    break
            assert xy is not None
            return (t0, (tmask | ct) & ~xy, "iii")
        sub_t, parents_t = g._induced_mask(tmask)
        rec_t = _find_tagged(sub_t)
        if rec_t is None:
            # then g itself would be complete or a co-matching, handled above
            raise InvariantViolationError("terminal t inside a non-terminal graph")
        t_center, t_members, _ = rec_t
        members = ct
        for i in _bits(t_members):
            members |= 1 << parents_t[i]
        return (parents_t[t_center], members, "iii")

    outside = full & ~tmask & ~ct
    for x in _bits(outside):
        contact = adj[x] & ct
        if contact:
            y = (contact & -contact).bit_length() - 1
            miss = ct & ~adj[y] & ~(1 << y)
            assert miss.bit_count() == 1, "co-matching vertex needs one non-neighbour"
            return (y, (tmask | ct) & ~miss, "iv")
    c0 = (ct & -ct).bit_length() - 1
    return (c0, tmask | (1 << c0), "iv")


def _find_verified(g: Graph) -> tuple[StarCutset, str] | None:
    hit = _find_tagged(g)
    if hit is None:
        return None
    center, members_mask, branch = hit
    if not _star_cutset_ok(g.adj, g.full, center, members_mask):
        raise InvariantViolationError(
            f"constructed set is not a star cutset: center={center} "
            f"members={sorted(_bits(members_mask))} branch={branch}"
        )
    return StarCutset(center, frozenset(_bits(members_mask))), branch


def find_star_cutset(g: Graph, check_preconditions: bool = True) -> StarCutset | None:
    """A verified star cutset of a weakly chordal graph, or None.

    None happens exactly when the graph is complete or the complement of a
    perfect matching; those graphs genuinely have no star cutset.
    """
    if check_preconditions:
        cert = is_weakly_chordal(g)
        if not cert:
            raise GraphInputError(
                f"graph is not weakly chordal: {cert.witness.to_record()}"
            )
    hit = _find_verified(g)
    return None if hit is None else hit[0]


# -- the brute-force oracle ---------------------------------------------------------


def star_cutset_exists_bruteforce(g: Graph) -> StarCutset | None:
    """Exhaustive search over centers and all subsets of closed neighbourhoods.

    No shortcuts: neither direction of the subset order is monotone for
    disconnection (removing more vertices can re-connect what is left by
    deleting a stranded piece, removing fewer can keep a bridge), so every
    candidate S with c in S, S a subset of {c} plus N(c), is tested. First
    hit in ascending (center, submask) order wins. Meant for n up to ~12.
    """
    n = g.n
    adj = g.adj
    full = g.full
    for c in range(n):
        cbit = 1 << c
        nbrs = adj[c]
        sub = 0
        while True:
            members = cbit | sub
            rest = full & ~members
            if rest.bit_count() >= 2 and not _is_connected_mask(adj, rest):
                return StarCutset(c, frozenset(_bits(members)))
            sub = (sub - nbrs) & nbrs
            if sub == 0:
                break
    return None


# -- the full decomposition ----------------------------------------------------------


def decompose(g: Graph, check_preconditions: bool = True) -> DecompositionNode:
    """Decomposition tree: leaves are cliques or co-matchings, splits carry a
    verified star cutset; each child is one component of g - S together with
    S, as an induced subgraph. All vertex ids in the tree are ids of g.
    """
    if check_preconditions:
        cert = is_weakly_chordal(g)
        if not cert:
            raise GraphInputError(
                f"graph is not weakly chordal: {cert.witness.to_record()}"
            )

    def worker(sub: Graph, root_ids: tuple[int, ...]) -> DecompositionNode:
        if is_complete(sub):
            return Leaf("clique", root_ids)
        if is_complement_of_perfect_matching(sub):
            return Leaf("co-matching", root_ids)
        hit = _find_verified(sub)
        if hit is None:
            raise InvariantViolationError("non-terminal graph without a star cutset")
        sc, branch = hit
        members_mask = _mask_of(sc.members, sub.n)
        children = []
        for comp in _component_masks(sub.adj, sub.full & ~members_mask):
            block = comp | members_mask
            child, parents = sub._induced_mask(block)
            children.append(worker(child, tuple(root_ids[p] for p in parents)))
        lifted = StarCutset(
            root_ids[sc.center], frozenset(root_ids[m] for m in sc.members)
        )
        return Split(lifted, branch, root_ids, tuple(children))

    return worker(g, tuple(range(g.n)))


def validate_decomposition(g: Graph, node: DecompositionNode, _root: bool = True) -> bool:
    """Re-derive every claim a tree makes, from the root graph alone."""
    if _root and tuple(node.vertices) != tuple(range(g.n)):
        return False
    sub, parents = g.induced(node.vertices)
    if isinstance(node, Leaf):
        if node.kind == "clique":
            return is_complete(sub)
        if node.kind == "co-matching":
            return is_complement_of_perfect_matching(sub)
        return False
    if not isinstance(node, Split):
        return False
    pos = {p: i for i, p in enumerate(parents)}
    if node.cutset.center not in pos or not all(m in pos for m in node.cutset.members):
        return False
    local = StarCutset(
        pos[node.cutset.center], frozenset(pos[m] for m in node.cutset.members)
    )
    if not verify_star_cutset(sub, local):
        return False
    members_mask = _mask_of(local.members, sub.n)
    comps = _component_masks(sub.adj, sub.full & ~members_mask)
    if len(comps) != len(node.children):
        return False
    for comp, child in zip(comps, node.children):
        want = tuple(parents[i] for i in _bits(comp | members_mask))
        if tuple(child.vertices) != want:
            return False
        if len(child.vertices) >= len(node.vertices):
            return False
        if not validate_decomposition(g, child, _root=False):
            return False
    return True


def serialize_tree(node: DecompositionNode, depth: int = 0) -> str:
    ind = "  " * depth
    if isinstance(node, Leaf):
        verts = ",".join(map(str, node.vertices))
        return f"{ind}LEAF {node.kind} {{{verts}}}"
    members = ",".join(map(str, sorted(node.cutset.members)))
    lines = [
        f"{ind}SPLIT center={node.cutset.center} S={{{members}}} branch={node.branch}"
    ]
    for child in node.children:
        lines.append(serialize_tree(child, depth + 1))
    return "\n".join(lines)
