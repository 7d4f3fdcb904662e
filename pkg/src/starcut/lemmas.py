"""Checkable forms of the path-versus-anticonnected-set lemmas.

The central object is a LemmaInstance (g, t, p): an anticonnected vertex set
t and a chordless path p of g avoiding t whose ends see all of t. On top of
it live the checks this package exists for:

* check_rr_conclusion: for odd p of length >= 3, find an internal vertex
  complete to t, else a leap in t, else (length exactly 3) an antipath
  through t; Violation is returned only when the surrounding graph has an
  odd hole, which is re-checked whenever a Violation is produced.
* verify_parity_claim: for stable t, a leap exists or the number of
  t-complete edges of p is odd.
* sieve_identity_check: the inclusion-exclusion identity over per-vertex
  complete-edge sets, plus its mod-2 collapse when every proper sub-family
  intersection is odd.
* check_meyniel_lemma / check_wc_lemma / check_maximal_T_path_lemma: the
  neighbourhood-absorption statements for Meyniel and weakly chordal graphs.

Precondition failures raise PreconditionError and are never conflated with a
check returning False: False means a genuine conclusion failure on a valid
instance, which the sweeps harvest as a counterexample candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GraphInputError, InvariantViolationError, PreconditionError
from .graphs import (
    Graph,
    _bits,
    _chordless_paths_mask,
    _complete_to_mask,
    _is_anticonnected_mask,
    _mask_of,
    is_chordless_path,
)
from .recognition import is_meyniel, is_odd_hole_free, is_weakly_chordal


@dataclass(frozen=True)
class LemmaInstance:
    """An anticonnected set plus a chordless path with t-complete ends."""

    g: Graph
    t: frozenset[int]
    p: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "t", frozenset(self.t))
        object.__setattr__(self, "p", tuple(self.p))
        g, t, p = self.g, self.t, self.p
        tmask = _mask_of(t, g.n)
        if tmask == 0:
            raise GraphInputError("t must be nonempty")
        if not _is_anticonnected_mask(g.adj, g.full, tmask):
            raise GraphInputError(f"t={sorted(t)} is not anticonnected")
        if not is_chordless_path(g, p):
            raise GraphInputError(f"p={p} is not a chordless path")
        if _mask_of(p, g.n) & tmask:
            raise GraphInputError("p must avoid t")
        for end in (p[0], p[-1]):
            if g.adj[end] & tmask != tmask:
                raise GraphInputError(f"path end {end} is not t-complete")

    @property
    def tmask(self) -> int:
        return _mask_of(self.t, self.g.n)

    @property
    def length(self) -> int:
        """Path length in edges."""
        return len(self.p) - 1

    def t_is_stable(self) -> bool:
        adj = self.g.adj
        tmask = self.tmask
        return all(adj[v] & tmask == 0 for v in self.t)

    def complete_mask(self) -> int:
        """Mask of t-complete vertices (outside t)."""
        return _complete_to_mask(self.g.adj, self.g.full, self.tmask)


@dataclass(frozen=True)
class Interval:
    """A maximal subpath with marked ends and unmarked interior."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class Leap:
    """Non-adjacent u, v with N(u) meeting p in {x, x', y} and N(v) in {x, y', y}."""

    u: int
    v: int

    def to_record(self) -> str:
        return f"leap:{self.u},{self.v}"


# RR conclusion variants ------------------------------------------------------


@dataclass(frozen=True)
class InternalComplete:
    vertex: int


@dataclass(frozen=True)
class LeapFound:
    leap: Leap


@dataclass(frozen=True)
class AntipathCase:
    """Length-3 path case: an antipath of length >= 3 from x' to y' through t."""

    antipath: tuple[int, ...]


@dataclass(frozen=True)
class Violation:
    """No disjunct holds; possible only when the graph has an odd hole."""


RRConclusion = InternalComplete | LeapFound | AntipathCase | Violation


# -- marked structure ----------------------------------------------------------


def intervals(inst: LemmaInstance) -> list[Interval]:
    """Split p at its marked vertices (those with a neighbour in t).

    The ends are t-complete, hence marked, so the pieces partition the edges
    of p; each piece has marked ends and unmarked interior.
    """
    adj = inst.g.adj
    tmask = inst.tmask
    marked = [i for i, v in enumerate(inst.p) if adj[v] & tmask]
    assert marked[0] == 0 and marked[-1] == len(inst.p) - 1
    out = []
    for i, j in zip(marked, marked[1:]):
        out.append(Interval(inst.p[i : j + 1]))
    assert sum(iv.length for iv in out) == inst.length
    return out


def t_complete_edges(inst: LemmaInstance) -> list[tuple[int, int]]:
    """Edges of p whose both endpoints are t-complete, in path order."""
    ct = inst.complete_mask()
    p = inst.p
    return [
        (p[i], p[i + 1])
        for i in range(len(p) - 1)
        if ct >> p[i] & 1 and ct >> p[i + 1] & 1
    ]


# -- leaps ----------------------------------------------------------------------


def _find_leap_rows(
    adj: tuple[int, ...], p: tuple[int, ...], tmask: int
) -> tuple[int, int] | None:
    """First (u, v) in ascending scan with the exact leap neighbourhoods."""
    pmask = 0
    for w in p:
        pmask |= 1 << w
    x, x1, y1, y = p[0], p[1], p[-2], p[-1]
    side_u = (1 << x) | (1 << x1) | (1 << y)
    side_v = (1 << x) | (1 << y1) | (1 << y)
    tverts = list(_bits(tmask))
    for u in tverts:
        if adj[u] & pmask != side_u:
            continue
        for v in tverts:
            if v == u or adj[u] >> v & 1:
                continue
            if adj[v] & pmask == side_v:
                return (u, v)
    return None


def validate_leap(g: Graph, p: tuple[int, ...], leap: Leap) -> bool:
    """Re-check the leap pattern bit-exactly against g and p."""
    if len(p) < 4:
        return False
    u, v = leap.u, leap.v
    if u == v or g.adj[u] >> v & 1:
        return False
    pmask = _mask_of(p, g.n)
    if pmask & ((1 << u) | (1 << v)):
        return False
    x, x1, y1, y = p[0], p[1], p[-2], p[-1]
    return (
        g.adj[u] & pmask == (1 << x) | (1 << x1) | (1 << y)
        and g.adj[v] & pmask == (1 << x) | (1 << y1) | (1 << y)
    )


def find_leap(inst: LemmaInstance) -> Leap | None:
    """Scan t for a leap relative to p. Deterministic ascending order."""
    if inst.length < 3:
        raise PreconditionError("leap pattern needs a path of length >= 3")
    hit = _find_leap_rows(inst.g.adj, inst.p, inst.tmask)
    if hit is None:
        return None
    leap = Leap(*hit)
    assert validate_leap(inst.g, inst.p, leap)
    return leap


# -- parity claim and sieve ------------------------------------------------------


def verify_parity_claim(inst: LemmaInstance, check_preconditions: bool = True) -> bool:
    """Stable-t claim: a leap exists or the t-complete edge count of p is odd.

    With check_preconditions the surrounding hypotheses (t stable, p odd of
    length >= 3, g odd-hole-free) are enforced via PreconditionError; sweeps
    that pre-filter their corpus pass False to skip the expensive re-checks.
    """
    if inst.length < 3 or inst.length % 2 == 0:
        raise PreconditionError(f"p must have odd length >= 3, got {inst.length}")
    if not inst.t_is_stable():
        raise PreconditionError("t must be stable for the parity claim")
    if check_preconditions and not is_odd_hole_free(inst.g):
        raise PreconditionError("graph has an odd hole")
    if _find_leap_rows(inst.g.adj, inst.p, inst.tmask) is not None:
        return True
    return len(t_complete_edges(inst)) % 2 == 1


def sieve_identity_check(inst: LemmaInstance) -> bool:
    """Inclusion-exclusion for the union of per-vertex complete-edge sets.

    f(v) is the set of edge indices of p with both endpoints adjacent to v.
    Checks |union f(v)| against the full alternating sum computed from
    scratch, and, whenever every proper nonempty sub-family intersection has
    odd size, the mod-2 collapse |union| = (2^k - 2) + (-1)^(k+1) |inter|.
    Both checks are exact integer arithmetic.
    """
    if not inst.t_is_stable():
        raise PreconditionError("t must be stable for the sieve identity")
    adj = inst.g.adj
    p = inst.p
    members = sorted(inst.t)
    k = len(members)
    f: dict[int, frozenset[int]] = {}
    for v in members:
        row = adj[v]
        f[v] = frozenset(
            i for i in range(len(p) - 1) if row >> p[i] & 1 and row >> p[i + 1] & 1
        )
    union = frozenset().union(*f.values()) if f else frozenset()
    rhs = 0
    for size in range(1, k + 1):
        for combo in combinations(members, size):
            inter = f[combo[0]]
            for v in combo[1:]:
                inter &= f[v]
            rhs += (-1) ** (size + 1) * len(inter)
    if len(union) != rhs:
        return False
    # mod-2 collapse, applicable when all proper sub-family intersections are odd
    applicable = True
    for size in range(1, k):
        for combo in combinations(members, size):
            inter = f[combo[0]]
            for v in combo[1:]:
                inter &= f[v]
            if len(inter) % 2 == 0:
                applicable = False
                break
        if not applicable:
            break
    if applicable:
        inter_all = f[members[0]]
        for v in members[1:]:
            inter_all &= f[v]
        lhs_mod2 = len(union) % 2
        rhs_mod2 = ((2**k - 2) + (-1) ** (k + 1) * len(inter_all)) % 2
        if lhs_mod2 != rhs_mod2:
            return False
    return True


# -- antipaths -------------------------------------------------------------------


def find_antipath_through(
    g: Graph, a: int, b: int, interior: frozenset[int] | set[int], min_len: int = 1
) -> tuple[int, ...] | None:
    """A chordless path of the complement from a to b, interior inside the set.

    Ends are not part of ``interior`` and may not belong to it. Returns the
    first antipath of length >= min_len in DFS order, or None.
    """
    n = g.n
    imask = _mask_of(interior, n)
    if a == b:
        raise GraphInputError("antipath endpoints must differ")
    if imask & ((1 << a) | (1 << b)):
        raise GraphInputError("antipath ends may not lie in the interior set")
    full = g.full
    co = tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.adj))
    forbidden = full & ~imask & ~(1 << a) & ~(1 << b)
    for seq in _chordless_paths_mask(co, a, b, forbidden):
        if len(seq) - 1 >= min_len:
            return seq
    return None


# -- the main conclusion check ----------------------------------------------------


def _rr_disjuncts(
    g: Graph, tmask: int, p: tuple[int, ...], ct_mask: int
) -> RRConclusion:
    """Disjuncts in lemma order; no instance validation (caller's job)."""
    for v in p[1:-1]:
        if ct_mask >> v & 1:
            return InternalComplete(v)
    hit = _find_leap_rows(g.adj, p, tmask)
    if hit is not None:
        return LeapFound(Leap(*hit))
    if len(p) == 4:  # length exactly 3
        seq = find_antipath_through(g, p[1], p[2], frozenset(_bits(tmask)), min_len=3)
        if seq is not None:
            return AntipathCase(seq)
    return Violation()


def check_rr_conclusion(inst: LemmaInstance) -> RRConclusion:
    """First holding disjunct, in lemma order, for an odd path of length >= 3.

    A Violation return is accompanied by a re-check that the graph really
    does contain an odd hole; if it does not, the trichotomy itself failed
    on a valid instance and InvariantViolationError is raised, because that
    is a counterexample worth keeping.
    """
    if inst.length < 3 or inst.length % 2 == 0:
        raise PreconditionError(f"p must have odd length >= 3, got {inst.length}")
    out = _rr_disjuncts(inst.g, inst.tmask, inst.p, inst.complete_mask())
    if isinstance(out, Violation) and is_odd_hole_free(inst.g):
        raise InvariantViolationError(
            f"trichotomy failed on an odd-hole-free graph: t={sorted(inst.t)} p={inst.p}"
        )
    if isinstance(out, AntipathCase):
        assert _antipath_case_valid(inst, out.antipath)
    return out


def _antipath_case_valid(inst: LemmaInstance, seq: tuple[int, ...]) -> bool:
    g = inst.g
    if len(seq) - 1 < 3 or seq[0] != inst.p[1] or seq[-1] != inst.p[2]:
        return False
    if not all(v in inst.t for v in seq[1:-1]):
        return False
    co = g.complement()
    return is_chordless_path(co, seq)


# -- companion lemmas ---------------------------------------------------------------


def check_meyniel_lemma(
    g: Graph, v: int, p: tuple[int, ...], check_preconditions: bool = True
) -> bool:
    """For Meyniel g: odd chordless p of length >= 3 in g-v with ends seeing v
    forces all of p to see v. Returns that conclusion's truth."""
    if not 0 <= v < g.n:
        raise GraphInputError(f"vertex {v} out of range")
    if not is_chordless_path(g, p):
        raise PreconditionError(f"p={p} is not a chordless path")
    if v in p:
        raise PreconditionError("p must avoid v")
    if len(p) - 1 < 3 or (len(p) - 1) % 2 == 0:
        raise PreconditionError(f"p must have odd length >= 3, got {len(p) - 1}")
    row = g.adj[v]
    if not (row >> p[0] & 1 and row >> p[-1] & 1):
        raise PreconditionError("both ends of p must be adjacent to v")
    if check_preconditions and not is_meyniel(g):
        raise PreconditionError("graph is not Meyniel")
    return all(row >> w & 1 for w in p)


def check_wc_lemma(inst: LemmaInstance, check_preconditions: bool = True) -> int | None:
    """For weakly chordal g: any chordless p of length >= 3 with t-complete
    ends has an internal t-complete vertex. Returns the first one, else None
    (None on a valid instance is a lemma violation, harvested by sweeps)."""
    if inst.length < 3:
        raise PreconditionError(f"p must have length >= 3, got {inst.length}")
    if check_preconditions and not is_weakly_chordal(inst.g):
        raise PreconditionError("graph is not weakly chordal")
    ct = inst.complete_mask()
    for v in inst.p[1:-1]:
        if ct >> v & 1:
            return v
    return None


def _has_nonadjacent_pair(adj: tuple[int, ...], mask: int) -> bool:
    m = mask
    while m:
        b = m & -m
        m ^= b
        v = b.bit_length() - 1
        if mask & ~adj[v] & ~b:
            return True
    return False


def check_maximal_T_path_lemma(
    g: Graph,
    t: frozenset[int] | set[int],
    p: tuple[int, ...],
    check_preconditions: bool = True,
) -> bool:
    """For weakly chordal g and inclusion-maximal t: chordless paths of g-t
    between t-complete vertices stay inside the t-complete set.

    Maximality means no single vertex can be added to t keeping it
    anticonnected with two non-adjacent t-complete vertices; a violating
    extension vertex is reported by name, since feeding a non-maximal t to
    this lemma is a usage error, not a counterexample.
    """
    n = g.n
    adj = g.adj
    full = g.full
    tmask = _mask_of(t, n)
    if tmask == 0:
        raise GraphInputError("t must be nonempty")
    if not _is_anticonnected_mask(adj, full, tmask):
        raise PreconditionError(f"t={sorted(t)} is not anticonnected")
    ct = _complete_to_mask(adj, full, tmask)
    if not _has_nonadjacent_pair(adj, ct):
        raise PreconditionError("t-complete set has no two non-adjacent vertices")
    for w in _bits(full & ~tmask):
        ext = tmask | (1 << w)
        if _is_anticonnected_mask(adj, full, ext) and _has_nonadjacent_pair(
            adj, _complete_to_mask(adj, full, ext)
        ):
            raise PreconditionError(f"t is not maximal: vertex {w} extends it")
    if check_preconditions and not is_weakly_chordal(g):
        raise PreconditionError("graph is not weakly chordal")
    if not is_chordless_path(g, p):
        raise PreconditionError(f"p={p} is not a chordless path")
    pmask = _mask_of(p, n)
    if pmask & tmask:
        raise PreconditionError("p must avoid t")
    if not (ct >> p[0] & 1 and ct >> p[-1] & 1):
        raise PreconditionError("ends of p must be t-complete")
    return pmask & ~ct == 0
