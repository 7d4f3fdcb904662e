"""Graph corpora and brute-force sweeps over the lemma checkers.

Corpora come in two modes. Exhaustive mode streams every labeled graph on n
vertices (n <= 7; 2^21 graphs is the ceiling), optionally filtered to a
graph class. Random mode rejection-samples Erdos-Renyi graphs until the
class filter accepts, with a give-up error when the acceptance rate drops
below 1e-4 over a 10^4-attempt window.

The generator is fixed so reported numbers can be pinned: a Mersenne
Twister (random.Random) seeded with the string "<seed>:<n>:<index>", one
random() draw per vertex pair, pairs visited in the same column order the
graph6 encoding uses, edge present when the draw is below p.

A sweep runs one lemma checker over every valid instance on every corpus
graph and tallies pass/fail/skip. Skips are graphs outside the lemma's
hypothesis class (and complete graphs for the extraction sweeps); vacuous
instances are never counted as passes. Failures carry the graph6 string and
the instance parameters, enough to reproduce by hand. Reports are plain
text, ending in the summary line "lemma=<id> pass=<k> fail=<k> skip=<k>",
and are byte-identical across runs with the same spec.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .decomposition import (
    decompose,
    find_star_cutset,
    star_cutset_exists_bruteforce,
    validate_decomposition,
)
from .errors import GraphInputError, InvariantViolationError, SamplingGiveUp
from .formats import _pair_order, to_graph6
from .graphs import (
    Graph,
    _bits,
    _chordless_paths_mask,
    _complete_to_mask,
    _is_anticonnected_mask,
)
from .lemmas import (
    LemmaInstance,
    check_maximal_T_path_lemma,
    check_meyniel_lemma,
    check_rr_conclusion,
    check_wc_lemma,
    _has_nonadjacent_pair,
    verify_parity_claim,
)
from .pairs import find_even_pair_meyniel, find_two_pair
from .recognition import is_complete, is_meyniel, is_odd_hole_free, is_weakly_chordal

LEMMA_IDS = ("rr", "meyniel", "rrwt", "pathwt", "thwt", "2pair", "evenpair")

CLASS_FILTERS: dict[str, Callable[[Graph], bool]] = {
    "any": lambda g: True,
    "wc": lambda g: bool(is_weakly_chordal(g)),
    "meyniel": lambda g: bool(is_meyniel(g)),
    "ohf": lambda g: bool(is_odd_hole_free(g)),
}

EXHAUSTIVE_CEILING = 7
GIVEUP_RATE = 1e-4
GIVEUP_WINDOW = 10_000


@dataclass(frozen=True)
class CorpusSpec:
    mode: str  # "exhaustive" | "random"
    ns: tuple[int, ...]
    p: float = 0.5
    count: int = 0
    seed: int = 0
    class_filter: str = "any"

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise GraphInputError(f"unknown corpus mode {self.mode!r}")
        if self.class_filter not in CLASS_FILTERS:
            raise GraphInputError(f"unknown class filter {self.class_filter!r}")
        if any(n < 0 for n in self.ns):
            raise GraphInputError("vertex counts must be non-negative")
        if self.mode == "exhaustive" and any(n > EXHAUSTIVE_CEILING for n in self.ns):
            raise GraphInputError(
                f"exhaustive mode supports n <= {EXHAUSTIVE_CEILING}"
            )
        if not 0.0 <= self.p <= 1.0:
            raise GraphInputError("edge probability must lie in [0, 1]")
        if self.mode == "random" and self.count < 0:
            raise GraphInputError("sample count must be non-negative")


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, ascending edge-mask
    order, edge-mask bit i governing the i-th pair in graph6 column order."""
    if not 0 <= n <= EXHAUSTIVE_CEILING:
        raise GraphInputError(f"exhaustive enumeration supports 0 <= n <= {EXHAUSTIVE_CEILING}")
    pairs = _pair_order(n)
    m = len(pairs)
    for mask in range(1 << m):
        rows = [0] * n
        mm = mask
        while mm:
            b = mm & -mm
            mm ^= b
            u, v = pairs[b.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        yield Graph._from_rows(n, tuple(rows))


def random_graph(n: int, p: float, seed) -> Graph:
    """Erdos-Renyi G(n, p), deterministic in (n, p, seed).

    One rng.random() per pair, pairs in graph6 column order, edge when the
    draw is < p; rng is random.Random(seed), any hashable seed value.
    """
    if not 0.0 <= p <= 1.0:
        raise GraphInputError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    rows = [0] * n
    for u, v in _pair_order(n):
        if rng.random() < p:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph._from_rows(n, tuple(rows))


def sample_in_class(spec: CorpusSpec, stats: dict | None = None) -> Iterator[Graph]:
    """Rejection-sample spec.count graphs per n that pass the class filter.

    Seeds are derived per attempt as "<seed>:<n>:<index>", so the stream
    does not depend on consumption order. Fills stats (when given) with
    {n: (attempts, accepted)}. Raises SamplingGiveUp when acceptance drops
    below GIVEUP_RATE over a GIVEUP_WINDOW of attempts.
    """
    if spec.mode != "random":
        raise GraphInputError("sample_in_class needs a random-mode spec")
    accept = CLASS_FILTERS[spec.class_filter]
    for n in spec.ns:
        attempts = 0
        accepted = 0
        index = 0
        while accepted < spec.count:
            g = random_graph(n, spec.p, f"{spec.seed}:{n}:{index}")
            index += 1
            attempts += 1
            if accept(g):
                accepted += 1
                if stats is not None:
                    stats[n] = (attempts, accepted)
                yield g
            elif attempts % GIVEUP_WINDOW == 0 and accepted / attempts < GIVEUP_RATE:
                raise SamplingGiveUp(
                    f"class {spec.class_filter!r} acceptance {accepted}/{attempts} "
                    f"at n={n}, p={spec.p}; try a different p"
                )
        if stats is not None:
            stats[n] = (attempts, accepted)


def corpus_stream(spec: CorpusSpec, stats: dict | None = None) -> Iterator[Graph]:
    if spec.mode == "exhaustive":
        accept = CLASS_FILTERS[spec.class_filter]
        for n in spec.ns:
            attempts = 0
            accepted = 0
            for g in enumerate_labeled_graphs(n):
                attempts += 1
                if accept(g):
                    accepted += 1
                    yield g
            if stats is not None:
                stats[n] = (attempts, accepted)
    else:
        yield from sample_in_class(spec, stats)


# -- instance enumeration ---------------------------------------------------------


def _anticonnected_masks(g: Graph, cap: int) -> list[int]:
    """Nonempty anticonnected vertex sets with at most cap members,
    ascending mask order."""
    out = []
    for mask in range(1, 1 << g.n):
        if mask.bit_count() <= cap and _is_anticonnected_mask(g.adj, g.full, mask):
            out.append(mask)
    return out


def _fmt_set(mask: int) -> str:
    return ",".join(str(v) for v in _bits(mask))


def _fmt_path(p: tuple[int, ...]) -> str:
    return "-".join(map(str, p))


@dataclass
class _Tally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    extras: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def bump(self, key: str, by: int = 1) -> None:
        self.extras[key] = self.extras.get(key, 0) + by


def _paths_between_complete(
    g: Graph, tmask: int, min_len: int, odd_only: bool
) -> Iterator[tuple[int, ...]]:
    """Chordless paths of g - t whose ends are t-complete, both endpoint
    orders collapsed to ascending (a < b)."""
    ct = _complete_to_mask(g.adj, g.full, tmask)
    ends = list(_bits(ct))
    for i, a in enumerate(ends):
        for b in ends[i + 1 :]:
            for p in _chordless_paths_mask(g.adj, a, b, tmask):
                length = len(p) - 1
                if length < min_len:
                    continue
                if odd_only and length % 2 == 0:
                    continue
                yield p


def _kernel_rr(g: Graph, cap: int, tally: _Tally) -> None:
    """Trichotomy sweep; stable-t instances also get the parity claim."""
    if not is_odd_hole_free(g):
        tally.skipped += 1
        return
    for tmask in _anticonnected_masks(g, cap):
        t = frozenset(_bits(tmask))
        for p in _paths_between_complete(g, tmask, min_len=3, odd_only=True):
            inst = LemmaInstance(g, t, p)
            tally.bump("instances")
            try:
                out = check_rr_conclusion(inst)
            except InvariantViolationError:
                tally.failed += 1
                tally.failures.append(f"claim=trichotomy t={_fmt_set(tmask)} p={_fmt_path(p)}")
            else:
                tally.passed += 1
                tally.bump(f"conclusion_{type(out).__name__.lower()}")
            # the stable-t parity claim rides along: passes land in the
            # parity_pass extra, failures in the ordinary fail count
            if inst.t_is_stable():
                tally.bump("stable_instances")
                if verify_parity_claim(inst, check_preconditions=False):
                    tally.bump("parity_pass")
                else:
                    tally.failed += 1
                    tally.failures.append(
                        f"claim=parity t={_fmt_set(tmask)} p={_fmt_path(p)}"
                    )


def _kernel_meyniel(g: Graph, cap: int, tally: _Tally) -> None:
    if not is_meyniel(g):
        tally.skipped += 1
        return
    for v in range(g.n):
        nbrs = list(_bits(g.adj[v]))
        vbit = 1 << v
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1 :]:
                for p in _chordless_paths_mask(g.adj, a, b, vbit):
                    length = len(p) - 1
                    if length < 3 or length % 2 == 0:
                        continue
                    tally.bump("instances")
                    if check_meyniel_lemma(g, v, p, check_preconditions=False):
                        tally.passed += 1
                    else:
                        tally.failed += 1
                        tally.failures.append(f"v={v} p={_fmt_path(p)}")


def _kernel_rrwt(g: Graph, cap: int, tally: _Tally) -> None:
    if not is_weakly_chordal(g):
        tally.skipped += 1
        return
    for tmask in _anticonnected_masks(g, cap):
        t = frozenset(_bits(tmask))
        for p in _paths_between_complete(g, tmask, min_len=3, odd_only=False):
            inst = LemmaInstance(g, t, p)
            tally.bump("instances")
            if check_wc_lemma(inst, check_preconditions=False) is not None:
                tally.passed += 1
            else:
                tally.failed += 1
                tally.failures.append(f"t={_fmt_set(tmask)} p={_fmt_path(p)}")


def _kernel_pathwt(g: Graph, cap: int, tally: _Tally) -> None:
    """Maximal t only; the size cap does not apply since maximality fixes |t|."""
    if not is_weakly_chordal(g):
        tally.skipped += 1
        return
    adj = g.adj
    full = g.full
    for tmask in _anticonnected_masks(g, g.n):
        ct = _complete_to_mask(adj, full, tmask)
        if not _has_nonadjacent_pair(adj, ct):
            continue
        maximal = True
        for w in _bits(full & ~tmask):
            ext = tmask | (1 << w)
            if _is_anticonnected_mask(adj, full, ext) and _has_nonadjacent_pair(
                adj, _complete_to_mask(adj, full, ext)
            ):
                maximal = False
                break
        if not maximal:
            continue
        t = frozenset(_bits(tmask))
        for p in _paths_between_complete(g, tmask, min_len=1, odd_only=False):
            tally.bump("instances")
            if check_maximal_T_path_lemma(g, t, p, check_preconditions=False):
                tally.passed += 1
            else:
                tally.failed += 1
                tally.failures.append(f"t={_fmt_set(tmask)} p={_fmt_path(p)}")


def _kernel_thwt(g: Graph, cap: int, tally: _Tally) -> None:
    """Full decomposition, revalidated; brute-force existence check n <= 8."""
    if not is_weakly_chordal(g):
        tally.skipped += 1
        return
    tally.bump("instances")
    ok = True
    try:
        tree = decompose(g, check_preconditions=False)
        if not validate_decomposition(g, tree):
            ok = False
            tally.failures.append("claim=tree")
    except InvariantViolationError as exc:
        ok = False
        tally.failures.append(f"claim=construction detail={exc}")
    if g.n <= 8:
        tally.bump("bruteforce_checked")
        fast = find_star_cutset(g, check_preconditions=False) is not None
        brute = star_cutset_exists_bruteforce(g) is not None
        if fast != brute:
            ok = False
            tally.failures.append(f"claim=existence fast={fast} brute={brute}")
    if ok:
        tally.passed += 1
    else:
        tally.failed += 1


def _kernel_2pair(g: Graph, cap: int, tally: _Tally) -> None:
    if not is_weakly_chordal(g):
        tally.skipped += 1
        return
    if is_complete(g):
        tally.skipped += 1
        tally.bump("complete_skipped")
        return
    tally.bump("instances")
    try:
        pair = find_two_pair(g, check_preconditions=False)
    except InvariantViolationError as exc:
        tally.failed += 1
        tally.failures.append(f"claim=two-pair detail={exc}")
        return
    if pair is None:
        tally.failed += 1
        tally.failures.append("claim=two-pair detail=absent on non-complete graph")
    else:
        tally.passed += 1


def _kernel_evenpair(g: Graph, cap: int, tally: _Tally) -> None:
    if not is_meyniel(g):
        tally.skipped += 1
        return
    if is_complete(g):
        tally.skipped += 1
        tally.bump("complete_skipped")
        return
    tally.bump("instances")
    try:
        pair = find_even_pair_meyniel(g, check_preconditions=False)
    except InvariantViolationError as exc:
        tally.failed += 1
        tally.failures.append(f"claim=even-pair detail={exc}")
        return
    if pair is None:
        tally.failed += 1
        tally.failures.append("claim=even-pair detail=absent on non-complete graph")
    else:
        tally.passed += 1


_KERNELS = {
    "rr": _kernel_rr,
    "meyniel": _kernel_meyniel,
    "rrwt": _kernel_rrwt,
    "pathwt": _kernel_pathwt,
    "thwt": _kernel_thwt,
    "2pair": _kernel_2pair,
    "evenpair": _kernel_evenpair,
}

T_SIZE_CAP = 5  # anticonnected-set size cap once n >= 7


@dataclass(frozen=True)
class SweepReport:
    lemma: str
    spec: CorpusSpec
    graphs: int
    passed: int
    failed: int
    skipped: int
    extras: tuple[tuple[str, object], ...]
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_text(self) -> str:
        s = self.spec
        lines = [
            f"sweep lemma={self.lemma} mode={s.mode} ns={','.join(map(str, s.ns))}"
            f" p={s.p} count={s.count} seed={s.seed} filter={s.class_filter}",
            f"graphs={self.graphs}",
        ]
        lines.extend(f"{k}={v}" for k, v in self.extras)
        lines.append(
            f"lemma={self.lemma} pass={self.passed} fail={self.failed} skip={self.skipped}"
        )
        lines.extend(f"FAIL {line}" for line in self.failures)
        return "\n".join(lines) + "\n"


def run_sweep(lemma: str, spec: CorpusSpec) -> SweepReport:
    """Run one lemma's checker over every instance on every corpus graph.

    Deterministic given (lemma, spec); identical inputs produce
    byte-identical to_text() output.
    """
    kernel = _KERNELS.get(lemma)
    if kernel is None:
        raise GraphInputError(f"unknown lemma id {lemma!r}, expected one of {LEMMA_IDS}")
    stats: dict = {}
    tally = _Tally()
    graphs = 0
    failures: list[str] = []
    for g in corpus_stream(spec, stats):
        graphs += 1
        cap = g.n if g.n < EXHAUSTIVE_CEILING else T_SIZE_CAP
        before = len(tally.failures)
        kernel(g, cap, tally)
        if len(tally.failures) > before:
            code = to_graph6(g)
            for line in tally.failures[before:]:
                failures.append(f"{code} {line}")
            del tally.failures[before:]
    for n in sorted(stats):
        attempts, accepted = stats[n]
        tally.extras[f"corpus_n{n}"] = f"{accepted}/{attempts}"
    return SweepReport(
        lemma=lemma,
        spec=spec,
        graphs=graphs,
        passed=tally.passed,
        failed=tally.failed,
        skipped=tally.skipped,
        extras=tuple(sorted(tally.extras.items())),
        failures=tuple(failures),
    )
