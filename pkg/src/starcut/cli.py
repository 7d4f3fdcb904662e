"""Command line front end over recognition, decomposition, pair extraction,
coloring, and lemma sweeps.

Exit status contract: 0 success, 1 a check or verification failed (graph
outside the required class, failing sweep, witness that does not
re-validate), 2 usage or input parse errors. Every certificate is
re-validated against the input graph before it is printed.

Inputs are files of graphs: graph6 one per line, or a single edge-list
graph ("n m" header then one "u v" line per edge). The format is sniffed
unless --format forces it. If --input names no existing file, it is
treated as an inline graph6 string.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .decomposition import decompose, serialize_tree, validate_decomposition
from .errors import GraphInputError, InvariantViolationError, SamplingGiveUp
from .formats import parse_graphs, sniff_format, to_graph6
from .graphs import Graph
from .harness import _KERNELS, _Tally, T_SIZE_CAP, CorpusSpec, LEMMA_IDS, run_sweep
from .pairs import (
    color_weakly_chordal,
    find_even_pair_meyniel,
    find_two_pair,
    verify_even_pair,
    verify_two_pair,
)
from .recognition import (
    Antihole,
    ClassCertificate,
    Hole,
    OddCycleWitness,
    cycle_chords,
    is_antihole_sequence,
    is_berge,
    is_complement_of_perfect_matching,
    is_complete,
    is_hole_sequence,
    is_meyniel,
    is_odd_hole_free,
    is_weakly_chordal,
)

# size guards for the predicates whose searches get expensive; the CLI
# reports "skipped" instead of hanging on large inputs
GUARD_OHF = 16
GUARD_BERGE = 14
GUARD_MEYNIEL = 12


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="starcut",
        description="certified star cutsets, 2-pairs, even pairs, and lemma sweeps "
        "on weakly chordal and Meyniel graphs",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    def add_io(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--input",
            required=True,
            help="graph file (graph6 lines or one edge list), or inline graph6",
        )
        p.add_argument("--format", choices=("edgelist", "graph6"), default=None)
        p.add_argument("--out", default=None, help="write output here instead of stdout")

    for verb in ("recognize", "decompose", "two-pair", "even-pair", "color"):
        add_io(sub.add_parser(verb))

    p = sub.add_parser("verify-lemma")
    add_io(p)
    p.add_argument("--lemma", required=True, choices=LEMMA_IDS)

    p = sub.add_parser("sweep")
    p.add_argument("--lemma", required=True, choices=LEMMA_IDS)
    p.add_argument("--exhaustive", type=int, default=None, metavar="N",
                   help="all labeled graphs on 0..N vertices")
    p.add_argument("--random", nargs=4, default=None, metavar=("N", "P", "COUNT", "SEED"))
    p.add_argument("--class", dest="class_filter", default="any",
                   choices=("any", "wc", "meyniel", "ohf"))
    p.add_argument("--out", default=None)
    return ap


def _load_graphs(args: argparse.Namespace) -> list[Graph]:
    path = Path(args.input)
    if path.is_file():
        try:
            text = path.read_text()
        except OSError as exc:
            raise GraphInputError(f"cannot read {args.input}: {exc}")
    elif args.format == "edgelist":
        raise GraphInputError(f"no such file: {args.input}")
    else:
        text = args.input  # inline graph6
    fmt = args.format or sniff_format(text)
    graphs = parse_graphs(text, fmt)
    if not graphs:
        raise GraphInputError("input holds no graphs")
    return graphs


# -- witness re-validation -----------------------------------------------------


def _check_witness(g: Graph, name: str, cert: ClassCertificate) -> None:
    w = cert.witness
    ok = False
    if name == "weakly-chordal":
        if isinstance(w, Hole):
            ok = w.length >= 5 and is_hole_sequence(g, w.vertices)
        elif isinstance(w, Antihole):
            ok = w.length >= 5 and is_antihole_sequence(g, w.vertices)
    elif name == "odd-hole-free":
        ok = (
            isinstance(w, Hole)
            and w.length % 2 == 1
            and w.length >= 5
            and is_hole_sequence(g, w.vertices)
        )
    elif name == "berge":
        if isinstance(w, Hole):
            ok = w.length % 2 == 1 and is_hole_sequence(g, w.vertices)
        elif isinstance(w, Antihole):
            ok = w.length % 2 == 1 and is_antihole_sequence(g, w.vertices)
    elif name == "meyniel":
        if isinstance(w, OddCycleWitness):
            try:
                chords = cycle_chords(g, w.vertices)
            except GraphInputError:
                chords = None
            ok = (
                chords is not None
                and w.length >= 5
                and w.length % 2 == 1
                and tuple(chords) == w.chords
                and len(chords) <= 1
            )
    if not ok:
        raise InvariantViolationError(f"{name} witness failed re-validation")


def _cert_line(g: Graph, name: str, cert: ClassCertificate) -> str:
    if cert:
        return f"{name}=true"
    _check_witness(g, name, cert)
    return f"{name}=false witness={cert.witness.to_record()}"


def _bool_line(name: str, value: bool) -> str:
    return f"{name}={'true' if value else 'false'}"


# -- verb handlers ------------------------------------------------------------------


def _do_recognize(g: Graph) -> list[str]:
    lines = [_cert_line(g, "weakly-chordal", is_weakly_chordal(g))]
    if g.n <= GUARD_OHF:
        lines.append(_cert_line(g, "odd-hole-free", is_odd_hole_free(g)))
    else:
        lines.append(f"odd-hole-free=skipped(n>{GUARD_OHF})")
    if g.n <= GUARD_BERGE:
        lines.append(_cert_line(g, "berge", is_berge(g)))
    else:
        lines.append(f"berge=skipped(n>{GUARD_BERGE})")
    if g.n <= GUARD_MEYNIEL:
        lines.append(_cert_line(g, "meyniel", is_meyniel(g)))
    else:
        lines.append(f"meyniel=skipped(n>{GUARD_MEYNIEL})")
    lines.append(_bool_line("complete", is_complete(g)))
    lines.append(_bool_line("co-perfect-matching", is_complement_of_perfect_matching(g)))
    return lines


def _do_decompose(g: Graph) -> list[str]:
    tree = decompose(g)
    if not validate_decomposition(g, tree):
        raise InvariantViolationError("decomposition tree failed re-validation")
    return serialize_tree(tree).split("\n")


def _do_two_pair(g: Graph) -> list[str]:
    pair = find_two_pair(g)
    if pair is None:
        return ["two-pair=absent reason=complete"]
    if not verify_two_pair(g, pair.a, pair.b):
        raise InvariantViolationError("two-pair failed re-validation")
    return [pair.to_record()]


def _do_even_pair(g: Graph) -> list[str]:
    pair = find_even_pair_meyniel(g)
    if pair is None:
        return ["even-pair=absent reason=complete"]
    if not verify_even_pair(g, pair.a, pair.b):
        raise InvariantViolationError("even-pair failed re-validation")
    return [pair.to_record()]


def _do_color(g: Graph) -> list[str]:
    coloring = color_weakly_chordal(g)
    for u, v in g.edges():
        if coloring.colors[u] == coloring.colors[v]:
            raise InvariantViolationError("coloring failed re-validation")
    return [coloring.to_record()]


_GRAPH_VERBS = {
    "recognize": _do_recognize,
    "decompose": _do_decompose,
    "two-pair": _do_two_pair,
    "even-pair": _do_even_pair,
    "color": _do_color,
}


def _run_graph_verb(args: argparse.Namespace, graphs: list[Graph]) -> tuple[list[str], int]:
    handler = _GRAPH_VERBS[args.verb]
    lines: list[str] = []
    for i, g in enumerate(graphs):
        if len(graphs) > 1:
            if i:
                lines.append("")
            lines.append(f"graph {i}")
        lines.extend(handler(g))
    return lines, 0


def _run_verify_lemma(args: argparse.Namespace, graphs: list[Graph]) -> tuple[list[str], int]:
    kernel = _KERNELS[args.lemma]
    lines: list[str] = []
    worst = 0
    for i, g in enumerate(graphs):
        tally = _Tally()
        cap = g.n if g.n <= 6 else T_SIZE_CAP
        kernel(g, cap, tally)
        lines.append(
            f"graph {i} lemma={args.lemma} pass={tally.passed}"
            f" fail={tally.failed} skip={tally.skipped}"
        )
        lines.extend(f"FAIL {to_graph6(g)} {f}" for f in tally.failures)
        if tally.failed:
            worst = 1
    return lines, worst


def _run_sweep_verb(args: argparse.Namespace, parser: argparse.ArgumentParser) -> tuple[list[str], int]:
    if (args.exhaustive is None) == (args.random is None):
        parser.error("sweep needs exactly one of --exhaustive or --random")
    if args.exhaustive is not None:
        if args.exhaustive < 0:
            parser.error("--exhaustive N must be non-negative")
        spec = CorpusSpec(
            mode="exhaustive",
            ns=tuple(range(args.exhaustive + 1)),
            class_filter=args.class_filter,
        )
    else:
        try:
            n = int(args.random[0])
            p = float(args.random[1])
            count = int(args.random[2])
            seed = int(args.random[3])
        except ValueError as exc:
            parser.error(f"bad --random arguments: {exc}")
        spec = CorpusSpec(
            mode="random", ns=(n,), p=p, count=count, seed=seed,
            class_filter=args.class_filter,
        )
    report = run_sweep(args.lemma, spec)
    return report.to_text().rstrip("\n").split("\n"), 0 if report.ok else 1


def _write(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n" if lines else ""
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0

    try:
        if args.verb == "sweep":
            try:
                lines, status = _run_sweep_verb(args, parser)
            except SystemExit as exc:  # parser.error inside the handler
                return int(exc.code) if exc.code else 0
            except SamplingGiveUp as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
        else:
            try:
                graphs = _load_graphs(args)
            except GraphInputError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
            if args.verb == "verify-lemma":
                lines, status = _run_verify_lemma(args, graphs)
            else:
                lines, status = _run_graph_verb(args, graphs)
    except GraphInputError as exc:
        # the graphs parsed, but an operation's class check rejected one
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolationError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1

    _write(lines, args.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
