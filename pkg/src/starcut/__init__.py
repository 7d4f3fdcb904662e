"""Certificate-producing structural graph theory on holes and star cutsets.

The package recognizes weakly chordal, Meyniel, odd-hole-free, and Berge
graphs with re-validating witnesses, checks a family of path-versus-
anticonnected-set lemmas on explicit instances, decomposes weakly chordal
graphs by star cutsets, extracts 2-pairs and even pairs constructively, and
cross-checks all of it against brute-force oracles on small graphs.
"""

from .decomposition import (
    DecompositionNode,
    Leaf,
    Split,
    StarCutset,
    decompose,
    find_star_cutset,
    grow_maximal_T,
    serialize_tree,
    star_cutset_exists_bruteforce,
    validate_decomposition,
    verify_star_cutset,
)
from .errors import (
    GraphInputError,
    InvariantViolationError,
    PreconditionError,
    SamplingGiveUp,
)
from .formats import (
    parse_edge_list,
    parse_graph6,
    parse_graphs,
    sniff_format,
    to_edge_list,
    to_graph6,
)
from .graphs import (
    Graph,
    complete_graph,
    complete_set,
    components,
    cycle_graph,
    empty_graph,
    enumerate_chordless_paths,
    find_chordless_path,
    is_anticonnected,
    is_chordless_antipath,
    is_chordless_path,
    is_connected,
    is_path,
    path_graph,
)
from .harness import (
    CorpusSpec,
    SweepReport,
    enumerate_labeled_graphs,
    random_graph,
    run_sweep,
    sample_in_class,
)
from .lemmas import (
    AntipathCase,
    InternalComplete,
    Interval,
    Leap,
    LeapFound,
    LemmaInstance,
    RRConclusion,
    Violation,
    check_maximal_T_path_lemma,
    check_meyniel_lemma,
    check_rr_conclusion,
    check_wc_lemma,
    find_antipath_through,
    find_leap,
    intervals,
    sieve_identity_check,
    t_complete_edges,
    validate_leap,
    verify_parity_claim,
)
from .pairs import (
    Coloring,
    EvenPair,
    TwoPair,
    color_weakly_chordal,
    contract_pair,
    find_even_pair_meyniel,
    find_two_pair,
    max_clique_bruteforce,
    verify_even_pair,
    verify_two_pair,
)
from .recognition import (
    Antihole,
    ClassCertificate,
    Hole,
    OddCycleWitness,
    cycle_chords,
    find_hole,
    find_long_antihole,
    is_antihole_sequence,
    is_berge,
    is_complement_of_perfect_matching,
    is_complete,
    is_disjoint_union_of_completes,
    is_hole_sequence,
    is_meyniel,
    is_odd_hole_free,
    is_weakly_chordal,
)

__version__ = "0.1.0"
