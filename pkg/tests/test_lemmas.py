import pytest

import oracles
from starcut import (
    Graph,
    GraphInputError,
    InvariantViolationError,
    PreconditionError,
    complete_graph,
    cycle_graph,
    is_odd_hole_free,
    is_weakly_chordal,
    path_graph,
)
from starcut.lemmas import (
    AntipathCase,
    Interval,
    InternalComplete,
    Leap,
    LeapFound,
    LemmaInstance,
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
from starcut.decomposition import grow_maximal_T
from starcut.recognition import ClassCertificate

# path 0-1-2-3 with u=4 seeing {0,1,3} and v=5 seeing {0,2,3}
LEAP_GADGET = Graph(6, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 3), (5, 0), (5, 2), (5, 3)])

# apex vertex 4 over the path 0-1-2-3
APEX = Graph(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])

# odd-hole-free graph whose only holding disjunct is the antipath case
ANTIPATH_GADGET = Graph(
    7,
    [
        (0, 1), (1, 2), (2, 3),
        (0, 4), (0, 5), (0, 6),
        (3, 4), (3, 5), (3, 6),
        (4, 6), (1, 5), (1, 6), (2, 4), (2, 5),
    ],
)


def test_instance_validation():
    g = APEX
    with pytest.raises(GraphInputError, match="nonempty"):
        LemmaInstance(g, frozenset(), (0, 1, 2, 3))
    with pytest.raises(GraphInputError, match="anticonnected"):
        LemmaInstance(cycle_graph(4), frozenset({0, 1}), (2, 3))
    with pytest.raises(GraphInputError, match="chordless"):
        LemmaInstance(g, frozenset({4}), (0, 1, 3))
    with pytest.raises(GraphInputError, match="avoid"):
        LemmaInstance(g, frozenset({1}), (0, 1, 2))
    with pytest.raises(GraphInputError, match="not t-complete"):
        LemmaInstance(LEAP_GADGET, frozenset({4, 5}), (0, 1, 2))


def test_instance_accessors():
    inst = LemmaInstance(APEX, frozenset({4}), (0, 1, 2, 3))
    assert inst.length == 3
    assert inst.t_is_stable()
    assert inst.complete_mask() == 0b1111
    inst2 = LemmaInstance(LEAP_GADGET, frozenset({4, 5}), (0, 1, 2, 3))
    assert inst2.t_is_stable()


def test_intervals_and_complete_edges():
    inst = LemmaInstance(APEX, frozenset({4}), (0, 1, 2, 3))
    assert intervals(inst) == [
        Interval(vertices=(0, 1)),
        Interval(vertices=(1, 2)),
        Interval(vertices=(2, 3)),
    ]
    assert t_complete_edges(inst) == [(0, 1), (1, 2), (2, 3)]

    c7 = cycle_graph(7)
    inst7 = LemmaInstance(c7, frozenset({6}), (5, 4, 3, 2, 1, 0))
    assert intervals(inst7) == [Interval(vertices=(5, 4, 3, 2, 1, 0))]
    assert t_complete_edges(inst7) == []


def test_leap_gadget():
    assert is_odd_hole_free(LEAP_GADGET)
    inst = LemmaInstance(LEAP_GADGET, frozenset({4, 5}), (0, 1, 2, 3))
    leap = find_leap(inst)
    assert leap == Leap(u=4, v=5)
    assert validate_leap(LEAP_GADGET, (0, 1, 2, 3), leap)
    assert not validate_leap(LEAP_GADGET, (0, 1, 2, 3), Leap(u=5, v=4))
    assert check_rr_conclusion(inst) == LeapFound(leap=Leap(u=4, v=5))
    assert verify_parity_claim(inst) is True
    assert leap.to_record() == "leap:4,5"


def test_internal_complete_case():
    assert is_odd_hole_free(APEX)
    inst = LemmaInstance(APEX, frozenset({4}), (0, 1, 2, 3))
    assert find_leap(inst) is None
    assert check_rr_conclusion(inst) == InternalComplete(vertex=1)
    # three t-complete edges, odd, so the parity claim holds without a leap
    assert verify_parity_claim(inst) is True


def test_antipath_case():
    g = ANTIPATH_GADGET
    assert is_odd_hole_free(g)
    assert not is_weakly_chordal(g)
    inst = LemmaInstance(g, frozenset({4, 5, 6}), (0, 1, 2, 3))
    out = check_rr_conclusion(inst)
    assert out == AntipathCase(antipath=(1, 4, 5, 6, 2))
    assert find_antipath_through(g, 1, 2, {4, 5, 6}, 3) == (1, 4, 5, 6, 2)


def test_antipath_finder_none_when_absent():
    assert find_antipath_through(cycle_graph(5), 0, 2, {3, 4}, 3) is None


def test_violation_is_legal_on_odd_hole_graphs():
    c7 = cycle_graph(7)
    inst = LemmaInstance(c7, frozenset({6}), (5, 4, 3, 2, 1, 0))
    assert check_rr_conclusion(inst) == Violation()
    assert verify_parity_claim(inst, check_preconditions=False) is False
    with pytest.raises(PreconditionError, match="odd hole"):
        verify_parity_claim(inst)


def test_violation_on_clean_graph_is_an_invariant_error(monkeypatch):
    c7 = cycle_graph(7)
    inst = LemmaInstance(c7, frozenset({6}), (5, 4, 3, 2, 1, 0))
    monkeypatch.setattr(
        "starcut.lemmas.is_odd_hole_free", lambda g: ClassCertificate(True, None)
    )
    with pytest.raises(InvariantViolationError, match="trichotomy"):
        check_rr_conclusion(inst)


def test_even_or_short_paths_are_rejected():
    g = Graph(4, [(0, 1), (1, 2), (3, 0), (3, 1), (3, 2)])
    inst = LemmaInstance(g, frozenset({3}), (0, 1, 2))
    with pytest.raises(PreconditionError, match="odd length"):
        check_rr_conclusion(inst)
    with pytest.raises(PreconditionError, match="odd length"):
        verify_parity_claim(inst)


def test_parity_claim_requires_stable_t():
    g = Graph(
        7,
        [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (0, 6), (3, 4), (3, 5), (3, 6), (4, 5)],
    )
    inst = LemmaInstance(g, frozenset({4, 5, 6}), (0, 1, 2, 3))
    assert not inst.t_is_stable()
    with pytest.raises(PreconditionError, match="stable"):
        verify_parity_claim(inst, check_preconditions=False)
    with pytest.raises(PreconditionError, match="stable"):
        sieve_identity_check(inst)


def test_sieve_identity_on_fixed_instances():
    assert sieve_identity_check(LemmaInstance(APEX, frozenset({4}), (0, 1, 2, 3)))
    assert sieve_identity_check(
        LemmaInstance(LEAP_GADGET, frozenset({4, 5}), (0, 1, 2, 3))
    )
    c7 = cycle_graph(7)
    assert sieve_identity_check(LemmaInstance(c7, frozenset({6}), (5, 4, 3, 2, 1, 0)))


def test_sieve_identity_holds_on_enumerated_instances():
    # inclusion-exclusion is unconditional, so every stable instance passes
    from itertools import combinations

    checked = 0
    for g in oracles.labeled_graphs(5):
        for r in (1, 2, 3):
            for t in map(frozenset, combinations(range(5), r)):
                if any(g.adjacent(a, b) for a in t for b in t if a < b):
                    continue
                rest = [v for v in range(5) if v not in t]
                for a in rest:
                    for b in rest:
                        if a >= b:
                            continue
                        for p in oracles.chordless_paths(g, a, b, forbidden=t):
                            if all(g.adjacent(e, v) for e in (a, b) for v in t):
                                inst = LemmaInstance(g, t, p)
                                assert sieve_identity_check(inst)
                                checked += 1
    assert checked > 1000


def test_meyniel_absorption():
    fan = Graph(5, [(1, 2), (2, 3), (3, 4), (0, 1), (0, 2), (0, 3), (0, 4)])
    assert check_meyniel_lemma(fan, 0, (1, 2, 3, 4)) is True
    c5 = cycle_graph(5)
    with pytest.raises(PreconditionError, match="not Meyniel"):
        check_meyniel_lemma(c5, 0, (1, 2, 3, 4))
    assert check_meyniel_lemma(c5, 0, (1, 2, 3, 4), check_preconditions=False) is False


def test_wc_absorption():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 3), (4, 1)])
    assert is_weakly_chordal(g)
    inst = LemmaInstance(g, frozenset({4}), (0, 1, 2, 3))
    assert check_wc_lemma(inst) == 1

    c6 = cycle_graph(6)
    inst6 = LemmaInstance(c6, frozenset({0}), (1, 2, 3, 4, 5))
    with pytest.raises(PreconditionError, match="not weakly chordal"):
        check_wc_lemma(inst6)
    # dropping the hypothesis exposes the conclusion failing on the hexagon
    assert check_wc_lemma(inst6, check_preconditions=False) is None

    g3 = Graph(4, [(0, 1), (1, 2), (3, 0), (3, 1), (3, 2)])
    with pytest.raises(PreconditionError, match="length >= 3"):
        check_wc_lemma(LemmaInstance(g3, frozenset({3}), (0, 1, 2)))


def test_wc_absorption_any_parity():
    # even path of length 4, apex over all of it
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (5, 4), (5, 2)])
    assert is_weakly_chordal(g)
    inst = LemmaInstance(g, frozenset({5}), (0, 1, 2, 3, 4))
    assert check_wc_lemma(inst) == 2


def test_maximal_t_path_lemma():
    with pytest.raises(PreconditionError, match="vertex 2 extends"):
        check_maximal_T_path_lemma(cycle_graph(4), frozenset({0}), (1, 2, 3))
    book = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 4)])
    assert check_maximal_T_path_lemma(book, frozenset({2, 3}), (0, 1)) is True
    assert check_maximal_T_path_lemma(APEX, frozenset({4}), (0, 1, 2, 3)) is True


def test_grow_maximal_t():
    c4 = cycle_graph(4)
    assert grow_maximal_T(c4, {0}) == frozenset({0, 2})
    with pytest.raises(GraphInputError, match="nonempty"):
        grow_maximal_T(c4, set())
    with pytest.raises(GraphInputError, match="anticonnected"):
        grow_maximal_T(c4, {0, 1})
    with pytest.raises(GraphInputError):
        grow_maximal_T(c4, {0, 9})


def test_rr_conclusion_is_exhaustive_on_small_clean_graphs():
    # every valid odd instance on an odd-hole-free graph yields a certificate
    from itertools import combinations

    seen = {InternalComplete: 0, LeapFound: 0, AntipathCase: 0}
    for g in oracles.labeled_graphs(5):
        if not oracles.odd_hole_free(g):
            continue
        for r in (1, 2):
            for t in map(frozenset, combinations(range(5), r)):
                if not oracles.anticonnected_on(g, t):
                    continue
                rest = [v for v in range(5) if v not in t]
                for a in rest:
                    for b in rest:
                        if a >= b:
                            continue
                        if not all(g.adjacent(e, v) for e in (a, b) for v in t):
                            continue
                        for p in oracles.chordless_paths(g, a, b, forbidden=t):
                            if len(p) % 2 != 0:
                                continue  # need odd edge count
                            if len(p) < 4:
                                continue
                            out = check_rr_conclusion(LemmaInstance(g, t, p))
                            assert not isinstance(out, Violation)
                            seen[type(out)] += 1
    assert seen[InternalComplete] > 0
