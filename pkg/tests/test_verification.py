import dataclasses

import pytest

import naive
import tourney.verification as V
from tourney import (
    BadParameters,
    BudgetExceeded,
    CensusEntry,
    VerdictReport,
    census_entries,
    census_records,
    enumerate_tournaments,
    is_canonically_labeled,
    is_family_T_member,
    is_indecomposable,
    support,
    verify_hik,
    verify_latka,
    verify_lemma_suite,
    verify_main,
    w5_vertex_set,
)

KNOWN_CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56, 7: 456, 8: 6880}
KNOWN_INDEC_COUNTS = {5: 3, 6: 15, 7: 197, 8: 4008}


def test_class_counts_match_exhaustive_search():
    # small enough to recount from scratch by brute force
    for n in range(1, 6):
        assert len(census_entries(n)) == naive.count_classes(n)


def test_class_counts_match_published_values():
    for n, want in KNOWN_CLASS_COUNTS.items():
        assert len(census_entries(n)) == want


def test_census_is_sorted_and_deduplicated():
    codes = [e.canonical for e in census_entries(6)]
    assert codes == sorted(codes)
    assert len(codes) == len(set(codes))


def test_entry_flags_agree_with_the_library():
    for t, e in census_records(6):
        assert t.n == 6
        assert is_canonically_labeled(t)
        assert e.indecomposable == is_indecomposable(t)
        rep = w5_vertex_set(t)
        assert e.w5_size == len(rep.w5_vertices)
        assert e.omits_w5 == (not rep.w5_vertices)
        assert e.family_T_member == is_family_T_member(t)
        if e.indecomposable:
            assert e.support_size == len(support(t))
        else:
            assert e.support_size == -1


def test_indecomposable_counts():
    for n, want in KNOWN_INDEC_COUNTS.items():
        if n > 7:
            continue  # larger orders covered by the acceptance run
        got = sum(1 for e in census_entries(n) if e.indecomposable)
        assert got == want


def test_enumerate_filters_are_consistent():
    all5 = {e.canonical for e in census_entries(5)}
    indec = {c for c in all5} & {
        e.canonical for e in census_entries(5) if e.indecomposable
    }
    from tourney import canonical_code

    got_all = {canonical_code(t) for t in enumerate_tournaments(5)}
    got_indec = {canonical_code(t) for t in enumerate_tournaments(5, "indec")}
    got_fam = {canonical_code(t) for t in enumerate_tournaments(5, "family-t")}
    got_callable = {
        canonical_code(t)
        for t in enumerate_tournaments(5, lambda t: is_indecomposable(t))
    }
    assert got_all == all5
    assert got_indec == indec == got_callable
    assert got_fam <= got_indec


def test_enumerate_validates_eagerly():
    with pytest.raises(BadParameters):
        enumerate_tournaments(5, "no-such-filter")
    with pytest.raises(BadParameters):
        enumerate_tournaments(0)
    with pytest.raises(BudgetExceeded):
        enumerate_tournaments(V.MAX_CENSUS_N + 1)
    with pytest.raises(BudgetExceeded):
        enumerate_tournaments(V.FORCED_MAX_N + 1, force=True)


def test_census_rejects_out_of_budget_orders():
    with pytest.raises(BudgetExceeded):
        census_entries(V.MAX_CENSUS_N + 1)
    with pytest.raises(BadParameters):
        census_entries(-3)


def test_parallel_build_matches_serial():
    serial = [e.canonical for e in census_entries(6)]
    saved = dict(V._LEVELS)
    try:
        V._LEVELS.clear()
        parallel = [e.canonical for e in census_entries(6, jobs=2)]
    finally:
        V._LEVELS.clear()
        V._LEVELS.update(saved)
    assert parallel == serial


def test_latka_verdict():
    rep = verify_latka(5)
    assert rep.ok and rep.theorem == "latka" and rep.scope == "n=5"
    assert rep.counterexamples == ()
    assert rep.counts["window_free"] == 2
    rep6 = verify_latka(6)
    assert rep6.ok and rep6.counts["window_free"] == 1


def test_latka_rejects_bad_orders():
    with pytest.raises(BadParameters):
        verify_latka(4)
    with pytest.raises(BudgetExceeded):
        verify_latka(V.MAX_CENSUS_N + 1)


def test_hik_verdict():
    rep = verify_hik(6)
    assert rep.ok and rep.counterexamples == ()
    assert set(rep.counts) == {"checked_n5", "checked_n6"}
    with pytest.raises(BadParameters):
        verify_hik(4)


def test_main_verdict_small_order():
    rep = verify_main(7)
    assert rep.ok
    assert rep.counts["family_classes"] == 6
    assert rep.counts["generated_specs"] == 6
    assert rep.counts["generated_classes"] == 6
    with pytest.raises(BadParameters):
        verify_main(8)


def test_lemma_suite_small_budget():
    rep = verify_lemma_suite(6)
    assert rep.ok and rep.counterexamples == ()
    # the order-7 sweeps only open past budget 6
    assert "order7_hosts" not in rep.counts
    for key in (
        "connected_cycle_cores",
        "edge_deletions",
        "minimal_pair_classes",
        "dual_closure_members",
        "invariant_members",
    ):
        assert key in rep.counts
    assert rep.counts["minimal_pair_classes"] == 2
    with pytest.raises(BadParameters):
        verify_lemma_suite(4)


def test_reports_are_frozen():
    entry = census_entries(3)[0]
    assert isinstance(entry, CensusEntry)
    with pytest.raises(dataclasses.FrozenInstanceError):
        entry.n = 99
    rep = verify_latka(5)
    assert isinstance(rep, VerdictReport)
    with pytest.raises(dataclasses.FrozenInstanceError):
        rep.ok = False
