import random

import pytest

import naive
from tourney import (
    BadSize,
    ConflictingPair,
    MissingPair,
    SelfArc,
    Tournament,
    UndirectedGraph,
    VertexOutOfRange,
    canonical_code,
    dual,
    from_rows,
    graph_from_edges,
    is_canonically_labeled,
    is_isomorphic,
    make_tournament,
    random_tournament,
    relabel,
    subtournament,
    tournament_from_code,
)


def test_make_tournament_basic(c3):
    assert c3.n == 3
    assert c3.arc(0, 1) and c3.arc(1, 2) and c3.arc(2, 0)
    assert not c3.arc(1, 0)
    assert c3.out_neighbors(0) == {1}
    assert c3.in_neighbors(0) == {2}
    assert sorted(c3.arcs()) == [(0, 1), (1, 2), (2, 0)]
    assert c3.vertices() == {0, 1, 2}


def test_make_tournament_single_vertex():
    t = make_tournament(1, ())
    assert t.n == 1 and t.rows == (0,)


def test_make_tournament_rejects_bad_input():
    with pytest.raises(MissingPair):
        make_tournament(3, ((0, 1), (1, 2)))
    with pytest.raises(ConflictingPair):
        make_tournament(3, ((0, 1), (1, 0), (1, 2), (2, 0)))
    with pytest.raises(SelfArc):
        make_tournament(2, ((0, 0), (0, 1)))
    with pytest.raises(VertexOutOfRange):
        make_tournament(2, ((0, 5),))
    with pytest.raises(BadSize):
        make_tournament(0, ())
    with pytest.raises(BadSize):
        make_tournament(65, ())


def test_make_tournament_tolerates_repeats():
    t = make_tournament(2, ((0, 1), (0, 1)))
    assert t.arc(0, 1)


def test_from_rows_validation():
    assert from_rows([0b010, 0b100, 0b001]).n == 3
    with pytest.raises(MissingPair):
        from_rows([0, 0])
    with pytest.raises(ConflictingPair):
        from_rows([0b10, 0b01])
    with pytest.raises(SelfArc):
        from_rows([0b011, 0b000])
    with pytest.raises(VertexOutOfRange):
        from_rows([0b100, 0b001])
    with pytest.raises(BadSize):
        from_rows([])


def test_arc_rejects_loops_and_strays(c3):
    with pytest.raises(SelfArc):
        c3.arc(1, 1)
    with pytest.raises(VertexOutOfRange):
        c3.arc(0, 3)


def test_equality_and_hash(c3):
    same = make_tournament(3, ((0, 1), (1, 2), (2, 0)))
    assert c3 == same and hash(c3) == hash(same)
    assert c3 != dual(c3)


def test_dual_reverses_every_arc(t7):
    d = dual(t7)
    for i in range(7):
        for j in range(7):
            if i != j:
                assert d.arc(i, j) == t7.arc(j, i)


def test_dual_is_an_involution(rng):
    for n in range(1, 11):
        t = random_tournament(n, rng)
        assert dual(dual(t)) == t


def test_subtournament_label_map(rng):
    t = random_tournament(8, rng)
    sub, lm = subtournament(t, {6, 2, 5})
    assert lm == (2, 5, 6)
    for a in range(3):
        for b in range(3):
            if a != b:
                assert sub.arc(a, b) == t.arc(lm[a], lm[b])
    with pytest.raises(BadSize):
        subtournament(t, ())


def test_relabel_semantics(rng):
    t = random_tournament(6, rng)
    perm = [3, 0, 5, 1, 4, 2]
    r = relabel(t, perm)
    for a in range(6):
        for b in range(6):
            if a != b:
                assert r.arc(a, b) == t.arc(perm[a], perm[b])
    with pytest.raises(VertexOutOfRange):
        relabel(t, [0, 1, 2, 3, 4, 4])


def test_canonical_code_is_relabeling_invariant(rng):
    for n in range(1, 8):
        t = random_tournament(n, rng)
        code = canonical_code(t)
        for _ in range(12):
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_code(relabel(t, perm)) == code


def test_canonical_code_separates_classes(c3):
    chain = make_tournament(3, ((0, 1), (0, 2), (1, 2)))
    assert canonical_code(c3) != canonical_code(chain)


def test_canonical_code_frozen_values(c3, b6):
    assert canonical_code(c3).hex().upper() == "0340"
    assert canonical_code(b6).hex().upper() == "060A68"


def test_is_isomorphic_matches_brute_force(rng):
    pool = [random_tournament(5, rng) for _ in range(14)]
    for a in pool:
        for b in pool:
            assert is_isomorphic(a, b) == naive.iso(a, b)


def test_tournament_from_code_round_trip(rng):
    for n in (1, 2, 5, 9, 13):
        t = random_tournament(n, rng)
        back = tournament_from_code(canonical_code(t))
        assert is_canonically_labeled(back)
        assert canonical_code(back) == canonical_code(t)
        # permutation search only stays feasible on small orders
        if n <= 6:
            assert naive.iso(back, t)
        else:
            mine = sorted(bin(r).count("1") for r in t.rows)
            theirs = sorted(bin(r).count("1") for r in back.rows)
            assert mine == theirs


def test_tournament_from_code_rejects_garbage():
    with pytest.raises(BadSize):
        tournament_from_code(b"")
    with pytest.raises(BadSize):
        tournament_from_code(bytes([0]))
    with pytest.raises(BadSize):
        tournament_from_code(bytes([5, 1]))


def test_canonical_labeling_flag(rng):
    t = random_tournament(7, rng)
    back = tournament_from_code(canonical_code(t))
    assert is_canonically_labeled(back)


def test_random_tournament_is_seed_deterministic():
    a = random_tournament(9, random.Random(7))
    b = random_tournament(9, random.Random(7))
    assert a == b
    with pytest.raises(BadSize):
        random_tournament(0, random.Random(7))


def test_undirected_graph_basics():
    g = graph_from_edges(range(4), [(0, 1), (2, 1)])
    assert g.neighbors(1) == {0, 2}
    assert g.degree(3) == 0
    assert isinstance(g, UndirectedGraph)


def test_undirected_graph_rejects_bad_edges():
    with pytest.raises(VertexOutOfRange):
        graph_from_edges(range(3), [(1, 1)])
    with pytest.raises(VertexOutOfRange):
        graph_from_edges(range(3), [(0, 7)])


def test_tournament_repr_mentions_order(c3):
    assert "3" in repr(c3)
