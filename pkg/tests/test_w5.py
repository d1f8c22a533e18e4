from itertools import combinations

import pytest

import naive
from tourney import (
    BadSize,
    FamilySpec,
    NotFamilyT,
    NotIndecomposable,
    SelfArc,
    VertexOutOfRange,
    assemble_family,
    c_invariant,
    embeds,
    enumerate_tournaments,
    gen_critical,
    is_family_T_member,
    is_indecomposable,
    is_minimal_for_pair,
    make_tournament,
    random_tournament,
    subtournament,
    w5_vertex_set,
)


def chain(n):
    return make_tournament(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def test_pattern_covers_itself(w5t):
    rep = w5_vertex_set(w5t)
    assert rep.w5_vertices == frozenset(range(5))
    assert all(rep.witness[v] == frozenset(range(5)) for v in range(5))


def test_small_hosts_have_empty_window(c3):
    assert w5_vertex_set(c3).w5_vertices == frozenset()
    assert w5_vertex_set(chain(4)).w5_vertices == frozenset()


def test_named_hosts_omit_the_pattern(t5, u5, t7, u7, p7, b6):
    for t in (t5, u5, t7, u7, p7, b6):
        assert w5_vertex_set(t).w5_vertices == frozenset()
    assert w5_vertex_set(gen_critical("T", 9)).w5_vertices == frozenset()
    assert w5_vertex_set(gen_critical("U", 9)).w5_vertices == frozenset()


def test_window_matches_brute_force(rng, w5t):
    for _ in range(12):
        t = random_tournament(rng.randrange(5, 8), rng)
        rep = w5_vertex_set(t)
        assert rep.w5_vertices == naive.vertex_hits(w5t, t)


def test_witness_is_lex_first(rng, w5t):
    for _ in range(20):
        t = random_tournament(7, rng)
        rep = w5_vertex_set(t)
        for v, wit in rep.witness.items():
            assert v in wit
            assert naive.iso(naive.restrict(t, wit), w5t)
            first = next(
                s
                for s in combinations(range(7), 5)
                if v in s and naive.iso(naive.restrict(t, s), w5t)
            )
            assert wit == frozenset(first)


def test_embeds_against_brute_force(rng, c3, w5t):
    patterns = [c3, chain(4), w5t]
    for _ in range(10):
        host = random_tournament(rng.randrange(4, 8), rng)
        for pat in patterns:
            assert embeds(pat, host) == naive.embeds(pat, host)


def test_embeds_with_witness(rng, w5t):
    host = assemble_family(FamilySpec("H", (1, 1)))
    hit, sub = embeds(w5t, host, with_witness=True)
    assert hit
    assert naive.iso(naive.restrict(host, sub), w5t)
    assert embeds(w5t, chain(4)) is False


def test_family_membership_flags(t7):
    member = assemble_family(FamilySpec("I", (1, 1)))
    assert is_family_T_member(member)
    rep = w5_vertex_set(member)
    assert frozenset(range(member.n)) - rep.w5_vertices == {0, 1}
    assert not is_family_T_member(t7)
    assert not is_family_T_member(chain(5))
    assert not is_family_T_member(make_tournament(1, ()))


def test_component_invariant_values():
    assert c_invariant(assemble_family(FamilySpec("H", (1, 1)))) == 2
    assert c_invariant(assemble_family(FamilySpec("Jdual", (2, 1)))) == 2
    assert c_invariant(assemble_family(FamilySpec("L", (1, 1, 1)))) == 3
    with pytest.raises(NotFamilyT):
        c_invariant(gen_critical("T", 7))


def test_minimal_pairs_of_named_tournaments(c3, t5, u5):
    assert all(is_minimal_for_pair(c3, x, y) for x, y in combinations(range(3), 2))
    pairs5 = {
        (x, y) for x, y in combinations(range(5), 2) if is_minimal_for_pair(u5, x, y)
    }
    assert pairs5 == {(3, 4)}
    assert not any(is_minimal_for_pair(t5, x, y) for x, y in combinations(range(5), 2))


def test_minimal_pairs_match_brute_force(rng):
    hosts = list(enumerate_tournaments(5, "indec"))
    done = 0
    while done < 6:
        t = random_tournament(6, rng)
        if is_indecomposable(t):
            hosts.append(t)
            done += 1
    for t in hosts:
        for x, y in combinations(range(t.n), 2):
            assert is_minimal_for_pair(t, x, y) == naive.minimal_for_pair(t, x, y)


def test_minimal_pair_rejects_bad_input(c3, t5):
    with pytest.raises(VertexOutOfRange):
        is_minimal_for_pair(t5, 0, 9)
    with pytest.raises(SelfArc):
        is_minimal_for_pair(t5, 2, 2)
    with pytest.raises(BadSize):
        is_minimal_for_pair(chain(2), 0, 1)
    with pytest.raises(NotIndecomposable):
        is_minimal_for_pair(chain(5), 0, 1)


def test_window_reports_are_immutable(w5t):
    rep = w5_vertex_set(w5t)
    with pytest.raises(AttributeError):
        rep.w5_vertices = frozenset()
