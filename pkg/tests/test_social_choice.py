import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import all_tables
from simplegames.games import (
    CarrierGame,
    GameError,
    TableGame,
    a_game,
    dictator,
    majority,
    threshold_game,
    unanimity,
)
from simplegames.nakamura import INFINITE, nakamura_number
from simplegames.properties import is_monotonic, is_weak
from simplegames.social_choice import (
    Profile,
    acyclic_relation_count,
    acyclic_relations,
    core,
    cycle_profile_witness,
    dominance,
    find_cycle,
    is_acyclic,
    is_negatively_transitive,
    is_transitive,
    linear_order,
    random_acyclic,
    random_transitive,
    random_weak_order,
    verify_acyclicity_bound,
    verify_aggregation_rationality,
    verify_nakamura,
)

ABC = ("a", "b", "c")
CONDORCET = Profile(ABC, {0: linear_order("abc"), 1: linear_order("bca"), 2: linear_order("cab")})


def test_profile_validation():
    with pytest.raises(ValueError, match="not acyclic"):
        Profile(ABC, {0: {("a", "b"), ("b", "a")}})
    with pytest.raises(ValueError, match="unknown alternative"):
        Profile(ABC, {0: {("a", "z")}})
    with pytest.raises(ValueError):
        Profile(("a", "a"), {})
    with pytest.raises(ValueError):
        Profile(("a",), {})
    p = Profile(ABC, {2: {("a", "b")}})
    assert p.relation(0) == frozenset() and p.players == 3


def test_profile_json_roundtrip():
    assert Profile.from_json(CONDORCET.to_json()) == CONDORCET
    assert CONDORCET.to_json()["players"]["1"] == [["b", "a"], ["b", "c"], ["c", "a"]]


def test_dominance_examples():
    p = Profile(("a", "b"), {0: {("a", "b")}, 1: {("a", "b")}, 2: {("b", "a")}})
    d = dominance(majority(3), ("a", "b"), p)
    assert d.relation == {("a", "b")}
    assert d.certificates[("a", "b")] == {0, 1}
    assert dominance(unanimity(3), ("a", "b"), p).relation == frozenset()
    shared = Profile(("x", "y"), {i: {("x", "y")} for i in range(3)})
    assert dominance(a_game(3), ("x", "y"), shared).relation == {("x", "y")}


def test_core_examples():
    same = Profile(ABC, {i: linear_order("abc") for i in range(3)})
    assert core(unanimity(3), ABC, same) == ["a"]
    assert core(majority(3), ABC, CONDORCET) == []
    rels = acyclic_relations(("a", "b"))
    assert len(rels) == 3
    for combo in itertools.product(rels, repeat=3):
        assert core(majority(3), ("a", "b"), Profile(("a", "b"), dict(enumerate(combo))))


def test_find_cycle_examples():
    d = dominance(majority(3), ABC, CONDORCET)
    cycle = find_cycle(d)
    assert cycle is not None and len(cycle) == 3
    for i, x in enumerate(cycle):
        assert (x, cycle[(i + 1) % 3]) in d.relation
    assert find_cycle([], ABC) is None
    assert find_cycle([("a", "b")], ABC) is None
    assert find_cycle([("a", "b"), ("b", "c"), ("c", "a"), ("b", "a")], ABC) == ("a", "b")


def test_acyclic_counts():
    assert [acyclic_relation_count(r) for r in range(6)] == [1, 1, 3, 25, 543, 29281]
    for r in range(1, 5):
        alts = "abcd"[:r]
        rels = acyclic_relations(alts)
        assert len(rels) == len(set(rels)) == acyclic_relation_count(r)
        assert all(oracles.acyclic_by_brute_force(alts, rel) for rel in rels)


def test_acyclic_check_matches_brute_force():
    alts = "abc"
    pairs = [(x, y) for x in alts for y in alts if x != y]
    for bits in range(1 << len(pairs)):
        rel = {p for i, p in enumerate(pairs) if bits >> i & 1}
        assert is_acyclic(rel) == oracles.acyclic_by_brute_force(alts, rel)


def test_random_generators():
    rng = random.Random(3)
    for _ in range(200):
        assert is_acyclic(random_acyclic("abcd", rng))
        t = random_transitive("abcd", rng)
        assert is_acyclic(t) and is_transitive(t)
        w = random_weak_order("abcd", rng)
        assert is_acyclic(w) and is_negatively_transitive(w, "abcd")


def test_cycle_witness_threshold():
    w = cycle_profile_witness(threshold_game(3), ("x1", "x2", "x3"))
    assert w.family == (frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2}))
    assert w.partition == (frozenset({2}), frozenset({1}), frozenset({0}))
    assert w.cycle == {("x1", "x3"), ("x2", "x1"), ("x3", "x2")}
    assert dominance(threshold_game(3), ("x1", "x2", "x3"), w.profile).relation == w.cycle
    assert core(threshold_game(3), ("x1", "x2", "x3"), w.profile) == []


def test_cycle_witness_a_game():
    w = cycle_profile_witness(a_game(4), ABC)
    assert w.family == (frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2, 3}))
    assert w.partition == (frozenset({2, 3}), frozenset({1}), frozenset({0}))
    assert core(a_game(4), ABC, w.profile) == []


def test_cycle_witness_errors():
    with pytest.raises(GameError, match="no witness exists"):
        cycle_profile_witness(dictator(0), ABC)
    with pytest.raises(GameError, match="no witness exists"):
        cycle_profile_witness(threshold_game(4), ABC)


def test_cycle_witness_postconditions_small_games():
    for n in (2, 3):
        for g in all_tables(n):
            if 0 in g.winning or is_weak(g):
                continue
            nu = nakamura_number(g).nu
            for r in (nu, nu + 1):
                alts = tuple(f"x{i}" for i in range(1, r + 1))
                w = cycle_profile_witness(g, alts)
                wins = oracles.family(g)
                assert oracles.dominance(alts, w.profile.preferences, wins) == w.cycle
                assert oracles.core(alts, w.profile.preferences, wins) == []


def test_core_and_dominance_match_oracle():
    rng = random.Random(17)
    for g in all_tables(3):
        if rng.random() > 0.25:
            continue
        wins = oracles.family(g)
        for _ in range(5):
            p = Profile(ABC, {i: random_acyclic(ABC, rng) for i in range(3)})
            assert dominance(g, ABC, p).relation == oracles.dominance(ABC, p.preferences, wins)
            assert core(g, ABC, p) == oracles.core(ABC, p.preferences, wins)
            if not core(g, ABC, p):
                assert find_cycle(dominance(g, ABC, p)) is not None


def test_players_outside_carrier_do_not_matter():
    rng = random.Random(5)
    g = threshold_game(3)
    for _ in range(100):
        base = {i: random_acyclic(ABC, rng) for i in range(3)}
        extra = {**base, **{i: random_acyclic(ABC, rng) for i in range(3, 6)}}
        assert dominance(g, ABC, Profile(ABC, base)).relation == dominance(g, ABC, Profile(ABC, extra)).relation


def test_table_game_rejects_players_outside_universe():
    with pytest.raises(GameError, match="inconsistent universe sizes"):
        dominance(majority(3), ABC, Profile(ABC, {3: linear_order("abc")}))


def test_certificates_survive_supersets_for_monotonic_games():
    rng = random.Random(9)
    for g in all_tables(3):
        if not is_monotonic(g):
            continue
        p = Profile(ABC, {i: random_acyclic(ABC, rng) for i in range(3)})
        d = dominance(g, ABC, p)
        for pair, cert in d.certificates.items():
            for extra in range(3):
                assert (cert | {extra}) in oracles.family(g)


def test_verify_nakamura_examples():
    r = verify_nakamura(threshold_game(3), 3)
    assert r.ok and r.nu == 3
    assert [(row.r, row.regime, row.mode) for row in r.rows] == [(2, "below", "exhaustive"), (3, "at_or_above", "witness")]
    assert r.rows[0].profiles_checked == 27
    r = verify_nakamura(unanimity(3), 4, seed=1, samples=200)
    assert r.ok and r.nu == INFINITE
    assert [row.mode for row in r.rows] == ["exhaustive", "exhaustive", "sampled"]
    r = verify_nakamura(majority(3), 3)
    assert r.ok and r.rows[1].regime == "at_or_above"


def test_verify_acyclicity_examples():
    r = verify_acyclicity_bound(threshold_game(3), 3)
    assert r.ok and r.rows[0].profiles_checked == 27
    r = verify_acyclicity_bound(dictator(0), 4, mode="sampled", samples=200, seed=2)
    assert r.ok and all(row.regime == "below" for row in r.rows)


def test_verify_preconditions():
    with pytest.raises(GameError):
        verify_nakamura(TableGame(2, frozenset()), 3)
    with pytest.raises(GameError):
        verify_nakamura(TableGame.from_sets(2, [[]]), 3)
    with pytest.raises(ValueError):
        verify_nakamura(majority(3), 3, mode="bogus")


def test_verify_is_deterministic():
    a = verify_nakamura(majority(5), 3, mode="sampled", samples=50, seed=4).to_json()
    b = verify_nakamura(majority(5), 3, mode="sampled", samples=50, seed=4).to_json()
    assert a == b


def test_rationality_examples():
    lin = Profile(ABC, {0: linear_order("bca"), 1: linear_order("abc")})
    r = verify_aggregation_rationality(dictator(0), lin, "neg_transitive")
    assert r.holds
    assert dominance(dictator(0), ABC, lin).relation == linear_order("bca")
    rng = random.Random(1)
    for _ in range(50):
        p = Profile(ABC, {i: random_transitive(ABC, rng) for i in range(3)})
        assert verify_aggregation_rationality(unanimity(3), p, "transitive").holds
    with pytest.raises(GameError, match="game not a filter"):
        verify_aggregation_rationality(majority(3), CONDORCET, "transitive")
    with pytest.raises(GameError, match="game not an ultrafilter"):
        verify_aggregation_rationality(unanimity(3), CONDORCET, "neg_transitive")
    with pytest.raises(GameError, match="not transitive"):
        verify_aggregation_rationality(unanimity(3), Profile(ABC, {0: {("a", "b"), ("b", "c")}}), "transitive")


def test_carrier_game_dominance_with_empty_carrier_member():
    g = CarrierGame(frozenset({1}), frozenset({frozenset({1})}))
    p = Profile(("a", "b"), {1: {("b", "a")}})
    assert dominance(g, ("a", "b"), p).relation == {("b", "a")}


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6))
def test_empty_core_implies_cycle(seed):
    rng = random.Random(seed)
    alts = "abcd"
    p = Profile(tuple(alts), {i: random_acyclic(alts, rng) for i in range(5)})
    g = majority(5)
    if not core(g, tuple(alts), p):
        assert find_cycle(dominance(g, tuple(alts), p)) is not None
