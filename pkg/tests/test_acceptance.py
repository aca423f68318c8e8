"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import itertools
import random
import time

import pytest

import oracles
from conftest import all_tables, random_tables
from simplegames.coalition import Coalition, set_to_bits
from simplegames.enumeration import (
    Membership,
    enum_construction,
    no_finite_carrier_witness,
    prefix_membership_decision,
)
from simplegames.games import (
    CarrierGame,
    GameError,
    Verdict,
    a_game,
    carrier_to_prefix,
    dictator,
    eval_carrier,
    eval_prefix,
    eval_table,
    extract_determining_strings,
    majority,
    q_complement,
    threshold_game,
    unanimity,
    validate_prefix_game,
)
from simplegames.nakamura import ceiling_bound, nakamura_number
from simplegames.properties import (
    find_cofinite_losing,
    find_cofinite_winning,
    find_finite_losing,
    find_finite_winning,
    is_finitely_anonymous,
    is_monotonic,
    is_proper,
    is_strong,
    is_weak,
    nonanonymity_witness,
)
from simplegames.social_choice import (
    Profile,
    core,
    cycle_profile_witness,
    dominance,
    random_transitive,
    random_weak_order,
    verify_aggregation_rationality,
    verify_nakamura,
)

SEED = 20261019


@pytest.fixture
def criterion(capsys):
    """Yields a setter for the criterion label; prints PASS/FAIL when the test ends."""
    state = {"label": "?", "ok": False}

    def start(label):
        state["label"] = label

    yield start, state
    with capsys.disabled():
        print(f"\n[{'PASS' if state['ok'] else 'FAIL'}] {state['label']}")


def population():
    """All tables with n <= 3 plus 1000 seeded random n = 4 tables."""
    games = [g for n in range(4) for g in all_tables(n)]
    games += list(random_tables(4, 1000, seed=SEED))
    return games


def test_criterion_01_threshold_nakamura(criterion):
    start, state = criterion
    start("criterion 1: nu(threshold_game(k)) = k for k = 2..6, each under 1 s")
    for k in range(2, 7):
        t = time.perf_counter()
        assert nakamura_number(threshold_game(k)).nu == k
        assert time.perf_counter() - t < 1.0
    state["ok"] = True


def test_criterion_02_a_game_nakamura(criterion):
    start, state = criterion
    start("criterion 2: nu(a_game(n)) = 3 for n = 3..8")
    for n in range(3, 9):
        assert nakamura_number(a_game(n)).nu == 3
    state["ok"] = True


def test_criterion_03_a_game_properties(criterion):
    start, state = criterion
    start("criterion 3: a_game(n) monotonic, proper, strong, not weak for n = 3..8")
    for n in range(3, 9):
        g = a_game(n)
        assert is_monotonic(g).holds is True
        assert is_proper(g).holds is True
        assert is_strong(g).holds is True
        assert is_weak(g).holds is False
    state["ok"] = True


def test_criterion_04_ceiling_bound(criterion):
    start, state = criterion
    start("criterion 4: nu <= min winning size + 1 on nonweak games (n <= 4 all, 500 random n = 5)")
    t = time.perf_counter()
    games = [g for n in range(5) for g in all_tables(n)]
    rng = random.Random(SEED)
    random_n5 = []
    while len(random_n5) < 500:
        g = next(random_tables(5, 1, seed=rng.randrange(2**32)))
        if 0 not in g.winning and not is_weak(g):
            random_n5.append(g)
    checked = violations = 0
    for g in games + random_n5:
        if 0 in g.winning or is_weak(g):
            continue
        checked += 1
        nu = nakamura_number(g).nu
        violations += nu > ceiling_bound(g)
    assert violations == 0
    assert checked > 500
    assert time.perf_counter() - t < 300
    state["ok"] = True


def test_criterion_05_representation_equivalence(criterion):
    start, state = criterion
    start("criterion 5: extract -> eval_prefix agrees with eval_table (all n <= 3, 1000 random n = 4)")
    mismatches = 0
    for g in population():
        p = extract_determining_strings(g)
        for s in oracles.subsets(g.n):
            c = Coalition(set_to_bits(s, g.n), 0)
            mismatches += eval_prefix(p, c) is not eval_table(g, s)
    assert mismatches == 0
    state["ok"] = True


def test_criterion_06_carrier_to_prefix(criterion):
    start, state = criterion
    start("criterion 6: carrier_to_prefix total, well formed, agrees with eval_carrier (carrier <= 4)")
    rng = random.Random(SEED)
    coalitions = [
        Coalition("".join(rng.choice("01") for _ in range(rng.randrange(9))), rng.randrange(2))
        for _ in range(1000)
    ]
    mismatches = 0
    for k in range(5):
        carrier = frozenset(range(k))
        subsets = [frozenset(c) for r in range(k + 1) for c in itertools.combinations(range(k), r)]
        for bits in range(1 << len(subsets)):
            g = CarrierGame(carrier, frozenset(s for i, s in enumerate(subsets) if bits >> i & 1))
            p = carrier_to_prefix(g)
            report = validate_prefix_game(p)
            assert report.well_formed and report.total
            for c in coalitions:
                mismatches += eval_prefix(p, c) is not eval_carrier(g, c)
    assert mismatches == 0
    state["ok"] = True


def test_criterion_07_finite_cofinite_searches(criterion):
    start, state = criterion
    start("criterion 7: finite/cofinite winning/losing searches succeed on mixed extracted games")
    checked = 0
    for g in population():
        if not g.winning or len(g.winning) == 1 << g.n:
            continue
        p = extract_determining_strings(g)
        assert validate_prefix_game(p).total
        checked += 1
        for fn, verdict in ((find_finite_winning, Verdict.WINNING), (find_cofinite_winning, Verdict.WINNING),
                            (find_finite_losing, Verdict.LOSING), (find_cofinite_losing, Verdict.LOSING)):
            c = fn(p)
            assert c is not None
            assert eval_prefix(p, c) is verdict
    assert checked > 1000
    state["ok"] = True


def test_criterion_08_nonanonymity(criterion):
    start, state = criterion
    start("criterion 8: nonanonymity_witness and failed finite anonymity on extracted games")
    checked = 0
    for g in population():
        p = extract_determining_strings(g)
        if eval_prefix(p, Coalition.everyone()) is not Verdict.WINNING:
            continue
        if eval_prefix(p, Coalition.empty()) is not Verdict.LOSING:
            continue
        checked += 1
        c1, c2 = nonanonymity_witness(p)
        assert c1.is_finite and c2.is_finite
        assert len(c1.members_below(4 * p.depth + 1)) == len(c2.members_below(4 * p.depth + 1))
        assert eval_prefix(p, c1) is Verdict.WINNING
        assert eval_prefix(p, c2) is Verdict.LOSING
        assert is_finitely_anonymous(p).holds is False
    assert checked > 100
    state["ok"] = True


def test_criterion_09_a_game_segments_nondetermining(criterion):
    start, state = criterion
    start("criterion 9: A-segments of a_game(n) are nondetermining for n = 4..8, k < n-1")
    for n in range(4, 9):
        g = a_game(n)
        wins = oracles.family(g)
        p = extract_determining_strings(g)
        members = p.t0 | p.t1
        a = frozenset(range(1, n))
        for k in range(n - 1):
            seg = set_to_bits(a & set(range(k)), k)
            assert oracles.is_determining(n, wins, seg) is None
            assert not any(seg.startswith(s) for s in members)
    state["ok"] = True


def test_criterion_10_core_nonemptiness(criterion):
    start, state = criterion
    start("criterion 10: core nonempty below nu, empty at nu, on threshold_game(3), majority-3, unanimity")
    t = time.perf_counter()
    xs = ("x1", "x2", "x3")
    for g in (threshold_game(3), majority(3)):
        report = verify_nakamura(g, 2, mode="exhaustive")
        assert report.ok and report.rows[0].mode == "exhaustive"
        w = cycle_profile_witness(g, xs)
        cycle = {("x1", "x3"), ("x2", "x1"), ("x3", "x2")}
        assert dominance(g, xs, w.profile).relation == cycle
        assert core(g, xs, w.profile) == []
    report = verify_nakamura(unanimity(3), 4, mode="sampled", samples=1000, seed=SEED)
    assert report.ok
    assert all(row.mode == "sampled" and row.profiles_checked == 1000 for row in report.rows)
    assert time.perf_counter() - t < 120
    state["ok"] = True


def has_gap(entries):
    lengths = [s.length for s in enum_construction(entries).trace]
    return any(entries[s][0] > lengths[t] for s in range(len(entries)) for t in range(s))


def test_criterion_11_enumeration_construction(criterion):
    start, state = criterion
    start("criterion 11: enumeration construction invariants on 500 seeded listings")
    rng = random.Random(SEED)
    violations = 0
    witnessed = 0
    for _ in range(500):
        ks = rng.sample(range(8), rng.randrange(6))
        entries = [(k, rng.randrange(2)) for k in ks]
        c = enum_construction(entries)
        f = sorted(c.game.t0 | c.game.t1)
        violations += sum(a.startswith(b) or b.startswith(a) for a, b in itertools.combinations(f, 2))
        for s, step in enumerate(c.trace):
            so_far = [x for t in range(s + 1) for x in c.trace[t].strings]
            for bits in itertools.product("01", repeat=step.length):
                alpha = "".join(bits)
                if alpha[step.k] == str(step.v):
                    violations += not any(alpha.startswith(x) for x in so_far)
        for length in range(c.game.depth + 1):
            for bits in itertools.product("01", repeat=length):
                sigma = "".join(bits)
                expected = (Membership.IN_T1 if sigma in c.game.t1
                            else Membership.IN_T0 if sigma in c.game.t0 else Membership.NOT_IN_F)
                violations += prefix_membership_decision(c, sigma) is not expected
        if {v for _, v in entries} == {0, 1} and has_gap(entries):
            witnessed += 1
            violations += not no_finite_carrier_witness(c)
    assert violations == 0
    assert witnessed > 0
    state["ok"] = True


def test_criterion_12_q_complement_growth(criterion):
    start, state = criterion
    start("criterion 12: nu(q_complement(2, n)) = n for n = 3..8")
    for n in range(3, 9):
        g = q_complement(2, n)
        assert nakamura_number(g).nu == n
        assert oracles.nakamura(n, oracles.family(g)) == n
    state["ok"] = True


def test_criterion_13_aggregation_rationality(criterion):
    start, state = criterion
    start("criterion 13: dictator and unanimity keep rationality on 200 profiles; majority-3 rejected")
    rng = random.Random(SEED)
    xs = ("a", "b", "c", "d")
    for _ in range(200):
        p = Profile(xs, {i: random_weak_order(xs, rng) for i in range(3)})
        assert verify_aggregation_rationality(dictator(0), p, "neg_transitive").holds
    for _ in range(200):
        p = Profile(xs, {i: random_transitive(xs, rng) for i in range(3)})
        assert verify_aggregation_rationality(unanimity(3), p, "transitive").holds
    p = Profile(xs, {i: random_transitive(xs, rng) for i in range(3)})
    with pytest.raises(GameError, match="game not a filter"):
        verify_aggregation_rationality(majority(3), p, "transitive")
    with pytest.raises(GameError, match="game not an ultrafilter"):
        verify_aggregation_rationality(majority(3), p, "neg_transitive")
    state["ok"] = True
