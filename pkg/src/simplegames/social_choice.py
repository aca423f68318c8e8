"""Simple games with ordinal preferences: dominance, core, and the Nakamura bound on the core.

Alternative x dominates y under profile p when some winning coalition has
every member preferring x to y.  The core is the set of undominated
alternatives.  For a nonweak game with Nakamura number nu, the core is
nonempty for every profile exactly when there are fewer than nu
alternatives; :func:`cycle_profile_witness` builds the profile that breaks
it at nu or more.

Profiles assign a strict, acyclic relation to each player of the game's
effective universe.  Players left out of a profile have the empty
preference.  Players outside a carrier cannot change dominance, because a
winning coalition inside {i : x >_i y} stays winning when cut down to the
carrier.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from simplegames import kernels
from simplegames.games import GameError, TableGame, _as_game, effective_universe, ground, mask_to_set
from simplegames.nakamura import INFINITE, nakamura_number
from simplegames.properties import is_filter, is_ultrafilter

__all__ = [
    "Pair",
    "Profile",
    "Dominance",
    "CycleWitness",
    "VerificationRow",
    "VerificationReport",
    "RationalityReport",
    "is_acyclic",
    "is_transitive",
    "is_negatively_transitive",
    "acyclic_relations",
    "acyclic_relation_count",
    "random_acyclic",
    "random_transitive",
    "random_weak_order",
    "linear_order",
    "dominance",
    "core",
    "find_cycle",
    "cycle_profile_witness",
    "verify_nakamura",
    "verify_acyclicity_bound",
    "verify_aggregation_rationality",
]

Pair = tuple[str, str]
Relation = frozenset  # of Pair: (x, y) means x is strictly preferred to y


def _successors(rel: Iterable[Pair]) -> dict[str, list[str]]:
    out: dict[str, list[str]] = {}
    for x, y in rel:
        out.setdefault(x, []).append(y)
    return out


def _reaches(succ: Mapping[str, list[str]], start: str, goal: str) -> bool:
    seen, stack = {start}, [start]
    while stack:
        x = stack.pop()
        if x == goal:
            return True
        for y in succ.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def is_acyclic(rel: Iterable[Pair]) -> bool:
    """No chain x1 > x2 > ... > xm > x1 (so also irreflexive and asymmetric)."""
    rel = list(rel)
    succ = _successors(rel)
    return not any(_reaches(succ, y, x) for x, y in rel)


def is_transitive(rel: Iterable[Pair]) -> bool:
    rel = set(rel)
    succ = _successors(rel)
    return all((x, z) in rel for x, y in rel for z in succ.get(y, ()))


def is_negatively_transitive(rel: Iterable[Pair], alternatives: Sequence[str]) -> bool:
    rel = set(rel)
    return all(
        (x, y) in rel or (y, z) in rel
        for x, z in rel
        for y in alternatives
        if y != x and y != z
    )


def acyclic_relation_count(r: int) -> int:
    """Number of acyclic relations (labelled DAGs) on r alternatives."""
    a = [1]
    for n in range(1, r + 1):
        a.append(sum((-1) ** (k + 1) * math.comb(n, k) * 2 ** (k * (n - k)) * a[n - k]
                     for k in range(1, n + 1)))
    return a[r]


def acyclic_relations(alternatives: Sequence[str]) -> list[frozenset[Pair]]:
    """Every acyclic relation on the alternatives, in a fixed order."""
    pairs = [(x, y) for x in alternatives for y in alternatives if x != y]
    out: list[frozenset[Pair]] = []

    def grow(i: int, chosen: list[Pair]) -> None:
        if i == len(pairs):
            out.append(frozenset(chosen))
            return
        grow(i + 1, chosen)
        x, y = pairs[i]
        if not _reaches(_successors(chosen), y, x):
            chosen.append((x, y))
            grow(i + 1, chosen)
            chosen.pop()

    grow(0, [])
    return out


def linear_order(ranking: Sequence[str]) -> frozenset[Pair]:
    """Strict linear order from best to worst."""
    return frozenset((ranking[i], ranking[j]) for i in range(len(ranking)) for j in range(i + 1, len(ranking)))


def random_acyclic(alternatives: Sequence[str], rng: random.Random) -> frozenset[Pair]:
    """A random subset of a random linear order; every acyclic relation can occur."""
    order = list(alternatives)
    rng.shuffle(order)
    return frozenset(p for p in linear_order(order) if rng.random() < 0.5)


def random_transitive(alternatives: Sequence[str], rng: random.Random) -> frozenset[Pair]:
    """Transitive closure of :func:`random_acyclic`: a random strict partial order."""
    rel = set(random_acyclic(alternatives, rng))
    changed = True
    while changed:
        extra = {(x, z) for x, y in rel for y2, z in rel if y == y2} - rel
        rel |= extra
        changed = bool(extra)
    return frozenset(rel)


def random_weak_order(alternatives: Sequence[str], rng: random.Random) -> frozenset[Pair]:
    """Random ranks with ties; asymmetric and negatively transitive."""
    rank = {x: rng.randrange(len(alternatives)) for x in alternatives}
    return frozenset((x, y) for x in alternatives for y in alternatives if rank[x] > rank[y])


@dataclass(frozen=True)
class Profile:
    alternatives: tuple[str, ...]
    preferences: Mapping[int, frozenset[Pair]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        alts = tuple(self.alternatives)
        if len(alts) < 2:
            raise ValueError("need at least two alternatives")
        if len(set(alts)) != len(alts):
            raise ValueError(f"alternatives must be distinct: {alts}")
        prefs = {}
        for i, rel in self.preferences.items():
            if not isinstance(i, int) or i < 0:
                raise ValueError(f"player indices must be non-negative integers, got {i!r}")
            rel = frozenset((x, y) for x, y in rel)
            for x, y in rel:
                if x not in alts or y not in alts:
                    raise ValueError(f"player {i}: unknown alternative in {(x, y)}")
            if not is_acyclic(rel):
                raise ValueError(f"player {i}: preference is not acyclic")
            prefs[i] = rel
        object.__setattr__(self, "alternatives", alts)
        object.__setattr__(self, "preferences", dict(sorted(prefs.items())))

    def __hash__(self) -> int:
        return hash((self.alternatives, tuple(self.preferences.items())))

    def relation(self, player: int) -> frozenset[Pair]:
        return self.preferences.get(player, frozenset())

    @property
    def players(self) -> int:
        """One more than the largest player index mentioned."""
        return max(self.preferences, default=-1) + 1

    def supporters(self, x: str, y: str) -> int:
        """Bitmask of players preferring x to y."""
        m = 0
        for i, rel in self.preferences.items():
            if (x, y) in rel:
                m |= 1 << i
        return m

    def to_json(self) -> dict:
        pos = {a: k for k, a in enumerate(self.alternatives)}
        return {
            "alternatives": list(self.alternatives),
            "players": {
                str(i): [list(p) for p in sorted(rel, key=lambda p: (pos[p[0]], pos[p[1]]))]
                for i, rel in self.preferences.items()
            },
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Profile:
        alts = data["alternatives"]
        players = data.get("players", {})
        prefs = {}
        for key, pairs in players.items():
            try:
                i = int(key)
            except ValueError:
                raise ValueError(f"player key must be an integer, got {key!r}") from None
            prefs[i] = frozenset((x, y) for x, y in pairs)
        return cls(tuple(alts), prefs)


@dataclass(frozen=True)
class Dominance:
    alternatives: tuple[str, ...]
    certificates: Mapping[Pair, frozenset[int]]

    def __hash__(self) -> int:
        return hash((self.alternatives, tuple(self.certificates)))

    @property
    def relation(self) -> frozenset[Pair]:
        return frozenset(self.certificates)

    def to_json(self) -> dict:
        return {
            "alternatives": list(self.alternatives),
            "pairs": [
                {"winner": x, "loser": y, "coalition": sorted(c)}
                for (x, y), c in self.certificates.items()
            ],
        }


def _game_table(g, profile_players: int) -> TableGame:
    g = _as_game(g)
    base = effective_universe(g)
    if isinstance(g, TableGame) and profile_players > g.n:
        raise GameError(
            f"inconsistent universe sizes: profile mentions player {profile_players - 1}, game has n={g.n}"
        )
    return ground(g, max(base, profile_players))


def _dominance_from(cert: Sequence[int], alts: Sequence[str], p: Profile) -> dict[Pair, frozenset[int]]:
    out = {}
    for x in alts:
        for y in alts:
            if x != y:
                c = cert[p.supporters(x, y)]
                if c >= 0:
                    out[(x, y)] = mask_to_set(c)
    return out


def dominance(g, X: Sequence[str], p: Profile) -> Dominance:
    """x dominates y iff {i : x >_i y} contains a winning coalition, stored as certificate."""
    alts = tuple(X)
    if set(alts) != set(p.alternatives):
        raise ValueError("profile alternatives differ from X")
    t = _game_table(g, p.players)
    cert = kernels.subset_certificates(t.table, t.n)
    return Dominance(alts, _dominance_from(cert, alts, p))


def core(g, X: Sequence[str], p: Profile) -> list[str]:
    """Undominated alternatives, in the order of X."""
    rel = dominance(g, X, p).relation
    return [x for x in X if not any((y, x) in rel for y in X)]


def find_cycle(d: Dominance | Iterable[Pair], alternatives: Sequence[str] | None = None) -> tuple[str, ...] | None:
    """A shortest cycle (x1, ..., xm) with x1 > x2 > ... > xm > x1, or None."""
    if isinstance(d, Dominance):
        alternatives, rel = d.alternatives, d.relation
    else:
        rel = frozenset(d)
        if alternatives is None:
            alternatives = sorted({a for pair in rel for a in pair})
    succ = _successors(rel)
    best: tuple[str, ...] | None = None
    for start in alternatives:
        # BFS back to start gives the shortest cycle through it
        parent = {start: None}
        frontier = [start]
        found = None
        while frontier and found is None:
            nxt = []
            for x in frontier:
                for y in sorted(succ.get(x, ()), key=list(alternatives).index):
                    if y == start:
                        found = x
                        break
                    if y not in parent:
                        parent[y] = x
                        nxt.append(y)
                if found is not None:
                    break
            frontier = nxt
        if found is None:
            continue
        path = [found]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        cycle = tuple(reversed(path))
        if best is None or len(cycle) < len(best):
            best = cycle
    return best


@dataclass(frozen=True)
class CycleWitness:
    profile: Profile
    family: tuple[frozenset[int], ...]
    partition: tuple[frozenset[int], ...]
    cycle: frozenset[Pair]

    def to_json(self) -> dict:
        return {
            "family": [sorted(s) for s in self.family],
            "partition": [sorted(s) for s in self.partition],
            "cycle": [list(p) for p in sorted(self.cycle, key=lambda p: self.profile.alternatives.index(p[0]))],
            "profile": self.profile.to_json(),
        }


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise AssertionError(f"cycle witness postcondition failed: {what}")


def cycle_profile_witness(g, X: Sequence[str]) -> CycleWitness:
    """A profile whose dominance relation is the full cycle x_k > x_{k-1} (x_0 = x_r).

    Takes a minimum empty-intersection family L_1..L_nu, repeats L_nu up to
    r = #X members, splits the universe into D_k = (L_0 ∩ ... ∩ L_{k-1}) minus
    L_k with L_0 the whole universe, and gives D_k the cycle minus the edge
    (x_k, x_{k-1}).  Only D_k opposes that edge, and L_k avoids D_k.
    """
    alts = tuple(X)
    r = len(alts)
    nak = nakamura_number(g)
    if not nak.is_finite:
        raise GameError("no witness exists: the game is weak")
    if r < nak.nu:
        raise GameError(f"no witness exists: {r} alternatives is below the Nakamura number {nak.nu}")
    family = nak.witness + (nak.witness[-1],) * (r - nak.nu)
    u = effective_universe(g)
    running = frozenset(range(u))
    parts = []
    for L in family:
        parts.append(running - L)
        running = running & L
    x = (alts[-1],) + alts  # x[0] = x_r
    cycle = frozenset((x[k], x[k - 1]) for k in range(1, r + 1))
    prefs = {}
    for k, part in enumerate(parts, start=1):
        rel = cycle - {(x[k], x[k - 1])}
        _require(is_acyclic(rel), f"preference of D_{k} is acyclic")
        for i in part:
            prefs[i] = rel
    _require(frozenset().union(*parts) == frozenset(range(u)), "D_k cover the universe")
    _require(sum(len(p) for p in parts) == u, "D_k are pairwise disjoint")
    profile = Profile(alts, prefs)
    dom = dominance(g, alts, profile)
    _require(dom.relation == cycle, "dominance equals the cycle")
    _require(not core(g, alts, profile), "core is empty")
    return CycleWitness(profile, family, tuple(parts), cycle)


@dataclass
class VerificationRow:
    r: int
    nu: int | float
    regime: str
    mode: str
    profiles_checked: int
    violations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "nu": self.nu if self.nu != INFINITE else "infinite",
            "regime": self.regime,
            "mode": self.mode,
            "profiles_checked": self.profiles_checked,
            "violations": self.violations,
        }


@dataclass
class VerificationReport:
    check: str
    nu: int | float
    rows: list[VerificationRow]

    @property
    def ok(self) -> bool:
        return all(not row.violations for row in self.rows)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "nu": self.nu if self.nu != INFINITE else "infinite",
            "ok": self.ok,
            "rows": [row.to_json() for row in self.rows],
        }


def _profiles(alts, players: int, mode: str, samples: int, seed: int, budget: int) -> tuple[str, Iterator[list]]:
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {mode!r}")
    if mode == "exhaustive" and acyclic_relation_count(len(alts)) ** players <= budget:
        rels = acyclic_relations(alts)
        return "exhaustive", (list(c) for c in itertools.product(rels, repeat=players))
    rng = random.Random(seed * 1_000_003 + len(alts))
    return "sampled", ([random_acyclic(alts, rng) for _ in range(players)] for _ in range(samples))


def _verify(g, r_max: int, mode: str, samples: int, seed: int, budget: int, check: str) -> VerificationReport:
    t = ground(g)
    if 0 in t.winning:
        raise GameError("the empty coalition must be losing")
    if not t.winning:
        raise GameError("the game has no winning coalition")
    nu = nakamura_number(g).nu
    cert = kernels.subset_certificates(t.table, t.n)
    rows = []
    for r in range(2, r_max + 1):
        alts = tuple(f"x{i}" for i in range(1, r + 1))
        if r < nu:
            used, profiles = _profiles(alts, t.n, mode, samples, seed, budget)
            row = VerificationRow(r, nu, "below", used, 0)
            for rels in profiles:
                p = Profile(alts, dict(enumerate(rels)))
                rel = frozenset(_dominance_from(cert, alts, p))
                if check == "core":
                    bad = all(any((y, x) in rel for y in alts) for x in alts)
                else:
                    bad = find_cycle(rel, alts) is not None
                row.profiles_checked += 1
                if bad:
                    row.violations.append(p.to_json())
        else:
            row = VerificationRow(r, nu, "at_or_above", "witness", 1)
            w = cycle_profile_witness(g, alts)
            d = dominance(g, alts, w.profile)
            if check == "core":
                bad = bool(core(g, alts, w.profile))
            else:
                bad = find_cycle(d) is None
            if bad:
                row.violations.append(w.profile.to_json())
        rows.append(row)
    return VerificationReport(check, nu, rows)


def verify_nakamura(g, r_max: int, mode: str = "exhaustive", samples: int = 1000,
                    seed: int = 0, budget: int = 10**6) -> VerificationReport:
    """Core nonempty for all checked profiles below nu; empty-core witness from nu on.

    ``exhaustive`` enumerates every profile of acyclic relations when there
    are at most ``budget`` of them and falls back to ``samples`` seeded
    random profiles otherwise; each row records which mode ran.
    """
    return _verify(g, r_max, mode, samples, seed, budget, "core")


def verify_acyclicity_bound(g, r_max: int, mode: str = "exhaustive", samples: int = 1000,
                            seed: int = 0, budget: int = 10**6) -> VerificationReport:
    """Like :func:`verify_nakamura`, checking that dominance is acyclic below nu."""
    return _verify(g, r_max, mode, samples, seed, budget, "acyclic")


@dataclass(frozen=True)
class RationalityReport:
    level: str
    holds: bool
    violation: tuple[str, str, str] | None = None

    def to_json(self) -> dict:
        return {"level": self.level, "holds": self.holds,
                "violation": list(self.violation) if self.violation else None}


def verify_aggregation_rationality(g, p: Profile, level: str) -> RationalityReport:
    """Filters keep transitive individual preferences transitive; ultrafilters keep
    weak orders (asymmetric, negatively transitive) intact."""
    alts = p.alternatives
    if level == "transitive":
        if not is_filter(g).holds:
            raise GameError("game not a filter")
        for i, rel in p.preferences.items():
            if not is_transitive(rel):
                raise GameError(f"player {i}: preference is not transitive")
    elif level == "neg_transitive":
        if not is_ultrafilter(g).holds:
            raise GameError("game not an ultrafilter")
        for i, rel in p.preferences.items():
            if not is_negatively_transitive(rel, alts):
                raise GameError(f"player {i}: preference is not negatively transitive")
    else:
        raise ValueError(f"level must be 'transitive' or 'neg_transitive', got {level!r}")

    rel = dominance(g, alts, p).relation
    for x, y in sorted(rel):
        if (y, x) in rel:
            return RationalityReport(level, False, (x, y, x))
    if level == "transitive":
        for x, y in sorted(rel):
            for z in alts:
                if (y, z) in rel and (x, z) not in rel:
                    return RationalityReport(level, False, (x, y, z))
    else:
        for x, z in sorted(rel):
            for y in alts:
                if y not in (x, z) and (x, y) not in rel and (y, z) not in rel:
                    return RationalityReport(level, False, (x, y, z))
    return RationalityReport(level, True)
