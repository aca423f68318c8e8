"""Decidable checks of game properties, with witnesses.

Every checker grounds the game to a finite table first (see
:func:`simplegames.games.ground`), so prefix games must be total.
Complements are taken within the grounded universe, which for a prefix
game of depth d agrees with flipping every bit and the tail.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

from simplegames import kernels
from simplegames.coalition import Coalition, FinitePermutation
from simplegames.games import (
    CarrierGame,
    GameError,
    NotTotalError,
    PrefixGame,
    TableGame,
    Verdict,
    _as_game,
    effective_universe,
    ground,
    mask_to_set,
    set_to_mask,
    validate_prefix_game,
)

__all__ = [
    "PropertyReport",
    "is_monotonic",
    "is_proper",
    "is_strong",
    "veto_players",
    "is_weak",
    "is_prefilter",
    "is_filter",
    "is_ultrafilter",
    "is_finitely_anonymous",
    "is_carrier",
    "find_min_carrier",
    "find_finite_winning",
    "find_cofinite_winning",
    "find_finite_losing",
    "find_cofinite_losing",
    "nonanonymity_witness",
    "analyze",
]


def _jsonable(x: Any) -> Any:
    if isinstance(x, (frozenset, set)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, FinitePermutation):
        return x.to_json()
    if isinstance(x, Coalition):
        return str(x)
    return x


@dataclass(frozen=True)
class PropertyReport:
    property: str
    holds: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"property": self.property, "holds": self.holds, "witness": _jsonable(self.witness)}


def _popcount(m: int) -> int:
    return bin(m).count("1")


def is_monotonic(g) -> PropertyReport:
    t = ground(g)
    for m in sorted(t.winning):
        for j in range(t.n):
            bigger = m | (1 << j)
            if bigger != m and bigger not in t.winning:
                return PropertyReport("monotonic", False, (mask_to_set(m), mask_to_set(bigger)))
    return PropertyReport("monotonic", True)


def is_proper(g) -> PropertyReport:
    t = ground(g)
    for m in sorted(t.winning):
        if t.full ^ m in t.winning:
            return PropertyReport("proper", False, mask_to_set(m))
    return PropertyReport("proper", True)


def is_strong(g) -> PropertyReport:
    t = ground(g)
    for m in range(1 << t.n):
        if m not in t.winning and t.full ^ m not in t.winning:
            return PropertyReport("strong", False, mask_to_set(m))
    return PropertyReport("strong", True)


def _veto_mask(t: TableGame) -> int:
    v = t.full
    for m in t.winning:
        v &= m
    return v


def veto_players(g) -> frozenset[int]:
    """Players in every winning coalition (empty when nothing wins)."""
    t = ground(g)
    return mask_to_set(_veto_mask(t)) if t.winning else frozenset()


def _empty_family(t: TableGame) -> tuple[frozenset[int], ...]:
    _, fam = kernels.min_empty_intersection(sorted(t.winning), t.full)
    return tuple(mask_to_set(m) for m in fam)


def is_weak(g) -> PropertyReport:
    """Weak: nothing wins, or some player vetoes.  The witness is the veto set or an
    empty-intersection family of winning coalitions."""
    t = ground(g)
    if not t.winning:
        return PropertyReport("weak", True, frozenset())
    veto = _veto_mask(t)
    if veto:
        return PropertyReport("weak", True, mask_to_set(veto))
    return PropertyReport("weak", False, _empty_family(t))


def _prefilter(t: TableGame, name: str) -> PropertyReport | None:
    mono = is_monotonic(t)
    if not mono.holds:
        return PropertyReport(name, False, {"reason": "not monotonic", "pair": mono.witness})
    if t.full not in t.winning:
        return PropertyReport(name, False, {"reason": "the grand coalition loses"})
    if 0 in t.winning:
        return PropertyReport(name, False, {"reason": "the empty coalition wins"})
    if not _veto_mask(t):
        return PropertyReport(name, False, {"reason": "empty finite intersection", "family": _empty_family(t)})
    return None


def is_prefilter(g) -> PropertyReport:
    bad = _prefilter(ground(g), "prefilter")
    return PropertyReport("prefilter", True) if bad is None else bad


def _filter(t: TableGame, name: str) -> PropertyReport | None:
    bad = _prefilter(t, name)
    if bad is not None:
        return bad
    wins = sorted(t.winning)
    for a, b in itertools.combinations(wins, 2):
        if a & b not in t.winning:
            return PropertyReport(name, False, {"reason": "not closed under intersection",
                                                "pair": (mask_to_set(a), mask_to_set(b))})
    return None


def is_filter(g) -> PropertyReport:
    bad = _filter(ground(g), "filter")
    return PropertyReport("filter", True) if bad is None else bad


def is_ultrafilter(g) -> PropertyReport:
    t = ground(g)
    bad = _filter(t, "ultrafilter")
    if bad is not None:
        return bad
    strong = is_strong(t)
    if not strong.holds:
        return PropertyReport("ultrafilter", False, {"reason": "not strong", "coalition": strong.witness})
    return PropertyReport("ultrafilter", True)


def _anonymity_universe(g) -> int:
    g = _as_game(g)
    if isinstance(g, TableGame):
        return g.n
    if isinstance(g, CarrierGame):
        return g.universe + 1
    return max(2 * g.depth, 1)


def is_finitely_anonymous(g, max_support: int = 4, universe: int | None = None) -> PropertyReport:
    """Invariance under permutations moving at most ``max_support`` players of the universe.

    Transpositions generate every finite permutation and connect all
    equal-size coalitions, so for ``max_support >= 2`` it suffices to test
    single swaps; the witness is then a swap and the coalition it breaks.
    Default universes: n for tables, one player past the carrier for carrier
    games, ``2 * depth`` for prefix games.
    """
    u = _anonymity_universe(g) if universe is None else universe
    t = ground(g, u)
    if max_support < 2:
        return PropertyReport("finitely_anonymous", True)
    for m in range(1 << u):
        wins = m in t.winning
        for i in range(u):
            if not m >> i & 1:
                continue
            for j in range(u):
                if m >> j & 1:
                    continue
                if ((m ^ (1 << i) ^ (1 << j)) in t.winning) != wins:
                    return PropertyReport("finitely_anonymous", False,
                                          (FinitePermutation.swap(i, j), mask_to_set(m)))
    return PropertyReport("finitely_anonymous", True)


def is_carrier(g, s) -> PropertyReport:
    s = frozenset(s)
    u = max(effective_universe(g), max(s, default=-1) + 1)
    t = ground(g, u)
    smask = set_to_mask(s)
    for m in range(1 << u):
        if (m in t.winning) != ((m & smask) in t.winning):
            return PropertyReport("carrier", False, mask_to_set(m))
    return PropertyReport("carrier", True)


def find_min_carrier(g) -> frozenset[int] | None:
    """A minimum-size carrier inside the effective universe, or None."""
    t = ground(g)
    for size in range(t.n + 1):
        for c in itertools.combinations(range(t.n), size):
            if is_carrier(t, c).holds:
                return frozenset(c)
    return None  # pragma: no cover - the universe itself is always a carrier


def _pick(t: TableGame, want_win: bool, cofinite: bool) -> Coalition | None:
    def key(m: int):
        size = t.n - _popcount(m) if cofinite else _popcount(m)
        return (size, t.full ^ m if cofinite else m)

    cands = [m for m in range(1 << t.n) if (m in t.winning) == want_win]
    if not cands:
        return None
    m = min(cands, key=key)
    if cofinite:
        return Coalition.cofinite(mask_to_set(t.full ^ m))
    return Coalition.finite(mask_to_set(m))


def find_finite_winning(g) -> Coalition | None:
    return _pick(ground(g), True, False)


def find_cofinite_winning(g) -> Coalition | None:
    return _pick(ground(g), True, True)


def find_finite_losing(g) -> Coalition | None:
    return _pick(ground(g), False, False)


def find_cofinite_losing(g) -> Coalition | None:
    return _pick(ground(g), False, True)


def nonanonymity_witness(g: PrefixGame) -> tuple[Coalition, Coalition]:
    """Two equal-size finite coalitions with opposite verdicts.

    With ``1^k`` the winning determining initial segment of N and ``0^k'``
    the losing one of the empty set, ``{0..k-1}`` wins while the set encoded
    by ``0^k' 1^k``, i.e. ``{k'..k'+k-1}``, loses.
    """
    g = _as_game(g)
    if not isinstance(g, PrefixGame):
        raise TypeError("nonanonymity_witness needs a PrefixGame")
    report = validate_prefix_game(g)
    if not (report.well_formed and report.total):
        raise NotTotalError("; ".join(report.violations))
    if g.evaluate(Coalition.everyone()) is not Verdict.WINNING:
        raise GameError("precondition violated: N must be winning")
    if g.evaluate(Coalition.empty()) is not Verdict.LOSING:
        raise GameError("precondition violated: the empty coalition must be losing")
    k = next(j for j in range(g.depth + 1) if "1" * j in g.t1)
    k0 = next(j for j in range(g.depth + 1) if "0" * j in g.t0)
    c1 = Coalition.finite(range(k))
    c2 = Coalition("0" * k0 + "1" * k, 0)
    assert g.evaluate(c1) is Verdict.WINNING and g.evaluate(c2) is Verdict.LOSING
    return c1, c2


def analyze(g, max_support: int = 4) -> list[PropertyReport]:
    """Every property check, in a fixed order."""
    reports = [
        is_monotonic(g),
        is_proper(g),
        is_strong(g),
        is_weak(g),
        is_prefilter(g),
        is_filter(g),
        is_ultrafilter(g),
        is_finitely_anonymous(g, max_support),
    ]
    carrier = find_min_carrier(g)
    reports.append(PropertyReport("min_carrier", carrier is not None, carrier))
    for name, fn in (
        ("finite_winning", find_finite_winning),
        ("cofinite_winning", find_cofinite_winning),
        ("finite_losing", find_finite_losing),
        ("cofinite_losing", find_cofinite_losing),
    ):
        c = fn(g)
        reports.append(PropertyReport(name, c is not None, c))
    return reports
