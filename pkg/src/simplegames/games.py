"""Simple game representations and the named games.

Three representations are supported:

* :class:`TableGame` lists the winning subsets of a finite universe
  ``{0, ..., n-1}``.  Evaluated on a :class:`Coalition`, only the members
  below ``n`` count (the universe acts as a carrier).
* :class:`CarrierGame` is a finite carrier plus the winning subsets of it.
* :class:`PrefixGame` is a pair ``(t0, t1)`` of losing and winning
  determining strings.  A coalition is decided by the first of its initial
  segments found in ``t0`` or ``t1``.  Games built from partial data may leave
  some coalitions undetermined.

Every game can be *grounded* to a :class:`TableGame` over a finite universe
with :func:`ground`; all property checks and searches run on the grounded
table.  Grounding is exact: a total prefix game of depth ``d`` decides every
coalition from its first ``d`` bits, and a carrier game from its carrier.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Union

from simplegames import kernels
from simplegames.coalition import Coalition, check_bits

__all__ = [
    "Verdict",
    "GameError",
    "NotTotalError",
    "TableGame",
    "CarrierGame",
    "PrefixGame",
    "PrefixValidation",
    "Game",
    "eval_table",
    "eval_carrier",
    "eval_prefix",
    "evaluate",
    "validate_prefix_game",
    "carrier_to_prefix",
    "extract_determining_strings",
    "ground",
    "effective_universe",
    "dictator",
    "unanimity",
    "majority",
    "q_complement",
    "threshold_game",
    "a_game",
    "mask_to_set",
    "set_to_mask",
]


class Verdict(enum.Enum):
    WINNING = "Winning"
    LOSING = "Losing"
    UNDETERMINED = "Undetermined"

    def __str__(self) -> str:
        return self.value


class GameError(ValueError):
    """An analysis cannot be carried out on the given game."""


class NotTotalError(GameError):
    def __init__(self, detail: str = "") -> None:
        super().__init__("game not total" + (f": {detail}" if detail else ""))


def set_to_mask(players: Iterable[int]) -> int:
    m = 0
    for i in players:
        m |= 1 << i
    return m


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _verdict(win: bool) -> Verdict:
    return Verdict.WINNING if win else Verdict.LOSING


@dataclass(frozen=True)
class TableGame:
    """Winning coalitions of the universe ``{0, ..., n-1}``, stored as bitmasks."""

    n: int
    winning: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("universe size must be non-negative")
        w = frozenset(self.winning)
        limit = 1 << self.n
        for m in w:
            if not 0 <= m < limit:
                raise GameError(f"player outside universe: coalition {sorted(mask_to_set(m))} in n={self.n}")
        object.__setattr__(self, "winning", w)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> TableGame:
        masks = []
        for s in sets:
            s = list(s)
            if any(not 0 <= i < n for i in s):
                raise GameError(f"player outside universe: {sorted(s)} in n={n}")
            masks.append(set_to_mask(s))
        return cls(n, frozenset(masks))

    @classmethod
    def from_predicate(cls, n: int, pred) -> TableGame:
        """Table of all subsets (as frozensets) for which ``pred`` holds."""
        return cls(n, frozenset(m for m in range(1 << n) if pred(mask_to_set(m))))

    @cached_property
    def table(self) -> bytes:
        t = bytearray(1 << self.n)
        for m in self.winning:
            t[m] = 1
        return bytes(t)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def winning_sets(self) -> list[frozenset[int]]:
        return [mask_to_set(m) for m in sorted(self.winning)]

    def evaluate(self, c: Coalition) -> Verdict:
        return _verdict(c.mask(self.n) in self.winning)


@dataclass(frozen=True)
class CarrierGame:
    """A game with a finite carrier: T wins iff T intersected with the carrier wins."""

    carrier: frozenset[int]
    winning_on_carrier: frozenset[frozenset[int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        carrier = frozenset(self.carrier)
        if any(not isinstance(i, int) or i < 0 for i in carrier):
            raise ValueError("carrier players must be non-negative integers")
        woc = frozenset(frozenset(s) for s in self.winning_on_carrier)
        for s in woc:
            if not s <= carrier:
                raise GameError(f"coalition {sorted(s)} is not a subset of the carrier {sorted(carrier)}")
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "winning_on_carrier", woc)

    @property
    def universe(self) -> int:
        return max(self.carrier) + 1 if self.carrier else 0

    def evaluate(self, c: Coalition) -> Verdict:
        return _verdict(frozenset(i for i in self.carrier if i in c) in self.winning_on_carrier)


@dataclass(frozen=True)
class PrefixGame:
    """Determining-string representation: losing strings ``t0``, winning strings ``t1``."""

    t0: frozenset[str] = field(default_factory=frozenset)
    t1: frozenset[str] = field(default_factory=frozenset)
    depth: int | None = None

    def __post_init__(self) -> None:
        t0 = frozenset(check_bits(s) for s in self.t0)
        t1 = frozenset(check_bits(s) for s in self.t1)
        longest = max((len(s) for s in t0 | t1), default=0)
        depth = longest if self.depth is None else self.depth
        if depth < 0:
            raise ValueError("depth must be non-negative")
        object.__setattr__(self, "t0", t0)
        object.__setattr__(self, "t1", t1)
        object.__setattr__(self, "depth", depth)

    def evaluate(self, c: Coalition) -> Verdict:
        seg = c.initial_segment(self.depth)
        for k in range(self.depth + 1):
            s = seg[:k]
            if s in self.t1:
                return Verdict.WINNING
            if s in self.t0:
                return Verdict.LOSING
        return Verdict.UNDETERMINED

    def evaluate_string(self, bits: str) -> Verdict:
        """Verdict of any coalition extending ``bits`` (``len(bits) >= depth``)."""
        for k in range(min(len(bits), self.depth) + 1):
            s = bits[:k]
            if s in self.t1:
                return Verdict.WINNING
            if s in self.t0:
                return Verdict.LOSING
        return Verdict.UNDETERMINED


Game = Union[TableGame, CarrierGame, PrefixGame]


def _as_game(g) -> Game:
    # enumeration results carry their game alongside the trace
    if isinstance(g, (TableGame, CarrierGame, PrefixGame)):
        return g
    inner = getattr(g, "game", None)
    if isinstance(inner, PrefixGame):
        return inner
    raise TypeError(f"not a game: {type(g).__name__}")


def eval_table(g: TableGame, s: Iterable[int]) -> Verdict:
    s = frozenset(s)
    bad = sorted(i for i in s if not 0 <= i < g.n)
    if bad:
        raise GameError(f"player outside universe: {bad} not in range({g.n})")
    return _verdict(set_to_mask(s) in g.winning)


def eval_carrier(g: CarrierGame, c: Coalition) -> Verdict:
    return g.evaluate(c)


def eval_prefix(g: PrefixGame, c: Coalition) -> Verdict:
    """Scan the initial segments of ``c`` of length 0..depth against t1 and t0."""
    return g.evaluate(c)


def evaluate(g, c: Coalition) -> Verdict:
    return _as_game(g).evaluate(c)


@dataclass(frozen=True)
class PrefixValidation:
    well_formed: bool
    total: bool
    violations: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"well_formed": self.well_formed, "total": self.total, "violations": list(self.violations)}


def validate_prefix_game(g: PrefixGame) -> PrefixValidation:
    """Check disjointness, cross-incomparability of t0/t1, and totality.

    Totality means every string of length ``depth`` extends a member of
    ``t0 | t1``.  Unbarred regions are reported by their shortest prefix
    ``s`` as ``"unbarred: s*"``.
    """
    violations: list[str] = []
    well_formed = True
    for s in sorted(g.t0 | g.t1, key=lambda x: (len(x), x)):
        if len(s) > g.depth:
            well_formed = False
            violations.append(f"too long: {s!r} exceeds depth {g.depth}")
    for s in sorted(g.t0 & g.t1):
        well_formed = False
        violations.append(f"overlap: {s!r} in both t0 and t1")
    for a in sorted(g.t0):
        for k in range(len(a) + 1):
            b = a[:k]
            if b in g.t1 and b != a:
                well_formed = False
                violations.append(f"conflict: t0 string {a!r} extends t1 string {b!r}")
    for a in sorted(g.t1):
        for k in range(len(a)):
            b = a[:k]
            if b in g.t0:
                well_formed = False
                violations.append(f"conflict: t1 string {a!r} extends t0 string {b!r}")

    members = g.t0 | g.t1
    prefixes = {s[:k] for s in members for k in range(len(s) + 1)}
    total = True
    stack = [""]
    while stack:
        s = stack.pop()
        if s in members:
            continue
        if s not in prefixes or len(s) >= g.depth:
            total = False
            violations.append(f"unbarred: {s!r}*")
            continue
        stack.append(s + "1")
        stack.append(s + "0")
    return PrefixValidation(well_formed, total, tuple(violations))


def effective_universe(g) -> int:
    """Smallest universe on which ``g`` is decided: n, max(carrier)+1, or depth."""
    g = _as_game(g)
    if isinstance(g, TableGame):
        return g.n
    if isinstance(g, CarrierGame):
        return g.universe
    return g.depth


def ground(g, universe: int | None = None) -> TableGame:
    """The table of ``g`` restricted to ``{0, ..., u-1}``.

    ``u`` defaults to :func:`effective_universe`; a larger universe adds
    players that never change a verdict.  Raises :class:`NotTotalError` for
    prefix games that leave some coalition undetermined.
    """
    g = _as_game(g)
    base = effective_universe(g)
    u = base if universe is None else universe
    if u < base:
        raise GameError(f"universe {u} is smaller than the game's effective universe {base}")
    if isinstance(g, TableGame):
        if u == g.n:
            return g
        low = g.full
        return TableGame(u, frozenset(m for m in range(1 << u) if (m & low) in g.winning))
    if isinstance(g, CarrierGame):
        cmask = set_to_mask(g.carrier)
        wins = {set_to_mask(s) for s in g.winning_on_carrier}
        return TableGame(u, frozenset(m for m in range(1 << u) if (m & cmask) in wins))
    report = validate_prefix_game(g)
    if not report.well_formed:
        raise GameError("prefix game is not well formed: " + "; ".join(report.violations))
    if not report.total:
        raise NotTotalError("; ".join(v for v in report.violations if v.startswith("unbarred")))
    d = g.depth
    low_wins = frozenset(
        m for m in range(1 << d) if g.evaluate_string(_mask_bits(m, d)) is Verdict.WINNING
    )
    low = (1 << d) - 1
    return TableGame(u, frozenset(m for m in range(1 << u) if (m & low) in low_wins))


def _mask_bits(mask: int, length: int) -> str:
    return "".join("1" if mask >> i & 1 else "0" for i in range(length))


def carrier_to_prefix(g: CarrierGame) -> PrefixGame:
    """All strings of length max(carrier)+1, split by the verdict of the set they encode."""
    k = g.universe
    t0, t1 = set(), set()
    for bits in itertools.product("01", repeat=k):
        s = "".join(bits)
        (t1 if g.evaluate(Coalition(s, 0)) is Verdict.WINNING else t0).add(s)
    return PrefixGame(frozenset(t0), frozenset(t1), k)


def extract_determining_strings(g: TableGame) -> PrefixGame:
    """Minimal antichain of determining strings of a table game (depth n)."""
    t0, t1 = kernels.determining_strings(g.table, g.n)
    return PrefixGame(frozenset(t0), frozenset(t1), g.n)


# --- named games -----------------------------------------------------------


def dictator(i0: int) -> CarrierGame:
    if i0 < 0:
        raise ValueError("player index must be non-negative")
    return CarrierGame(frozenset({i0}), frozenset({frozenset({i0})}))


def unanimity(n: int) -> TableGame:
    if n < 1:
        raise ValueError("unanimity needs n >= 1")
    return TableGame(n, frozenset({(1 << n) - 1}))


def majority(n: int) -> TableGame:
    """Strict majority: coalitions with more than n/2 members win."""
    if n < 1:
        raise ValueError("majority needs n >= 1")
    return TableGame(n, frozenset(m for m in range(1 << n) if 2 * bin(m).count("1") > n))


def q_complement(q: int, n: int) -> TableGame:
    """S wins iff fewer than q players of the universe are missing from S."""
    if q < 1:
        raise ValueError(f"q must be at least 1, got {q}")
    if q > n:
        raise ValueError(f"q must not exceed the universe size {n}, got {q}")
    return TableGame(n, frozenset(m for m in range(1 << n) if n - bin(m).count("1") < q))


def threshold_game(k: int) -> CarrierGame:
    """Carrier {0..k-1}; T wins iff it holds at least k-1 carrier members."""
    if k < 2:
        raise ValueError(f"threshold game needs k >= 2, got {k}")
    carrier = frozenset(range(k))
    wins = frozenset(
        frozenset(c) for r in (k - 1, k) for c in itertools.combinations(range(k), r)
    )
    return CarrierGame(carrier, wins)


def a_game(n: int) -> TableGame:
    """A = {1..n-1} wins; otherwise S wins iff 0 is in S and S != {0}."""
    if n < 2:
        raise ValueError(f"a_game needs n >= 2, got {n}")
    full = (1 << n) - 1
    a = full ^ 1
    return TableGame(n, frozenset(m for m in range(1 << n) if m == a or (m & 1 and m != 1)))
