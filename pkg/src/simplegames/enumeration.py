"""A computable game without a finite carrier, driven by an injected enumeration.

The construction takes a listing of pairs ``(k_s, v_s)`` with distinct
``k_s``; ``v_s`` plays the role of the value a program with index ``k_s``
returns on input ``k_s``.  Lengths grow as ``l_0 = k_0 + 1`` and
``l_s = max(l_{s-1}, k_s + 1)``, and ``F_s`` collects the strings ``a`` of
length ``l_s`` with ``a[k_s] = v_s`` and ``a[k_t] = 1 - v_t`` for every
earlier ``t``.  Members of ``F_s`` go to ``t1`` when ``v_s = 1`` and to
``t0`` otherwise.

A real listing would cover every characteristic index, making the game
total.  A finite listing leaves strings unbarred, so the resulting
:class:`~simplegames.games.PrefixGame` is usually partial; ``total`` on the
result says which case occurred, relative to the injected entries only.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable

from simplegames.coalition import check_bits
from simplegames.games import PrefixGame, validate_prefix_game

__all__ = [
    "PartialEnumeration",
    "TraceStep",
    "EnumConstruction",
    "Membership",
    "CarrierWitness",
    "enum_construction",
    "prefix_membership_decision",
    "no_finite_carrier_witness",
    "reference_set",
]


@dataclass(frozen=True)
class PartialEnumeration:
    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        entries = tuple((int(k), int(v)) for k, v in self.entries)
        seen = set()
        for k, v in entries:
            if k < 0:
                raise ValueError(f"index must be non-negative, got {k}")
            if v not in (0, 1):
                raise ValueError(f"value must be 0 or 1, got {v}")
            if k in seen:
                raise ValueError(f"duplicate index k={k} in enumeration")
            seen.add(k)
        object.__setattr__(self, "entries", entries)


@dataclass(frozen=True)
class TraceStep:
    s: int
    k: int
    v: int
    length: int
    strings: tuple[str, ...]

    def to_json(self) -> dict:
        return {"s": self.s, "k": self.k, "v": self.v, "l": self.length, "F": list(self.strings)}


@dataclass(frozen=True)
class EnumConstruction:
    entries: tuple[tuple[int, int], ...]
    game: PrefixGame
    trace: tuple[TraceStep, ...]
    total: bool

    def to_json(self) -> dict:
        return {
            "entries": [list(e) for e in self.entries],
            "depth": self.game.depth,
            "t0": sorted(self.game.t0),
            "t1": sorted(self.game.t1),
            "total": self.total,
            "totality_note": "relative to the injected entries only",
            "trace": [step.to_json() for step in self.trace],
        }


def _lengths(entries) -> list[int]:
    out = []
    for k, _ in entries:
        out.append(k + 1 if not out else max(out[-1], k + 1))
    return out


def _f_strings(entries, s: int, length: int) -> tuple[str, ...]:
    fixed = {entries[t][0]: 1 - entries[t][1] for t in range(s)}
    fixed[entries[s][0]] = entries[s][1]
    free = [i for i in range(length) if i not in fixed]
    out = []
    for bits in itertools.product("01", repeat=len(free)):
        a = dict(zip(free, bits))
        out.append("".join(a[i] if i in a else str(fixed[i]) for i in range(length)))
    return tuple(out)


def enum_construction(entries: PartialEnumeration | Iterable[tuple[int, int]]) -> EnumConstruction:
    if not isinstance(entries, PartialEnumeration):
        entries = PartialEnumeration(tuple(entries))
    es = entries.entries
    lengths = _lengths(es)
    trace = []
    t0: set[str] = set()
    t1: set[str] = set()
    for s, ((k, v), length) in enumerate(zip(es, lengths)):
        f = _f_strings(es, s, length)
        trace.append(TraceStep(s, k, v, length, f))
        (t1 if v == 1 else t0).update(f)
    game = PrefixGame(frozenset(t0), frozenset(t1), max(lengths, default=0))
    return EnumConstruction(es, game, tuple(trace), validate_prefix_game(game).total)


class Membership(enum.Enum):
    IN_T0 = "InT0"
    IN_T1 = "InT1"
    NOT_IN_F = "NotInF"

    def __str__(self) -> str:
        return self.value


def _satisfies(sigma: str, entries, s: int) -> bool:
    k, v = entries[s]
    if sigma[k] != str(v):
        return False
    return all(sigma[entries[t][0]] == str(1 - entries[t][1]) for t in range(s))


def prefix_membership_decision(construction: EnumConstruction, sigma: str) -> Membership:
    """Decide membership of ``sigma`` by replaying the listing, not by set lookup.

    Walk the lengths until the first ``l_s >= len(sigma)``.  A longer ``l_s``
    rules ``sigma`` out; otherwise test the defining constraints for each
    ``s`` sharing that length.  A listing that runs out before reaching
    ``len(sigma)`` also rules it out (a complete listing would keep going).
    """
    check_bits(sigma)
    es = construction.entries
    lengths = _lengths(es)
    n = len(sigma)
    s = next((i for i, l in enumerate(lengths) if l >= n), None)
    if s is None or lengths[s] > n:
        return Membership.NOT_IN_F
    while s < len(es) and lengths[s] == n:
        if _satisfies(sigma, es, s):
            return Membership.IN_T1 if es[s][1] == 1 else Membership.IN_T0
        s += 1
    return Membership.NOT_IN_F


@dataclass(frozen=True)
class CarrierWitness:
    """``A ∩ l`` extends to a winning and to a losing determining string."""

    length: int
    winning_ext: str
    losing_ext: str

    def to_json(self) -> dict:
        return {"l": self.length, "winning_ext": self.winning_ext, "losing_ext": self.losing_ext}


def reference_set(construction: EnumConstruction, length: int) -> str:
    """First ``length`` bits of A: A(k_t) = 1 - v_t, free positions 0."""
    flip = {k: 1 - v for k, v in construction.entries}
    return "".join(str(flip.get(i, 0)) for i in range(length))


def no_finite_carrier_witness(construction: EnumConstruction) -> list[CarrierWitness]:
    """Lengths l at which ``A ∩ l`` has both a winning and a losing extension.

    Each hit certifies that no subset of ``{0, ..., l-1}`` is a carrier.  An
    empty list means no such length exists up to the construction depth.
    """
    game = construction.game
    out = []
    for l in range(game.depth + 1):
        a = reference_set(construction, l)
        win = sorted((s for s in game.t1 if s.startswith(a)), key=lambda s: (len(s), s))
        lose = sorted((s for s in game.t0 if s.startswith(a)), key=lambda s: (len(s), s))
        if win and lose:
            out.append(CarrierWitness(l, win[0], lose[0]))
    return out
