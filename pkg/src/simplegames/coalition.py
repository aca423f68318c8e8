"""Coalitions of players in N = {0, 1, 2, ...} and binary strings.

A *bit string* is a plain ``str`` over ``"0"``/``"1"``; position ``j`` holds
the membership bit of player ``j``.  A :class:`Coalition` is an eventually
constant subset of N, stored as a finite prefix plus a tail bit that gives
the membership of every player at or beyond the prefix.  Finite sets have
tail 0, cofinite sets tail 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "Coalition",
    "FinitePermutation",
    "CardinalityClass",
    "check_bits",
    "initial_segment",
    "extends",
    "concat",
    "permute",
    "cardinality_class",
    "parse_coalition",
    "bits_to_set",
    "set_to_bits",
]

_BITS = re.compile(r"[01]*\Z")


def check_bits(s: str) -> str:
    """Return ``s`` unchanged if it is a 0/1 string, else raise ValueError."""
    if not isinstance(s, str) or not _BITS.match(s):
        raise ValueError(f"not a bit string: {s!r}")
    return s


def bits_to_set(bits: str) -> frozenset[int]:
    return frozenset(i for i, b in enumerate(bits) if b == "1")


def set_to_bits(players: Iterable[int], length: int) -> str:
    members = set(players)
    return "".join("1" if i in members else "0" for i in range(length))


@dataclass(frozen=True)
class Coalition:
    """An eventually constant coalition.

    Construct with ``Coalition(prefix, tail)``; the prefix is trimmed so that
    it never ends with a bit equal to the tail, which makes ``==`` and
    ``hash`` structural.
    """

    prefix: str = ""
    tail: int = 0

    def __post_init__(self) -> None:
        check_bits(self.prefix)
        if self.tail not in (0, 1):
            raise ValueError(f"tail must be 0 or 1, got {self.tail!r}")
        t = str(self.tail)
        object.__setattr__(self, "prefix", self.prefix.rstrip(t))

    @classmethod
    def finite(cls, players: Iterable[int]) -> Coalition:
        members = _check_players(players)
        length = max(members) + 1 if members else 0
        return cls(set_to_bits(members, length), 0)

    @classmethod
    def cofinite(cls, missing: Iterable[int]) -> Coalition:
        """The coalition N minus ``missing``."""
        absent = _check_players(missing)
        length = max(absent) + 1 if absent else 0
        return cls("".join("0" if i in absent else "1" for i in range(length)), 1)

    @classmethod
    def everyone(cls) -> Coalition:
        return cls("", 1)

    @classmethod
    def empty(cls) -> Coalition:
        return cls("", 0)

    def __contains__(self, player: int) -> bool:
        if player < 0:
            return False
        if player < len(self.prefix):
            return self.prefix[player] == "1"
        return self.tail == 1

    @property
    def is_finite(self) -> bool:
        return self.tail == 0

    def members_below(self, k: int) -> frozenset[int]:
        """Members with index < k, i.e. the k-initial segment as a set."""
        return bits_to_set(self.initial_segment(k))

    def initial_segment(self, k: int) -> str:
        if k < 0:
            raise ValueError("segment length must be non-negative")
        p = self.prefix
        if k <= len(p):
            return p[:k]
        return p + str(self.tail) * (k - len(p))

    def complement(self) -> Coalition:
        flipped = self.prefix.translate(_FLIP)
        return Coalition(flipped, 1 - self.tail)

    def intersection(self, other: Coalition) -> Coalition:
        m = max(len(self.prefix), len(other.prefix))
        a, b = self.initial_segment(m), other.initial_segment(m)
        bits = "".join("1" if x == y == "1" else "0" for x, y in zip(a, b))
        return Coalition(bits, self.tail & other.tail)

    def union(self, other: Coalition) -> Coalition:
        return self.complement().intersection(other.complement()).complement()

    def issubset(self, other: Coalition) -> bool:
        return self.intersection(other) == self

    def mask(self, universe: int) -> int:
        """Bitmask of the members below ``universe`` (bit i = player i)."""
        seg = self.initial_segment(universe)
        return int(seg[::-1], 2) if seg else 0

    def __str__(self) -> str:
        return f"{self.prefix}+{self.tail}"

    def describe(self) -> str:
        """Set syntax: ``{0,2,4}`` for finite sets, ``co{1}`` for cofinite."""
        if self.tail == 0:
            inner = sorted(bits_to_set(self.prefix))
            return "{" + ",".join(map(str, inner)) + "}"
        missing = [i for i, b in enumerate(self.prefix) if b == "0"]
        return "co{" + ",".join(map(str, missing)) + "}"


_FLIP = str.maketrans("01", "10")


def _check_players(players: Iterable[int]) -> frozenset[int]:
    members = frozenset(players)
    for i in members:
        if not isinstance(i, int) or isinstance(i, bool) or i < 0:
            raise ValueError(f"player indices must be non-negative integers, got {i!r}")
    return members


class CardinalityClass(NamedTuple):
    """``kind`` is ``"finite"`` (count = size) or ``"cofinite"`` (count = size of complement)."""

    kind: str
    count: int


@dataclass(frozen=True)
class FinitePermutation:
    """A bijection of {0,...,m-1}, extended by the identity beyond m."""

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        m = tuple(self.mapping)
        if sorted(m) != list(range(len(m))):
            raise ValueError(f"not a bijection on range({len(m)}): {m}")
        object.__setattr__(self, "mapping", m)

    @classmethod
    def identity(cls, m: int = 0) -> FinitePermutation:
        return cls(tuple(range(m)))

    @classmethod
    def swap(cls, i: int, j: int) -> FinitePermutation:
        m = list(range(max(i, j) + 1))
        m[i], m[j] = m[j], m[i]
        return cls(tuple(m))

    def __call__(self, player: int) -> int:
        return self.mapping[player] if player < len(self.mapping) else player

    def inverse(self) -> FinitePermutation:
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return FinitePermutation(tuple(inv))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, j in enumerate(self.mapping) if i != j)

    def to_json(self) -> list[int]:
        return list(self.mapping)


def initial_segment(c: Coalition, k: int) -> str:
    """The length-k string whose j-th bit is 1 iff j is in ``c``."""
    return c.initial_segment(k)


def extends(c: Coalition, t: str) -> bool:
    """True iff ``t`` is an initial segment of ``c``."""
    return c.initial_segment(len(check_bits(t))) == t


def concat(t1: str, t2: str) -> str:
    return check_bits(t1) + check_bits(t2)


def permute(c: Coalition, p: FinitePermutation) -> Coalition:
    """The image {p(i) : i in c}.  The tail is untouched since p fixes large players."""
    m = max(len(p.mapping), len(c.prefix))
    bits = ["0"] * m
    for i in range(m):
        if i in c:
            bits[p(i)] = "1"
    return Coalition("".join(bits), c.tail)


def cardinality_class(c: Coalition) -> CardinalityClass:
    if c.tail == 0:
        return CardinalityClass("finite", c.prefix.count("1"))
    return CardinalityClass("cofinite", c.prefix.count("0"))


_SET = re.compile(r"\s*(co)?\{\s*([0-9,\s]*)\}\s*\Z")
_PREFIX = re.compile(r"\s*([01]*)\+([01])\s*\Z")


def parse_coalition(text: str) -> Coalition:
    """Parse ``"10101+0"``, ``"{0,2,4}"`` or ``"co{0}"``."""
    m = _PREFIX.match(text)
    if m:
        return Coalition(m.group(1), int(m.group(2)))
    m = _SET.match(text)
    if m:
        body = m.group(2).strip()
        items = [s.strip() for s in body.split(",")] if body else []
        if any(not s.isdigit() for s in items):
            raise ValueError(f"malformed coalition: {text!r}")
        players = [int(s) for s in items]
        return Coalition.cofinite(players) if m.group(1) else Coalition.finite(players)
    raise ValueError(f"malformed coalition: {text!r}")
