"""Nakamura numbers.

The Nakamura number of a game is the size of the smallest family of winning
coalitions with empty intersection.  Within a finite universe U, a family
has empty intersection exactly when the complements of its members cover U,
so the search is a minimum set cover over complements of winning
coalitions.  The kernel first proves the minimum size by branching on the
lowest player still in the intersection (only inclusion-minimal winning
coalitions are tried there), then walks families in lexicographic order of
their bitmasks to return the least witness of that size.

Games with veto players, or with no winning coalition, get
:data:`INFINITE`, which compares above every integer.

Prefix and carrier games are grounded to their effective universe first.
That loses nothing: every winning coalition W has the winning restriction
W ∩ U, and a family of restrictions has empty intersection iff some family
of originals does, since players outside U can always be dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from simplegames import kernels
from simplegames.games import GameError, ground, mask_to_set

__all__ = ["INFINITE", "NakamuraResult", "nakamura_number", "ceiling_bound"]

INFINITE = math.inf


@dataclass(frozen=True)
class NakamuraResult:
    nu: int | float
    witness: tuple[frozenset[int], ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.nu != INFINITE

    def to_json(self) -> dict:
        return {
            "nu": self.nu if self.is_finite else "infinite",
            "witness": [sorted(s) for s in self.witness],
        }


def nakamura_number(g) -> NakamuraResult:
    t = ground(g)
    if 0 in t.winning:
        raise GameError("the empty coalition is winning; the Nakamura number is undefined")
    k, witness = kernels.min_empty_intersection(sorted(t.winning), t.full)
    if k == 0:
        return NakamuraResult(INFINITE)
    return NakamuraResult(k, tuple(mask_to_set(m) for m in witness))


def ceiling_bound(g) -> int:
    """Smallest winning-coalition size plus one; an upper bound on the Nakamura number."""
    t = ground(g)
    if not t.winning:
        raise GameError("bound undefined: no winning coalition")
    veto = t.full
    for m in t.winning:
        veto &= m
    if veto:
        raise GameError("bound undefined: the game is weak")
    return min(bin(m).count("1") for m in t.winning) + 1
