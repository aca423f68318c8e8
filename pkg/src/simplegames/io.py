"""JSON formats for games and profiles.

Games::

    {"type": "table", "n": 4, "winning": [[0, 1], [1, 2, 3]]}
    {"type": "carrier", "carrier": [0, 1, 2], "winning_on_carrier": [[0, 1]]}
    {"type": "prefix", "depth": 3, "t0": ["00"], "t1": ["1", "01"]}
    {"type": "named", "name": "threshold", "params": {"k": 3}}
    {"type": "enum_construction", "entries": [[2, 1], [0, 0]]}

Profiles::

    {"alternatives": ["a", "b"], "players": {"0": [["a", "b"]]}}
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from simplegames import games as G
from simplegames.enumeration import EnumConstruction, enum_construction
from simplegames.social_choice import Profile

__all__ = [
    "ParseError",
    "NAMED_GAMES",
    "game_from_json",
    "game_to_json",
    "load_game",
    "load_profile",
    "profile_from_json",
    "dumps",
]


class ParseError(ValueError):
    """Input that does not describe a game or profile."""


NAMED_GAMES = {
    "dictator": (G.dictator, ("player",)),
    "unanimity": (G.unanimity, ("n",)),
    "majority": (G.majority, ("n",)),
    "q_complement": (G.q_complement, ("q", "n")),
    "threshold": (G.threshold_game, ("k",)),
    "a_game": (G.a_game, ("n",)),
}


def _field(data: Mapping, key: str, kind) -> Any:
    if key not in data:
        raise ParseError(f"missing field {key!r}")
    value = data[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise ParseError(f"field {key!r} must be an integer")
    if kind is list and not isinstance(value, list):
        raise ParseError(f"field {key!r} must be a list")
    return value


def _int_sets(rows, key: str) -> list[list[int]]:
    for row in rows:
        if not isinstance(row, list) or any(not isinstance(i, int) or isinstance(i, bool) or i < 0 for i in row):
            raise ParseError(f"field {key!r} must hold lists of non-negative integers")
    return rows


def game_from_json(data: Any):
    """Build a game from parsed JSON; enum constructions come back whole."""
    if not isinstance(data, dict):
        raise ParseError("game description must be a JSON object")
    kind = data.get("type")
    try:
        if kind == "table":
            n = _field(data, "n", int)
            rows = _int_sets(_field(data, "winning", list), "winning")
            if any(i >= n for row in rows for i in row):
                raise ParseError(f"inconsistent universe sizes: a winning coalition names a player >= n={n}")
            return G.TableGame.from_sets(n, rows)
        if kind == "carrier":
            carrier = _int_sets([_field(data, "carrier", list)], "carrier")[0]
            rows = _int_sets(_field(data, "winning_on_carrier", list), "winning_on_carrier")
            if any(not set(row) <= set(carrier) for row in rows):
                raise ParseError("inconsistent universe sizes: a winning coalition leaves the carrier")
            return G.CarrierGame(frozenset(carrier), frozenset(frozenset(r) for r in rows))
        if kind == "prefix":
            t0 = _field(data, "t0", list)
            t1 = _field(data, "t1", list)
            depth = data.get("depth")
            if depth is not None and (not isinstance(depth, int) or isinstance(depth, bool)):
                raise ParseError("field 'depth' must be an integer")
            if any(not isinstance(s, str) for s in t0 + t1):
                raise ParseError("determining strings must be strings")
            if depth is not None and any(len(s) > depth for s in t0 + t1):
                raise ParseError(f"inconsistent universe sizes: a determining string is longer than depth {depth}")
            return G.PrefixGame(frozenset(t0), frozenset(t1), depth)
        if kind == "named":
            name = data.get("name")
            if name not in NAMED_GAMES:
                raise ParseError(f"unknown game name: {name!r}")
            ctor, keys = NAMED_GAMES[name]
            params = data.get("params", {})
            if not isinstance(params, dict):
                raise ParseError("field 'params' must be an object")
            return ctor(*(_field(params, k, int) for k in keys))
        if kind == "enum_construction":
            entries = _field(data, "entries", list)
            if any(not isinstance(e, list) or len(e) != 2 for e in entries):
                raise ParseError("entries must be [k, v] pairs")
            return enum_construction([tuple(e) for e in entries])
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"invalid {kind} game: {exc}") from None
    raise ParseError(f"unknown game type: {kind!r}")


def game_to_json(g) -> dict:
    """Concrete JSON form; ``game_from_json(game_to_json(g)) == g``."""
    if isinstance(g, EnumConstruction):
        return {"type": "enum_construction", "entries": [list(e) for e in g.entries]}
    if isinstance(g, G.TableGame):
        return {"type": "table", "n": g.n, "winning": [sorted(s) for s in g.winning_sets()]}
    if isinstance(g, G.CarrierGame):
        rows = sorted((sorted(s) for s in g.winning_on_carrier), key=lambda r: (len(r), r))
        return {"type": "carrier", "carrier": sorted(g.carrier), "winning_on_carrier": rows}
    if isinstance(g, G.PrefixGame):
        key = lambda s: (len(s), s)  # noqa: E731
        return {"type": "prefix", "depth": g.depth, "t0": sorted(g.t0, key=key), "t1": sorted(g.t1, key=key)}
    raise TypeError(f"not a game: {g!r}")


def _parse_text(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None


def load_game(path: str):
    with open(path, encoding="utf-8") as fh:
        return game_from_json(_parse_text(fh.read()))


def profile_from_json(data: Any) -> Profile:
    if not isinstance(data, dict) or "alternatives" not in data:
        raise ParseError("profile must be an object with 'alternatives'")
    if not isinstance(data.get("players", {}), dict):
        raise ParseError("field 'players' must be an object")
    try:
        return Profile.from_json(data)
    except (ValueError, TypeError) as exc:
        raise ParseError(f"invalid profile: {exc}") from None


def load_profile(path: str) -> Profile:
    with open(path, encoding="utf-8") as fh:
        return profile_from_json(_parse_text(fh.read()))


def dumps(obj: Any) -> str:
    """Deterministic JSON: insertion-ordered fields, two-space indent."""
    return json.dumps(obj, indent=2, ensure_ascii=False)
