"""Simple games on the natural numbers: representations, properties, Nakamura numbers."""

from simplegames.coalition import Coalition, FinitePermutation, parse_coalition
from simplegames.games import (
    CarrierGame,
    GameError,
    NotTotalError,
    PrefixGame,
    TableGame,
    Verdict,
    a_game,
    carrier_to_prefix,
    dictator,
    evaluate,
    extract_determining_strings,
    ground,
    majority,
    q_complement,
    threshold_game,
    unanimity,
    validate_prefix_game,
)
from simplegames.kernels import BACKEND
from simplegames.nakamura import INFINITE, ceiling_bound, nakamura_number

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "INFINITE",
    "CarrierGame",
    "Coalition",
    "FinitePermutation",
    "GameError",
    "NotTotalError",
    "PrefixGame",
    "TableGame",
    "Verdict",
    "a_game",
    "carrier_to_prefix",
    "ceiling_bound",
    "dictator",
    "evaluate",
    "extract_determining_strings",
    "ground",
    "majority",
    "nakamura_number",
    "parse_coalition",
    "q_complement",
    "threshold_game",
    "unanimity",
    "validate_prefix_game",
]
