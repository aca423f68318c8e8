"""Command-line front end.

Exit status is 0 on success, 1 when the analysis itself fails (for
instance a prefix game that is not total, or a verification that finds a
violation), and 2 when an input cannot be parsed.
"""

from __future__ import annotations

import argparse
import sys

from simplegames import io
from simplegames.coalition import parse_coalition
from simplegames.enumeration import EnumConstruction, no_finite_carrier_witness
from simplegames.games import GameError, evaluate, extract_determining_strings, ground
from simplegames.nakamura import nakamura_number
from simplegames.properties import analyze
from simplegames.social_choice import core, cycle_profile_witness, dominance, verify_nakamura


class UsageError(Exception):
    pass


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")
    return value


def _game(args):
    return io.load_game(_need(args, "game"))


def _alternatives(args) -> tuple[str, ...]:
    r = _need(args, "alternatives")
    if r < 2:
        raise UsageError("--alternatives must be at least 2")
    return tuple(f"x{i}" for i in range(1, r + 1))


def cmd_analyze(args):
    g = _game(args)
    reports = analyze(g, args.max_support)
    return {"game": io.game_to_json(g), "reports": [r.to_json() for r in reports]}


def cmd_extract(args):
    return io.game_to_json(extract_determining_strings(ground(_game(args))))


def cmd_nakamura(args):
    return nakamura_number(_game(args)).to_json()


def cmd_core(args):
    g = _game(args)
    p = io.load_profile(_need(args, "profile"))
    try:
        d = dominance(g, p.alternatives, p)
    except GameError as exc:
        if str(exc).startswith("inconsistent universe sizes"):
            raise io.ParseError(str(exc)) from None
        raise
    return {"dominance": d.to_json(), "core": core(g, p.alternatives, p)}


def cmd_witness_cycle(args):
    g = _game(args)
    if args.profile is not None and args.alternatives is None:
        alts = io.load_profile(args.profile).alternatives
    else:
        alts = _alternatives(args)
    return cycle_profile_witness(g, alts).to_json()


def cmd_verify_nakamura(args):
    g = _game(args)
    r_max = _need(args, "alternatives")
    if args.mode == "sampled" and args.seed is None:
        raise UsageError("--seed is required for sampled mode")
    report = verify_nakamura(g, r_max, args.mode, args.samples, args.seed or 0)
    out = report.to_json()
    if not report.ok:
        raise _Failed(out)
    return out


def cmd_enum_sim(args):
    g = _game(args)
    if not isinstance(g, EnumConstruction):
        raise UsageError("enum-sim needs a game of type enum_construction")
    out = g.to_json()
    out["carrier_witnesses"] = [w.to_json() for w in no_finite_carrier_witness(g)]
    return out


def cmd_eval(args):
    g = _game(args)
    try:
        c = parse_coalition(_need(args, "coalition"))
    except ValueError as exc:
        raise io.ParseError(str(exc)) from None
    verdict = evaluate(g, c)
    if args.json:
        return {"coalition": str(c), "verdict": str(verdict)}
    return str(verdict)


class _Failed(Exception):
    def __init__(self, payload) -> None:
        super().__init__("verification failed")
        self.payload = payload


COMMANDS = {
    "analyze": cmd_analyze,
    "extract": cmd_extract,
    "nakamura": cmd_nakamura,
    "core": cmd_core,
    "witness-cycle": cmd_witness_cycle,
    "verify-nakamura": cmd_verify_nakamura,
    "enum-sim": cmd_enum_sim,
    "eval": cmd_eval,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplegames", description="Analyze simple games and their cores.")
    parser.add_argument("command", choices=list(COMMANDS))
    parser.add_argument("--game", metavar="FILE")
    parser.add_argument("--profile", metavar="FILE")
    parser.add_argument("--coalition", metavar="STR", help='e.g. "10101+0", "{0,2}", "co{1}"')
    parser.add_argument("--alternatives", type=int, metavar="N")
    parser.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    parser.add_argument("--samples", type=int, default=1000, metavar="N")
    parser.add_argument("--seed", type=int, metavar="N")
    parser.add_argument("--max-support", type=int, default=4, metavar="N")
    parser.add_argument("--json", action="store_true", help="JSON output for eval")
    return parser


def _emit(payload) -> None:
    if isinstance(payload, str):
        print(payload)
    else:
        print(io.dumps(payload))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = COMMANDS[args.command](args)
    except (io.ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return 2
    except _Failed as exc:
        _emit(exc.payload)
        return 1
    except GameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(payload)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
