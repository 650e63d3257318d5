"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 numerical invariant violation.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import re
import sys
from typing import Sequence

from . import classical, game, sweep
from .classical import ClassicalMove, Game, MixedProfile, PennyFace
from .entanglement import DEFAULT_TOL_MAX, DEFAULT_TOL_SEP
from .errors import NumericalError
from .game import ClassicalMixed, ClassicalPure, Quantum
from .quantum import UnitaryParams

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


_PI_RE = re.compile(r"^([+-]?\d*\.?\d*)\*?pi(?:/(\d+\.?\d*))?$")


def parse_angle(text: str) -> float:
    """Float, or a multiple of pi such as ``pi/2``, ``-3pi/4``, ``2*pi``."""
    text = text.strip().lower()
    m = _PI_RE.match(text)
    if m:
        coef = m.group(1)
        coef = 1.0 if coef in ("", "+") else -1.0 if coef == "-" else float(coef)
        denom = float(m.group(2)) if m.group(2) else 1.0
        return coef * math.pi / denom
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"cannot parse angle {text!r}") from None


def _parse_probability(text: str) -> float:
    try:
        p = float(text)
    except ValueError:
        raise UsageError(f"cannot parse probability {text!r}") from None
    if not 0.0 <= p <= 1.0:
        raise UsageError(f"probability {p} outside [0, 1]")
    return p


def parse_p_strategy(text: str) -> ClassicalPure | ClassicalMixed:
    kind, _, arg = text.partition(":")
    if kind == "pure" and arg in ("flip", "noflip"):
        return ClassicalPure(ClassicalMove.FLIP if arg == "flip" else ClassicalMove.NO_FLIP)
    if kind == "mixed" and arg:
        return ClassicalMixed(_parse_probability(arg))
    raise UsageError(f"bad P strategy {text!r}; use pure:flip, pure:noflip or mixed:<p>")


def parse_q_strategy(text: str) -> Quantum:
    if text == "hadamard":
        return game.HADAMARD_STRATEGY
    kind, _, arg = text.partition(":")
    parts = arg.split(",")
    if kind != "quantum" or len(parts) != 6:
        raise UsageError(f"bad Q strategy {text!r}; use hadamard or quantum:t1,f1,f1p,t2,f2,f2p")
    a = [parse_angle(x) for x in parts]
    return Quantum(UnitaryParams(*a[:3]), UnitaryParams(*a[3:]))


def _q_fixed(q: Quantum) -> dict[str, float]:
    return {
        "theta1": q.first.theta, "phi1": q.first.phi, "phi1_prime": q.first.phi_prime,
        "theta2": q.second.theta, "phi2": q.second.phi, "phi2_prime": q.second.phi_prime,
    }


@contextlib.contextmanager
def _output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _fmt_num(x: float) -> str:
    return f"{x + 0.0:g}"  # + 0.0 turns -0 into 0


# subcommands -------------------------------------------------------------


def cmd_play(args) -> int:
    rec = game.play(args.p_strategy, args.q_strategy, args.tol_sep, args.tol_max)
    print(rec.summary())
    return EXIT_OK


def cmd_sweep_p(args) -> int:
    cfg = sweep.SweepConfig(
        "p", args.start, args.stop, args.steps, fixed=_q_fixed(args.q_strategy),
        tol_sep=args.tol_sep, tol_max=args.tol_max,
    )
    rows = sweep.sweep_p(cfg)
    sweep.check_rows(rows, args.tol_sep, args.tol_max)
    with _output(args.out) as fh:
        sweep.write_csv(rows, fh)
    return EXIT_OK


def cmd_sweep_angles(args) -> int:
    fixed = {}
    variable = args.variable
    if args.figure == "b" and variable is None:
        variable = "theta2"
    variable = variable or "theta1"
    for item in args.set:
        name, sep, value = item.partition("=")
        if not sep or name not in sweep.PARAMS:
            raise UsageError(f"bad --set {item!r}; expected NAME=VALUE with NAME in {', '.join(sweep.PARAMS)}")
        fixed[name] = _parse_probability(value) if name == "p" else parse_angle(value)
    if args.p is not None:
        fixed["p"] = args.p
    cfg = sweep.SweepConfig(
        variable, parse_angle(args.start), parse_angle(args.stop), args.steps, fixed=fixed,
        tol_sep=args.tol_sep, tol_max=args.tol_max,
    )
    rows = sweep.sweep_angle(cfg)
    sweep.check_rows(rows, args.tol_sep, args.tol_max)
    with _output(args.out) as fh:
        sweep.write_csv(rows, fh)
    return EXIT_OK


def cmd_audit(args) -> int:
    res = sweep.audit_p_half(args.n, args.seed, args.p, args.tol_sep, args.tol_max)
    sweep.check_rows(res.rows, args.tol_sep, args.tol_max)
    if args.out:
        with _output(args.out) as fh:
            sweep.write_csv(res.rows, fh, seed=args.seed)
    w1, w2 = res.worst.first, res.worst.second
    print(f"draws: {args.n} (seed={args.seed}, rng={sweep.RNG_NAME}, p={args.p:g})")
    print(f"max concurrence: {res.max_concurrence:.12g}")
    print(
        "worst strategy: "
        f"quantum:{w1.theta:.12g},{w1.phi:.12g},{w1.phi_prime:.12g},"
        f"{w2.theta:.12g},{w2.phi:.12g},{w2.phi_prime:.12g}"
    )
    print(f"P wins every draw: {'yes' if res.all_p_wins else 'no'}")
    return EXIT_OK


def _parse_profile(game_kind: Game, text: str) -> MixedProfile:
    try:
        nums = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse profile {text!r}") from None
    if game_kind is Game.MATCHING_PENNIES and len(nums) == 2:
        return MixedProfile(nums[0], nums[1])
    if game_kind is Game.PQ_PENNY_FLIP and len(nums) == 5:
        return MixedProfile(nums[0], tuple(nums[1:]))
    raise UsageError(
        "matching-pennies takes P_head,Q_head; pq-penny-flip takes P_flip,Q_NN,Q_NF,Q_FN,Q_FF"
    )


def _action_name(action) -> str:
    if isinstance(action, tuple):
        return "".join(m.value for m in action)
    return action.name


def cmd_nash(args) -> int:
    game_kind = Game(args.game)
    try:
        profile = _parse_profile(game_kind, args.profile)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = classical.verify_nash(game_kind, profile, args.tol)
    pay = f"({_fmt_num(res.payoff[0])},{_fmt_num(res.payoff[1])})"
    if res.is_equilibrium:
        print(f"equilibrium: yes, payoff {pay}")
    else:
        d = res.best_deviation
        print(
            f"equilibrium: no, payoff {pay}; best deviation: {d.player.value} -> "
            f"{_action_name(d.action)} (gain {_fmt_num(d.gain)})"
        )
    return EXIT_OK


_MOVES = {"flip": ClassicalMove.FLIP, "noflip": ClassicalMove.NO_FLIP, "f": ClassicalMove.FLIP, "n": ClassicalMove.NO_FLIP}


def _move(text: str) -> ClassicalMove:
    try:
        return _MOVES[text.strip().lower()]
    except KeyError:
        raise UsageError(f"bad move {text!r}; use flip or noflip") from None


def cmd_reduce(args) -> int:
    if args.all:
        cases = [
            (init, q, p)
            for init in ("10", "01")
            for q in classical.Q_SEQUENCES
            for p in (ClassicalMove.NO_FLIP, ClassicalMove.FLIP)
        ]
    else:
        q_parts = args.q_moves.split(",")
        if len(q_parts) != 2:
            raise UsageError("--q-moves takes two moves, e.g. flip,noflip")
        cases = [(args.initial, (_move(q_parts[0]), _move(q_parts[1])), _move(args.p_move))]
    print("initial,q_moves,p_move,final,winner")
    for init, q, p in cases:
        final, outcome = classical.classical_reduction(init, q, p)
        print(f"|{init}>,{q[0].value}{q[1].value},{p.value},|{final}>,{outcome.value}")
    return EXIT_OK


def cmd_circuit(args) -> int:
    lines = game.game_to_circuit(args.p, args.q_strategy)
    with _output(args.out) as fh:
        game.write_circuit(lines, fh)
    return EXIT_OK


def cmd_meyer(args) -> int:
    moves = list(ClassicalMove) if args.p_move == "both" else [_move(args.p_move)]
    for mv in moves:
        psi, winner = game.play_meyer(mv)
        heads = abs(psi[0]) ** 2
        print(f"P {mv.name.lower()}: P(head) = {heads:.12g}, winner {winner}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qpennyflip", description="Entangled quantum penny flip game simulator.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def tolerances(sp):
        sp.add_argument("--tol-sep", type=float, default=DEFAULT_TOL_SEP, help="concurrence below this is separable")
        sp.add_argument("--tol-max", type=float, default=DEFAULT_TOL_MAX, help="concurrence above 1 - this is maximal")

    def q_option(sp):
        sp.add_argument(
            "--q-strategy", type=parse_q_strategy, default=game.HADAMARD_STRATEGY,
            help="hadamard (default) or quantum:t1,f1,f1p,t2,f2,f2p; angles accept pi/2 style",
        )

    sp = sub.add_parser("play", help="play one entangled game and print the record")
    sp.add_argument("--p-strategy", type=parse_p_strategy, default=ClassicalMixed(0.5),
                    help="pure:flip | pure:noflip | mixed:<p> (default mixed:0.5)")
    q_option(sp)
    tolerances(sp)
    sp.set_defaults(func=cmd_play)

    sp = sub.add_parser("sweep-p", help="concurrence vs P's flip probability (CSV)")
    sp.add_argument("--steps", type=int, default=101)
    sp.add_argument("--start", type=float, default=0.0)
    sp.add_argument("--stop", type=float, default=1.0)
    sp.add_argument("--out", default=None, help="CSV path (default stdout)")
    q_option(sp)
    tolerances(sp)
    sp.set_defaults(func=cmd_sweep_p)

    sp = sub.add_parser(
        "sweep-angles",
        help="concurrence vs one of Q's angles (CSV)",
        description="Defaults: theta1 = theta2 = 0, phi1 = phi2 = pi/2, phi1' = phi2' = 0, p = 0.5.",
    )
    sp.add_argument("--variable", choices=sweep.ANGLES, default=None)
    sp.add_argument("--figure", choices=("a", "b"), default="a",
                    help="a: sweep theta1 (default); b: sweep theta2")
    sp.add_argument("--start", default="0")
    sp.add_argument("--stop", default="2pi")
    sp.add_argument("--steps", type=int, default=101)
    sp.add_argument("--p", type=_parse_probability, default=None)
    sp.add_argument("--set", action="append", default=[], metavar="NAME=VALUE",
                    help="override a fixed parameter; repeatable")
    sp.add_argument("--out", default=None)
    tolerances(sp)
    sp.set_defaults(func=cmd_sweep_angles)

    sp = sub.add_parser(
        "audit",
        help="random Q strategies against P's mixed strategy",
        description="Angles are drawn uniformly from [0, 2pi) for each of theta, phi, phi' "
        "(box sampling over the parameter family, not Haar measure) with numpy's PCG64.",
    )
    sp.add_argument("--n", type=int, default=500)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--p", type=_parse_probability, default=0.5)
    sp.add_argument("--out", default=None, help="optional CSV of every draw")
    tolerances(sp)
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("nash", help="verify a mixed-strategy Nash equilibrium of a classical game")
    sp.add_argument("--game", choices=[g.value for g in Game], required=True)
    sp.add_argument("--profile", required=True,
                    help="matching-pennies: P_head,Q_head; pq-penny-flip: P_flip,Q_NN,Q_NF,Q_FN,Q_FF")
    sp.add_argument("--tol", type=float, default=classical.DEFAULT_NASH_TOL)
    sp.set_defaults(func=cmd_nash)

    sp = sub.add_parser("reduce", help="the game with entanglement removed and flips only")
    sp.add_argument("--initial", choices=("10", "01"), default="10")
    sp.add_argument("--q-moves", default="noflip,noflip")
    sp.add_argument("--p-move", default="noflip")
    sp.add_argument("--all", action="store_true", help="enumerate all 16 cases")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("circuit", help="export the gate list for one game")
    sp.add_argument("--p", type=_parse_probability, default=0.5)
    sp.add_argument("--out", default=None)
    q_option(sp)
    sp.set_defaults(func=cmd_circuit)

    sp = sub.add_parser("meyer", help="Meyer's single-penny quantum game")
    sp.add_argument("--p-move", default="both", help="flip, noflip or both")
    sp.set_defaults(func=cmd_meyer)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"numerical invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
