"""Classical limits: matching pennies, the PQ penny flip, and the bit-flip reduction.

Payoffs are ordered (P, Q) throughout.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import BadInitialState, ProbabilityOutOfRange, ProfileShapeMismatch

DEFAULT_NASH_TOL = 1e-9


class ClassicalMove(enum.Enum):
    NO_FLIP = "N"
    FLIP = "F"


class PennyFace(enum.IntEnum):
    HEAD = 0
    TAIL = 1


class Outcome(enum.Enum):
    Q_WINS = "Q"
    P_WINS = "P"
    DRAW = "DRAW"


class Game(enum.Enum):
    MATCHING_PENNIES = "matching-pennies"
    PQ_PENNY_FLIP = "pq-penny-flip"


class Player(enum.Enum):
    P = "P"
    Q = "Q"


# Q's joint two-move strategies, in the column order NN, NF, FN, FF.
Q_SEQUENCES: tuple[tuple[ClassicalMove, ClassicalMove], ...] = tuple(
    itertools.product((ClassicalMove.NO_FLIP, ClassicalMove.FLIP), repeat=2)
)


@dataclass(frozen=True)
class Payoff:
    p_payoff: int
    q_payoff: int

    def __post_init__(self):
        if self.p_payoff + self.q_payoff != 0:
            raise ValueError(f"payoffs {self.p_payoff}, {self.q_payoff} are not zero-sum")

    def as_tuple(self) -> tuple[int, int]:
        return (self.p_payoff, self.q_payoff)


P_WIN = Payoff(1, -1)
Q_WIN = Payoff(-1, 1)


@dataclass(frozen=True)
class MixedProfile:
    """Mixed strategies of both players.

    ``p`` is P's probability of Head (matching pennies) or of Flip (PQ penny
    flip). ``q`` is Q's probability of Head as a float (matching pennies) or
    four weights over NN, NF, FN, FF (PQ penny flip).
    """

    p: float
    q: float | tuple[float, ...]

    def __post_init__(self):
        probs = [self.p] + (list(self.q) if isinstance(self.q, tuple) else [self.q])
        for x in probs:
            if not 0.0 <= x <= 1.0:
                raise ProbabilityOutOfRange(f"probability {x!r} outside [0, 1]")
        if isinstance(self.q, tuple) and abs(sum(self.q) - 1.0) > 1e-12:
            raise ProbabilityOutOfRange(f"Q's weights sum to {sum(self.q)!r}, not 1")


@dataclass(frozen=True)
class Deviation:
    player: Player
    action: object  # PennyFace, ClassicalMove or a Q move pair
    gain: float


@dataclass(frozen=True)
class NashResult:
    is_equilibrium: bool
    payoff: tuple[float, float]
    best_deviation: Deviation | None = None
    max_gain: float = 0.0


def flip(face: PennyFace, move: ClassicalMove) -> PennyFace:
    return PennyFace(face ^ 1) if move is ClassicalMove.FLIP else face


def matching_pennies_payoff(p_choice: PennyFace, q_choice: PennyFace) -> Payoff:
    return P_WIN if p_choice == q_choice else Q_WIN


def pq_pennyflip_payoff(
    p_action: ClassicalMove, q_actions: tuple[ClassicalMove, ClassicalMove]
) -> Payoff:
    """Penny starts Head; Q, P, Q act in turn; Q wins on a final Head."""
    face = PennyFace.HEAD
    for move in (q_actions[0], p_action, q_actions[1]):
        face = flip(face, move)
    return Q_WIN if face is PennyFace.HEAD else P_WIN


def _pure_actions(game: Game):
    if game is Game.MATCHING_PENNIES:
        faces = (PennyFace.HEAD, PennyFace.TAIL)
        return faces, faces
    return (ClassicalMove.NO_FLIP, ClassicalMove.FLIP), Q_SEQUENCES


def _pure_payoff(game: Game, a_p, a_q) -> Payoff:
    if game is Game.MATCHING_PENNIES:
        return matching_pennies_payoff(a_p, a_q)
    return pq_pennyflip_payoff(a_p, a_q)


def _distributions(game: Game, profile: MixedProfile):
    if game is Game.MATCHING_PENNIES:
        if isinstance(profile.q, tuple):
            raise ProfileShapeMismatch("matching pennies expects Q's Head probability as one number")
        return (profile.p, 1.0 - profile.p), (profile.q, 1.0 - profile.q)
    if not isinstance(profile.q, tuple) or len(profile.q) != 4:
        raise ProfileShapeMismatch("PQ penny flip expects four weights for Q (NN, NF, FN, FF)")
    return (1.0 - profile.p, profile.p), tuple(profile.q)


def _expected(game: Game, dist_p: Sequence[float], dist_q: Sequence[float]) -> tuple[float, float]:
    acts_p, acts_q = _pure_actions(game)
    ep = eq = 0.0
    for a_p, w_p in zip(acts_p, dist_p):
        for a_q, w_q in zip(acts_q, dist_q):
            pay = _pure_payoff(game, a_p, a_q)
            ep += w_p * w_q * pay.p_payoff
            eq += w_p * w_q * pay.q_payoff
    return ep, eq


def expected_payoff(game: Game | str, profile: MixedProfile) -> tuple[float, float]:
    game = Game(game)
    return _expected(game, *_distributions(game, profile))


def verify_nash(game: Game | str, profile: MixedProfile, tol: float = DEFAULT_NASH_TOL) -> NashResult:
    """Check every pure unilateral deviation of both players against ``profile``."""
    game = Game(game)
    dist_p, dist_q = _distributions(game, profile)
    base = _expected(game, dist_p, dist_q)
    acts_p, acts_q = _pure_actions(game)

    best: Deviation | None = None
    for i, a in enumerate(acts_p):
        onehot = [float(j == i) for j in range(len(acts_p))]
        gain = _expected(game, onehot, dist_q)[0] - base[0]
        if best is None or gain > best.gain:
            best = Deviation(Player.P, a, gain)
    for i, a in enumerate(acts_q):
        onehot = [float(j == i) for j in range(len(acts_q))]
        gain = _expected(game, dist_p, onehot)[1] - base[1]
        if gain > best.gain:
            best = Deviation(Player.Q, a, gain)

    if best.gain > tol:
        return NashResult(False, base, best, best.gain)
    return NashResult(True, base, None, max(best.gain, 0.0))


def _parse_bits(initial) -> tuple[int, int]:
    s = "".join(str(b) for b in initial) if not isinstance(initial, str) else initial
    s = s.strip("|>")
    if s not in ("10", "01"):
        raise BadInitialState(f"initial state must be |10> or |01>, got {initial!r}")
    return int(s[0]), int(s[1])


def classical_reduction(
    initial,
    q_moves: tuple[ClassicalMove, ClassicalMove],
    p_move: ClassicalMove,
) -> tuple[str, Outcome]:
    """Play the entangled game with entanglement destroyed and only flips allowed.

    ``initial`` is "10" or "01" (Q's bit first). Returns the final bit string
    and the winner: Q when the two bits agree, P otherwise.
    """
    q_bit, p_bit = _parse_bits(initial)
    q_bit ^= q_moves[0] is ClassicalMove.FLIP
    p_bit ^= p_move is ClassicalMove.FLIP
    q_bit ^= q_moves[1] is ClassicalMove.FLIP
    final = f"{int(q_bit)}{int(p_bit)}"
    return final, Outcome.Q_WINS if q_bit == p_bit else Outcome.P_WINS
