"""Game protocols: Meyer's single-qubit game and the entangled penny flip."""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import quantum
from .classical import ClassicalMove, Outcome
from .entanglement import (
    DEFAULT_TOL_MAX,
    DEFAULT_TOL_SEP,
    EntanglementClass,
    classify,
    concurrence,
)
from .errors import WrongStrategyKind
from .quantum import HADAMARD_PARAMS, UnitaryParams

MEYER_WIN_TOL = 1e-10


@dataclass(frozen=True)
class ClassicalPure:
    move: ClassicalMove


@dataclass(frozen=True)
class ClassicalMixed:
    p: float

    def __post_init__(self):
        quantum._check_probability(self.p)


@dataclass(frozen=True)
class Quantum:
    first: UnitaryParams
    second: UnitaryParams


Strategy = ClassicalPure | ClassicalMixed | Quantum

HADAMARD_STRATEGY = Quantum(HADAMARD_PARAMS, HADAMARD_PARAMS)

PAYOFFS = {
    Outcome.Q_WINS: (-1.0, 1.0),
    Outcome.P_WINS: (1.0, -1.0),
    Outcome.DRAW: (0.0, 0.0),
}


@dataclass(frozen=True)
class GameRecord:
    initial: np.ndarray
    q_strategy: Quantum
    p_strategy: ClassicalPure | ClassicalMixed
    final_state: np.ndarray
    concurrence: float
    outcome: Outcome
    payoffs: tuple[float, float]  # (P, Q)

    def summary(self) -> str:
        q1, q2 = self.q_strategy.first, self.q_strategy.second
        if isinstance(self.p_strategy, ClassicalMixed):
            p_desc = f"mixed (flip with p={self.p_strategy.p:.12g})"
        else:
            p_desc = f"pure {self.p_strategy.move.name.lower()}"
        lines = [
            f"Q moves: U({q1.theta:.12g},{q1.phi:.12g},{q1.phi_prime:.12g}) then "
            f"U({q2.theta:.12g},{q2.phi:.12g},{q2.phi_prime:.12g})",
            f"P strategy: {p_desc}",
            "final state:",
            np.array2string(self.final_state, precision=6, suppress_small=True),
            f"concurrence: {self.concurrence:.12g}",
            f"outcome: {self.outcome.name}",
            f"payoffs (P, Q): ({self.payoffs[0]:g}, {self.payoffs[1]:g})",
        ]
        return "\n".join(lines)


def adjudicate(c: float, tol_sep: float = DEFAULT_TOL_SEP, tol_max: float = DEFAULT_TOL_MAX) -> Outcome:
    cls = classify(c, tol_sep, tol_max)
    if cls is EntanglementClass.MAXIMAL:
        return Outcome.Q_WINS
    if cls is EntanglementClass.SEPARABLE:
        return Outcome.P_WINS
    return Outcome.DRAW


def _require_quantum(q) -> Quantum:
    if not isinstance(q, Quantum):
        raise WrongStrategyKind(f"Q must play a Quantum strategy, got {type(q).__name__}")
    return q


def _record(rho0, q, p_strategy, final, tol_sep, tol_max) -> GameRecord:
    c = concurrence(final)
    outcome = adjudicate(c, tol_sep, tol_max)
    return GameRecord(rho0, q, p_strategy, final, c, outcome, PAYOFFS[outcome])


def _initial_density() -> np.ndarray:
    return quantum.density_from_state(quantum.bell_state(quantum.BellKind.PSI_MINUS))


def play_entangled_pure_state(p_move: ClassicalMove, q: Quantum) -> np.ndarray:
    """Final pure state vector of the Q -> P -> Q game with a pure P move."""
    q = _require_quantum(q)
    p_gate = quantum.X if ClassicalMove(p_move) is ClassicalMove.FLIP else quantum.I2
    psi = quantum.bell_state(quantum.BellKind.PSI_MINUS)
    psi = quantum.lift(q.first.matrix(), quantum.Side.QUBIT_Q) @ psi
    psi = quantum.lift(p_gate, quantum.Side.QUBIT_P) @ psi
    return quantum.lift(q.second.matrix(), quantum.Side.QUBIT_Q) @ psi


def play_entangled_pure(
    p_move: ClassicalMove,
    q: Quantum = HADAMARD_STRATEGY,
    tol_sep: float = DEFAULT_TOL_SEP,
    tol_max: float = DEFAULT_TOL_MAX,
) -> GameRecord:
    q = _require_quantum(q)
    p_move = ClassicalMove(p_move)
    p_gate = quantum.X if p_move is ClassicalMove.FLIP else quantum.I2
    rho0 = _initial_density()
    rho = quantum.apply_local_unitary(rho0, q.first.matrix(), quantum.Side.QUBIT_Q)
    rho = quantum.apply_local_unitary(rho, p_gate, quantum.Side.QUBIT_P)
    rho = quantum.apply_local_unitary(rho, q.second.matrix(), quantum.Side.QUBIT_Q)
    return _record(rho0, q, ClassicalPure(p_move), rho, tol_sep, tol_max)


def play_entangled_mixed(
    p: float,
    q: Quantum = HADAMARD_STRATEGY,
    tol_sep: float = DEFAULT_TOL_SEP,
    tol_max: float = DEFAULT_TOL_MAX,
) -> GameRecord:
    q = _require_quantum(q)
    p_strategy = ClassicalMixed(p)
    rho0 = _initial_density()
    final = quantum.evolve(q.first.matrix(), p, q.second.matrix(), rho0=rho0)
    return _record(rho0, q, p_strategy, final, tol_sep, tol_max)


def play(
    p_strategy: ClassicalPure | ClassicalMixed,
    q: Quantum = HADAMARD_STRATEGY,
    tol_sep: float = DEFAULT_TOL_SEP,
    tol_max: float = DEFAULT_TOL_MAX,
) -> GameRecord:
    if isinstance(p_strategy, ClassicalPure):
        return play_entangled_pure(p_strategy.move, q, tol_sep, tol_max)
    if isinstance(p_strategy, ClassicalMixed):
        return play_entangled_mixed(p_strategy.p, q, tol_sep, tol_max)
    raise WrongStrategyKind(f"P must play a classical strategy, got {type(p_strategy).__name__}")


def play_meyer(p_move: ClassicalMove) -> tuple[np.ndarray, str]:
    """Single penny: Q does H, P does X or I, Q does H. Q wins on |0> (heads)."""
    p_gate = quantum.X if ClassicalMove(p_move) is ClassicalMove.FLIP else quantum.I2
    psi = np.array([1.0, 0.0], dtype=np.complex128)
    for gate in (quantum.H, p_gate, quantum.H):
        psi = gate @ psi
    winner = "Q" if abs(psi[0]) ** 2 > 1.0 - MEYER_WIN_TOL else "P"
    return psi, winner


# Circuit transcripts -----------------------------------------------------

# Y on q1 turns (|00> + |11>)/sqrt2 into the singlet up to a global phase of -i.
BELL_PREP = ("H q0", "CNOT q0 q1", "Y q1")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _u_line(u: UnitaryParams, wire: str) -> str:
    return f"U({_fmt(u.theta)},{_fmt(u.phi)},{_fmt(u.phi_prime)}) {wire}"


def game_to_circuit(p: float, q: Quantum = HADAMARD_STRATEGY) -> list[str]:
    """Gate list for the game: Bell preparation, Q, P's random flip, Q, measurement.

    q0 is Q's qubit and q1 is P's.
    """
    q = _require_quantum(q)
    p = quantum._check_probability(p)
    return [
        *BELL_PREP,
        _u_line(q.first, "q0"),
        f"FLIP? p={_fmt(p)} q1",
        _u_line(q.second, "q0"),
        "MEASURE-CONCURRENCE q0 q1",
    ]


def write_circuit(lines: list[str], fh) -> None:
    for line in lines:
        fh.write(line + "\n")


_WIRE = {"q0": quantum.Side.QUBIT_Q, "q1": quantum.Side.QUBIT_P}
_U_RE = re.compile(r"^U\(([^,()]+),([^,()]+),([^,()]+)\)$")
_CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
)


def replay_circuit(lines) -> np.ndarray:
    """Run a transcript through the density-matrix engine, starting from |00>.

    Returns the density matrix reached when MEASURE-CONCURRENCE is hit (or at
    the end of the transcript).
    """
    rho = quantum.density_from_state(quantum.basis_state("00"))
    named = quantum.standard_gates()
    for raw in lines:
        tokens = raw.split()
        if not tokens:
            continue
        op, args = tokens[0], tokens[1:]
        if op == "MEASURE-CONCURRENCE":
            break
        if op == "CNOT":
            if args != ["q0", "q1"]:
                raise ValueError(f"unsupported CNOT wiring: {raw!r}")
            rho = quantum.check_density(_CNOT @ rho @ _CNOT.conj().T)
        elif op == "FLIP?":
            if len(args) != 2 or not args[0].startswith("p=") or args[1] != "q1":
                raise ValueError(f"malformed flip line: {raw!r}")
            rho = quantum.flip_channel(rho, float(args[0][2:]))
        elif op in named:
            rho = quantum.apply_local_unitary(rho, named[op], _WIRE[args[0]])
        elif (m := _U_RE.match(op)) is not None:
            params = UnitaryParams(*(float(g) for g in m.groups()))
            rho = quantum.apply_local_unitary(rho, params.matrix(), _WIRE[args[0]])
        else:
            raise ValueError(f"unknown gate line: {raw!r}")
    return rho

