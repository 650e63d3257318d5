"""Parameter sweeps over P's flip probability and Q's angles, plus a random audit."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .classical import Outcome
from .entanglement import DEFAULT_TOL_MAX, DEFAULT_TOL_SEP, check_tolerances
from .errors import BadConfig, InvariantViolation
from .game import Quantum, adjudicate, play_entangled_mixed
from .quantum import UnitaryParams

PARAMS = ("p", "theta1", "phi1", "phi1_prime", "theta2", "phi2", "phi2_prime")
ANGLES = PARAMS[1:]
CSV_HEADER = ("p", "theta1", "phi1", "phi1p", "theta2", "phi2", "phi2p", "concurrence", "outcome")
RNG_NAME = "numpy.random.PCG64"

# Hadamard on both of Q's turns.
HADAMARD_FIXED = {
    "p": 0.5,
    "theta1": math.pi / 4, "phi1": 0.0, "phi1_prime": 0.0,
    "theta2": math.pi / 4, "phi2": 0.0, "phi2_prime": 0.0,
}
# Angle settings used for the theta sweeps at p = 1/2.
ANGLE_SWEEP_FIXED = {
    "p": 0.5,
    "theta1": 0.0, "phi1": math.pi / 2, "phi1_prime": 0.0,
    "theta2": 0.0, "phi2": math.pi / 2, "phi2_prime": 0.0,
}


@dataclass(frozen=True)
class SweepConfig:
    variable: str
    start: float
    stop: float
    steps: int
    fixed: dict[str, float] = field(default_factory=dict)
    tol_sep: float = DEFAULT_TOL_SEP
    tol_max: float = DEFAULT_TOL_MAX
    seed: int | None = None

    def validate(self) -> None:
        if self.variable not in PARAMS:
            raise BadConfig(f"unknown sweep variable {self.variable!r}; choose from {', '.join(PARAMS)}")
        if int(self.steps) != self.steps or self.steps < 2:
            raise BadConfig(f"steps must be an integer >= 2, got {self.steps!r}")
        if not self.start < self.stop:
            raise BadConfig(f"start ({self.start}) must be below stop ({self.stop})")
        unknown = set(self.fixed) - set(PARAMS)
        if unknown:
            raise BadConfig(f"unknown fixed parameters: {sorted(unknown)}")
        if self.variable == "p" and not (0.0 <= self.start and self.stop <= 1.0):
            raise BadConfig("p sweep must stay within [0, 1]")
        if "p" in self.fixed and not 0.0 <= self.fixed["p"] <= 1.0:
            raise BadConfig(f"fixed p={self.fixed['p']!r} outside [0, 1]")
        try:
            check_tolerances(self.tol_sep, self.tol_max)
        except ValueError as exc:
            raise BadConfig(str(exc)) from exc

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, int(self.steps))


@dataclass(frozen=True)
class SweepRow:
    p: float
    theta1: float
    phi1: float
    phi1_prime: float
    theta2: float
    phi2: float
    phi2_prime: float
    concurrence: float
    outcome: Outcome

    def strategy(self) -> Quantum:
        return Quantum(
            UnitaryParams(self.theta1, self.phi1, self.phi1_prime),
            UnitaryParams(self.theta2, self.phi2, self.phi2_prime),
        )


def evaluate(values: dict[str, float], tol_sep=DEFAULT_TOL_SEP, tol_max=DEFAULT_TOL_MAX) -> SweepRow:
    q = Quantum(
        UnitaryParams(values["theta1"], values["phi1"], values["phi1_prime"]),
        UnitaryParams(values["theta2"], values["phi2"], values["phi2_prime"]),
    )
    rec = play_entangled_mixed(values["p"], q, tol_sep, tol_max)
    return SweepRow(**{k: float(values[k]) for k in PARAMS}, concurrence=rec.concurrence, outcome=rec.outcome)


def _run(config: SweepConfig, defaults: dict[str, float]) -> list[SweepRow]:
    config.validate()
    base = {**defaults, **config.fixed}
    return [
        evaluate({**base, config.variable: float(x)}, config.tol_sep, config.tol_max)
        for x in config.grid()
    ]


def sweep_p(config: SweepConfig) -> list[SweepRow]:
    """Concurrence against P's flip probability; Q plays Hadamard twice unless fixed otherwise."""
    if config.variable != "p":
        raise BadConfig(f"sweep_p needs variable 'p', got {config.variable!r}")
    return _run(config, HADAMARD_FIXED)


def sweep_angle(config: SweepConfig) -> list[SweepRow]:
    """Concurrence against one of Q's six angles at fixed p."""
    if config.variable not in ANGLES:
        raise BadConfig(f"sweep_angle needs one of {', '.join(ANGLES)}, got {config.variable!r}")
    return _run(config, ANGLE_SWEEP_FIXED)


@dataclass(frozen=True)
class AuditResult:
    max_concurrence: float
    worst: Quantum
    rows: list[SweepRow]
    seed: int

    @property
    def all_p_wins(self) -> bool:
        return all(r.outcome is Outcome.P_WINS for r in self.rows)


def draw_strategies(n: int, seed: int) -> np.ndarray:
    """n rows of (theta1, phi1, phi1', theta2, phi2, phi2'), each uniform on [0, 2 pi)."""
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.uniform(0.0, 2.0 * math.pi, size=(n, 6))


def audit_p_half(
    n: int, seed: int, p: float = 0.5, tol_sep=DEFAULT_TOL_SEP, tol_max=DEFAULT_TOL_MAX
) -> AuditResult:
    """Play ``n`` random Q strategies against P flipping with probability ``p``.

    Angles are uniform over the parameter box, not Haar-distributed.
    """
    if n < 1:
        raise BadConfig(f"n must be >= 1, got {n}")
    draws = draw_strategies(n, seed)
    rows = [evaluate({"p": p, **dict(zip(ANGLES, d))}, tol_sep, tol_max) for d in draws]
    worst = max(rows, key=lambda r: r.concurrence)
    return AuditResult(worst.concurrence, worst.strategy(), rows, seed)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def write_csv(rows, fh, seed: int | None = None) -> None:
    if seed is not None:
        fh.write(f"# seed={seed} rng={RNG_NAME}\n")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([
            _fmt(r.p), _fmt(r.theta1), _fmt(r.phi1), _fmt(r.phi1_prime),
            _fmt(r.theta2), _fmt(r.phi2), _fmt(r.phi2_prime),
            _fmt(r.concurrence), r.outcome.value,
        ])


def read_csv(fh) -> list[dict[str, str]]:
    lines = [line for line in fh if not line.startswith("#")]
    return list(csv.DictReader(lines))


def check_rows(rows, tol_sep=DEFAULT_TOL_SEP, tol_max=DEFAULT_TOL_MAX) -> None:
    """Raise InvariantViolation if a row's label disagrees with its concurrence."""
    for r in rows:
        if not 0.0 <= r.concurrence <= 1.0 or adjudicate(r.concurrence, tol_sep, tol_max) is not r.outcome:
            raise InvariantViolation(f"inconsistent sweep row {r}")
