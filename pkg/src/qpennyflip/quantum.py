"""Two-qubit states, Q's parameterized unitaries and P's probabilistic flip.

Basis order is |00>, |01>, |10>, |11> with Q's qubit first and P's second, so
Q acts through ``U (x) I`` and P through ``I (x) X``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import InvariantViolation, NotNormalized, NotUnitary, ProbabilityOutOfRange

NORM_TOL = 1e-10
UNITARY_TOL = 1e-10
DENSITY_TOL = 1e-10

SQRT1_2 = 1.0 / math.sqrt(2.0)

I2 = np.eye(2, dtype=np.complex128)
X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
H = SQRT1_2 * np.array([[1, 1], [1, -1]], dtype=np.complex128)


class Side(enum.Enum):
    QUBIT_Q = 0
    QUBIT_P = 1


class BellKind(enum.Enum):
    PSI_MINUS = "psi-"
    PSI_PLUS = "psi+"
    PHI_MINUS = "phi-"
    PHI_PLUS = "phi+"


@dataclass(frozen=True)
class UnitaryParams:
    """Angles of Q's move ``[[cos t e^{i f}, sin t e^{i g}], [sin t e^{-i g}, -cos t e^{-i f}]]``
    with t = theta, f = phi, g = phi_prime."""

    theta: float
    phi: float = 0.0
    phi_prime: float = 0.0

    def matrix(self) -> np.ndarray:
        return su2(self)


HADAMARD_PARAMS = UnitaryParams(math.pi / 4, 0.0, 0.0)


def standard_gates() -> dict[str, np.ndarray]:
    return {"H": H.copy(), "X": X.copy(), "Y": Y.copy(), "Z": Z.copy(), "I": I2.copy()}


def su2(params: UnitaryParams) -> np.ndarray:
    """Q's single-qubit move. Despite the name the family has determinant -1."""
    c, s = math.cos(params.theta), math.sin(params.theta)
    e_phi = complex(math.cos(params.phi), math.sin(params.phi))
    e_phip = complex(math.cos(params.phi_prime), math.sin(params.phi_prime))
    return np.array(
        [
            [c * e_phi, s * e_phip],
            [s * e_phip.conjugate(), -c * e_phi.conjugate()],
        ],
        dtype=np.complex128,
    )


def basis_state(bits: str) -> np.ndarray:
    """Computational basis ket, e.g. ``basis_state("10")``."""
    psi = np.zeros(2 ** len(bits), dtype=np.complex128)
    psi[int(bits, 2)] = 1.0
    return psi


def bell_state(kind: BellKind | str) -> np.ndarray:
    kind = BellKind(kind)
    amps = {
        # (|10> - |01>)/sqrt2, the game's starting state
        BellKind.PSI_MINUS: (0, -1, 1, 0),
        BellKind.PSI_PLUS: (0, 1, 1, 0),
        BellKind.PHI_MINUS: (1, 0, 0, -1),
        BellKind.PHI_PLUS: (1, 0, 0, 1),
    }[kind]
    return SQRT1_2 * np.array(amps, dtype=np.complex128)


def check_normalized(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.ndim != 1:
        raise NotNormalized(f"expected a state vector, got shape {psi.shape}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > NORM_TOL:
        raise NotNormalized(f"state norm {norm!r} differs from 1")
    return psi


def density_from_state(psi) -> np.ndarray:
    psi = check_normalized(psi)
    return np.outer(psi, psi.conj())


def check_density(rho, tol: float = DENSITY_TOL) -> np.ndarray:
    """Raise InvariantViolation unless ``rho`` is Hermitian, unit-trace and PSD."""
    rho = linalg.as_matrix(rho, 4)
    herm = linalg.hermiticity_error(rho)
    if herm > tol:
        raise InvariantViolation(f"density matrix not Hermitian (error {herm:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol:
        raise InvariantViolation(f"density matrix trace {tr!r} != 1")
    # LAPACK here keeps the per-step check cheap; concurrence uses the Jacobi solver.
    lo = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0]
    if lo < -linalg.PSD_CLAMP:
        raise InvariantViolation(f"density matrix has eigenvalue {lo:.3e}")
    return rho


def is_unitary(u, tol: float = UNITARY_TOL) -> bool:
    u = linalg.as_matrix(u)
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= tol)


def lift(u, side: Side) -> np.ndarray:
    """Embed a single-qubit operator on ``side`` into the two-qubit space."""
    return linalg.kron(u, I2) if Side(side) is Side.QUBIT_Q else linalg.kron(I2, u)


def apply_local_unitary(rho, u, side: Side, check: bool = True) -> np.ndarray:
    """rho -> (u (x) I) rho (u (x) I)^dagger, or I (x) u for P's side."""
    u = linalg.as_matrix(u, 2)
    if not is_unitary(u):
        raise NotUnitary("single-qubit move is not unitary")
    full = lift(u, side)
    out = full @ linalg.as_matrix(rho, 4) @ full.conj().T
    return check_density(out) if check else out


def _check_probability(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ProbabilityOutOfRange(f"probability {p!r} outside [0, 1]")
    return p


def flip_channel(rho, p: float, check: bool = True) -> np.ndarray:
    """P flips his qubit with probability ``p``: p X rho X + (1 - p) rho on P's side."""
    p = _check_probability(p)
    rho = linalg.as_matrix(rho, 4)
    flipped = apply_local_unitary(rho, X, Side.QUBIT_P, check=False)
    out = p * flipped + (1.0 - p) * rho
    return check_density(out) if check else out


def evolve(u1, p: float, u2, rho0=None, check: bool = True) -> np.ndarray:
    """Full Q -> P -> Q evolution from the singlet (or ``rho0``)."""
    rho = density_from_state(bell_state(BellKind.PSI_MINUS)) if rho0 is None else rho0
    rho = apply_local_unitary(rho, u1, Side.QUBIT_Q, check=check)
    rho = flip_channel(rho, p, check=check)
    return apply_local_unitary(rho, u2, Side.QUBIT_Q, check=check)


def rho3_hadamard_closed_form(p: float) -> np.ndarray:
    """Final state of the Hadamard/flip(p)/Hadamard game, written out directly."""
    p = _check_probability(p)
    q = 1.0 - p
    return 0.5 * np.array(
        [
            [p, 0, 0, -p],
            [0, q, -q, 0],
            [0, -q, q, 0],
            [-p, 0, 0, p],
        ],
        dtype=np.complex128,
    )
