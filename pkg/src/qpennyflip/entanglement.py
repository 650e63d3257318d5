"""Wootters concurrence and the win/draw/lose entanglement classes."""

from __future__ import annotations

import enum

import numpy as np

from . import linalg
from .errors import BadTolerance
from .quantum import Y, check_normalized

DEFAULT_TOL_SEP = 1e-6
DEFAULT_TOL_MAX = 1e-6

YY = np.kron(Y, Y)


class EntanglementClass(enum.Enum):
    SEPARABLE = "separable"
    NON_MAXIMAL = "non-maximal"
    MAXIMAL = "maximal"


def _clamp_unit(c: float) -> float:
    return min(max(float(c), 0.0), 1.0)


def spin_flip(rho) -> np.ndarray:
    """(Y (x) Y) rho* (Y (x) Y)."""
    rho = linalg.as_matrix(rho, 4)
    return YY @ rho.conj() @ YY


def concurrence_lambdas(rho) -> np.ndarray:
    """Square roots of the eigenvalues of rho * spin_flip(rho), descending.

    Computed from the Hermitian matrix sqrt(rho) gamma sqrt(rho), which has the
    same spectrum as rho gamma.
    """
    root = linalg.sqrt_psd(rho)
    m = root @ spin_flip(rho) @ root
    m = 0.5 * (m + m.conj().T)
    values, _ = linalg.eig_hermitian(m)
    return np.sqrt(linalg.clamp_eigenvalues(values))


def concurrence(rho) -> float:
    lam = concurrence_lambdas(rho)
    return _clamp_unit(lam[0] - lam[1] - lam[2] - lam[3])


def concurrence_pure_oracle(psi) -> float:
    """|<psi| Y (x) Y |psi*>| for a normalized pure state."""
    psi = check_normalized(psi)
    return _clamp_unit(abs(np.vdot(psi, YY @ psi.conj())))


def check_tolerances(tol_sep: float, tol_max: float) -> None:
    for name, tol in (("tol_sep", tol_sep), ("tol_max", tol_max)):
        if not 0.0 < tol < 0.5:
            raise BadTolerance(f"{name}={tol!r} must lie in (0, 0.5)")


def classify(
    c: float, tol_sep: float = DEFAULT_TOL_SEP, tol_max: float = DEFAULT_TOL_MAX
) -> EntanglementClass:
    check_tolerances(tol_sep, tol_max)
    if c < tol_sep:
        return EntanglementClass.SEPARABLE
    if c > 1.0 - tol_max:
        return EntanglementClass.MAXIMAL
    return EntanglementClass.NON_MAXIMAL
