"""Dense complex 2x2 / 4x4 matrix helpers and a Jacobi Hermitian eigensolver.

Matrices are plain ``numpy`` complex128 arrays of shape (2, 2) or (4, 4).
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import NotConverged, NotHermitian, NotPSD

HERMITIAN_TOL = 1e-10
PSD_CLAMP = 1e-8
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100

# Relative cutoff below which an eigenvalue is treated as numerically zero
# before taking a square root (sqrt turns 1e-17 noise into 3e-9).
RANK_EPS = 64 * np.finfo(float).eps


def as_matrix(m, dim: int | None = None) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in (2, 4):
        raise ValueError(f"expected a 2x2 or 4x4 matrix, got shape {a.shape}")
    if dim is not None and a.shape[0] != dim:
        raise ValueError(f"expected a {dim}x{dim} matrix, got shape {a.shape}")
    # one reduction: any NaN/Inf entry makes the sum non-finite
    if not cmath.isfinite(a.sum()):
        raise ValueError("matrix has non-finite entries")
    return a


def kron(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 matrices: out[2i+k, 2j+l] = a[i,j] * b[k,l]."""
    a, b = as_matrix(a, 2), as_matrix(b, 2)
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(4, 4)


def adjoint(m) -> np.ndarray:
    return as_matrix(m).conj().T


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    return a @ b


def add(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    return a + b


def scale(c: complex, m) -> np.ndarray:
    return complex(c) * as_matrix(m)


def conj_elementwise(m) -> np.ndarray:
    return as_matrix(m).conj()


def hermiticity_error(m) -> float:
    a = as_matrix(m)
    return float(np.max(np.abs(a - a.conj().T)))


def _off_norm(a: list[list[complex]]) -> float:
    n = len(a)
    return math.sqrt(sum(abs(a[i][j]) ** 2 for i in range(n) for j in range(n) if i != j))


def eig_hermitian(m, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(values, vectors)`` with real eigenvalues sorted descending and
    orthonormal eigenvectors in the columns of ``vectors``.
    """
    arr = as_matrix(m)
    if hermiticity_error(arr) > HERMITIAN_TOL:
        raise NotHermitian(f"max |m - m^H| = {hermiticity_error(arr):.3e}")
    # Scalar loops over nested lists: for 4x4 this beats numpy's per-call overhead.
    a = (0.5 * (arr + arr.conj().T)).tolist()
    n = len(a)
    v = [[complex(i == j) for j in range(n)] for i in range(n)]

    for _ in range(max_sweeps):
        if _off_norm(a) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                r = abs(apq)
                if r == 0.0:
                    continue
                # Strip the phase of a[p][q], then do the real symmetric rotation.
                ph = (apq / r).conjugate()
                theta = (a[q][q].real - a[p][p].real) / (2.0 * r)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                # Rotation block [[c, s], [-s*ph, c*ph]] on columns p, q.
                g_qp, g_qq = -s * ph, c * ph
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = akp * c + akq * g_qp
                    a[k][q] = akp * s + akq * g_qq
                    vkp, vkq = v[k][p], v[k][q]
                    v[k][p] = vkp * c + vkq * g_qp
                    v[k][q] = vkp * s + vkq * g_qq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk + g_qp.conjugate() * aqk
                    a[q][k] = s * apk + g_qq.conjugate() * aqk
                a[p][q] = a[q][p] = 0j
                a[p][p] = complex(a[p][p].real)
                a[q][q] = complex(a[q][q].real)
    else:
        if _off_norm(a) >= tol:
            raise NotConverged(f"Jacobi did not converge in {max_sweeps} sweeps")

    values = np.array([a[i][i].real for i in range(n)])
    order = np.argsort(values, kind="stable")[::-1]
    return values[order], np.array(v, dtype=np.complex128)[:, order]


def clamp_eigenvalues(values: np.ndarray) -> np.ndarray:
    """Zero out tiny negative (and numerically-zero positive) eigenvalues.

    Raises NotPSD for anything below ``-PSD_CLAMP``.
    """
    values = np.asarray(values, dtype=float)
    if values.size and values.min() < -PSD_CLAMP:
        raise NotPSD(f"eigenvalue {values.min():.3e} < -{PSD_CLAMP}")
    cutoff = RANK_EPS * max(1.0, float(np.max(np.abs(values), initial=0.0)))
    out = values.copy()
    out[out < cutoff] = 0.0
    return out


def sqrt_psd(m) -> np.ndarray:
    """Principal square root of a Hermitian positive semidefinite matrix."""
    values, vecs = eig_hermitian(m)
    roots = np.sqrt(clamp_eigenvalues(values))
    r = (vecs * roots) @ vecs.conj().T
    return 0.5 * (r + r.conj().T)
