import numpy as np
import pytest
from hypothesis import given

from qpennyflip import linalg
from qpennyflip.errors import NotHermitian, NotPSD
from qpennyflip.quantum import H, I2, X, bell_state, density_from_state

from conftest import complex_matrices


def test_kron_identity():
    assert np.array_equal(linalg.kron(I2, I2), np.eye(4))


def test_kron_index_layout():
    a = np.arange(4).reshape(2, 2) + 1j
    b = np.arange(4, 8).reshape(2, 2) - 2j
    out = linalg.kron(a, b)
    for i, j, k, l in np.ndindex(2, 2, 2, 2):
        assert out[2 * i + k, 2 * j + l] == a[i, j] * b[k, l]


def test_kron_hadamard_on_singlet():
    psi = bell_state("psi-")
    expected = 0.5 * np.array([1, -1, -1, -1])
    assert np.allclose(linalg.kron(H, I2) @ psi, expected, atol=1e-15)


def test_kron_xx_involution():
    xx = linalg.kron(X, X)
    assert np.array_equal(linalg.matmul(xx, xx), np.eye(4))


def test_small_products():
    assert np.array_equal(linalg.matmul(X, X), I2)
    assert np.allclose(linalg.matmul(H, H), I2, atol=1e-15)
    assert np.array_equal(linalg.scale(0, np.ones((4, 4))), np.zeros((4, 4)))
    assert np.array_equal(linalg.add(X, I2), [[1, 1], [1, 1]])
    assert np.array_equal(linalg.conj_elementwise([[1j, 0], [0, 2]]), [[-1j, 0], [0, 2]])


def test_adjoint_basics(rng):
    assert np.array_equal(linalg.adjoint(np.eye(4)), np.eye(4))
    assert np.array_equal(linalg.adjoint(H), H)
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert np.array_equal(linalg.adjoint(linalg.adjoint(m)), m)


def test_rejects_bad_shapes_and_nan():
    with pytest.raises(ValueError):
        linalg.matmul(np.eye(2), np.eye(4))
    with pytest.raises(ValueError):
        linalg.as_matrix(np.full((2, 2), np.nan))
    with pytest.raises(ValueError):
        linalg.as_matrix(np.eye(3))


@given(complex_matrices(2), complex_matrices(2), complex_matrices(2))
def test_kron_bilinear(a, b, c):
    lhs = linalg.kron(a + b, c)
    rhs = linalg.kron(a, c) + linalg.kron(b, c)
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(1.0, np.max(np.abs(lhs)))


class TestEigHermitian:
    def test_identity(self):
        vals, _ = linalg.eig_hermitian(np.eye(4))
        assert np.allclose(vals, 1.0, atol=1e-15)

    def test_diagonal_sorted(self):
        vals, vecs = linalg.eig_hermitian(np.diag([2.0, 4.0, 1.0, 3.0]))
        assert np.array_equal(vals, [4, 3, 2, 1])
        assert np.allclose(np.abs(vecs), np.eye(4)[:, [1, 3, 0, 2]])

    def test_singlet_projector(self):
        proj = density_from_state(bell_state("psi-"))
        vals, vecs = linalg.eig_hermitian(proj)
        assert np.allclose(vals, [1, 0, 0, 0], atol=1e-12)
        recon = vecs @ np.diag(vals) @ vecs.conj().T
        assert np.max(np.abs(recon - proj)) < 1e-12
        # leading eigenvector is the singlet up to phase
        assert abs(abs(np.vdot(vecs[:, 0], bell_state("psi-"))) - 1) < 1e-12

    def test_not_hermitian(self):
        with pytest.raises(NotHermitian):
            linalg.eig_hermitian(np.triu(np.ones((4, 4))))

    def test_matches_lapack(self, rng):
        for _ in range(50):
            a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            m = a + a.conj().T
            vals, _ = linalg.eig_hermitian(m)
            assert np.allclose(vals, np.linalg.eigvalsh(m)[::-1], atol=1e-12)

    @given(complex_matrices())
    def test_reconstruction_orthonormal_trace(self, a):
        m = a + a.conj().T
        vals, vecs = linalg.eig_hermitian(m)
        scale = max(1.0, np.max(np.abs(m)))
        assert np.all(np.diff(vals) <= 0)
        assert np.max(np.abs(vecs @ np.diag(vals) @ vecs.conj().T - m)) < 1e-9 * scale
        assert np.max(np.abs(vecs.conj().T @ vecs - np.eye(4))) < 1e-9
        assert abs(vals.sum() - np.trace(m).real) < 1e-9 * scale


class TestSqrtPsd:
    def test_identity(self):
        assert np.allclose(linalg.sqrt_psd(np.eye(4)), np.eye(4), atol=1e-15)

    def test_projector(self):
        proj = density_from_state(bell_state("phi+"))
        assert np.max(np.abs(linalg.sqrt_psd(proj) - proj)) < 1e-12

    def test_diagonal(self):
        out = linalg.sqrt_psd(np.diag([4.0, 1.0, 0.0, 0.0]))
        assert np.allclose(out, np.diag([2.0, 1.0, 0.0, 0.0]), atol=1e-15)

    def test_clamps_tiny_negative(self):
        out = linalg.sqrt_psd(np.diag([1.0, -1e-9, 0.0, 0.0]))
        assert np.allclose(out, np.diag([1.0, 0, 0, 0]))

    def test_rejects_negative(self):
        with pytest.raises(NotPSD):
            linalg.sqrt_psd(np.diag([1.0, -1e-3, 0.0, 0.0]))

    @given(complex_matrices())
    def test_square_reconstructs(self, a):
        m = a @ a.conj().T
        m = m / max(1.0, np.max(np.abs(m)))
        r = linalg.sqrt_psd(m)
        assert linalg.hermiticity_error(r) < 1e-12
        assert np.max(np.abs(r @ r - m)) < 1e-8
