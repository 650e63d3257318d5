import math

import numpy as np
import pytest
from hypothesis import given

from qpennyflip import linalg
from qpennyflip.errors import InvariantViolation, NotNormalized, NotUnitary, ProbabilityOutOfRange
from qpennyflip.quantum import (
    H,
    I2,
    X,
    BellKind,
    Side,
    UnitaryParams,
    apply_local_unitary,
    basis_state,
    bell_state,
    check_density,
    density_from_state,
    evolve,
    flip_channel,
    rho3_hadamard_closed_form,
    standard_gates,
    su2,
)

from conftest import density_matrices, probabilities, random_density, random_params, unitary_params

S = 1 / math.sqrt(2)
SINGLET = density_from_state(bell_state(BellKind.PSI_MINUS))


def ket_density(amps):
    return density_from_state(np.asarray(amps, dtype=complex))


class TestStates:
    def test_singlet_amplitudes(self):
        assert np.allclose(bell_state(BellKind.PSI_MINUS), [0, -S, S, 0], atol=1e-16)

    def test_phi_plus(self):
        assert np.allclose(bell_state("phi+"), [S, 0, 0, S], atol=1e-16)

    @pytest.mark.parametrize("kind", list(BellKind))
    def test_bell_normalized(self, kind):
        assert abs(np.linalg.norm(bell_state(kind)) - 1) < 1e-15

    def test_singlet_density(self):
        expected = 0.5 * np.array([[0, 0, 0, 0], [0, 1, -1, 0], [0, -1, 1, 0], [0, 0, 0, 0]])
        assert np.allclose(SINGLET, expected, atol=1e-15)

    def test_basis_density(self):
        assert np.array_equal(density_from_state(basis_state("00")), np.diag([1, 0, 0, 0]))

    def test_density_trace_and_rank(self, rng):
        for _ in range(20):
            psi = rng.normal(size=4) + 1j * rng.normal(size=4)
            rho = density_from_state(psi / np.linalg.norm(psi))
            assert abs(np.trace(rho) - 1) < 1e-12
            assert np.linalg.matrix_rank(rho, tol=1e-10) == 1

    def test_not_normalized(self):
        with pytest.raises(NotNormalized):
            density_from_state([1, 1, 0, 0])


class TestGates:
    def test_su2_hadamard(self):
        assert np.allclose(su2(UnitaryParams(math.pi / 4, 0, 0)), H, atol=1e-15)

    def test_su2_zero(self):
        assert np.allclose(su2(UnitaryParams(0, 0, 0)), [[1, 0], [0, -1]])

    def test_su2_entries(self):
        t, f, g = 0.3, 1.1, -0.7
        u = su2(UnitaryParams(t, f, g))
        expected = [
            [math.cos(t) * np.exp(1j * f), math.sin(t) * np.exp(1j * g)],
            [math.sin(t) * np.exp(-1j * g), -math.cos(t) * np.exp(-1j * f)],
        ]
        assert np.allclose(u, expected, atol=1e-15)

    @given(unitary_params())
    def test_su2_unitary_det_minus_one(self, params):
        u = su2(params)
        assert np.max(np.abs(u.conj().T @ u - I2)) < 1e-12
        assert abs(np.linalg.det(u) + 1) < 1e-12

    def test_standard_gates(self):
        g = standard_gates()
        assert set(g) == {"H", "X", "Y", "Z", "I"}
        assert np.allclose(g["H"] @ g["H"], I2, atol=1e-15)
        assert np.array_equal(g["X"] @ [1, 0], [0, 1])
        assert np.array_equal(g["Y"], [[0, -1j], [1j, 0]])


class TestLocalUnitary:
    def test_hadamard_on_q(self):
        rho1 = apply_local_unitary(SINGLET, H, Side.QUBIT_Q)
        assert np.allclose(rho1, ket_density(0.5 * np.array([1, -1, -1, -1])), atol=1e-15)

    def test_flip_on_p(self):
        rho = ket_density(0.5 * np.array([1, -1, -1, -1]))
        out = apply_local_unitary(rho, X, Side.QUBIT_P)
        # 1/2 (|01> - |00> - |11> - |10>)
        assert np.allclose(out, ket_density(0.5 * np.array([-1, 1, -1, -1])), atol=1e-15)

    @pytest.mark.parametrize("side", list(Side))
    def test_identity(self, side, rng):
        rho = random_density(rng)
        assert np.allclose(apply_local_unitary(rho, I2, side), rho, atol=1e-15)

    def test_rejects_non_unitary(self):
        with pytest.raises(NotUnitary):
            apply_local_unitary(SINGLET, [[1, 1], [0, 1]], Side.QUBIT_Q)

    @given(density_matrices(), unitary_params())
    def test_preserves_trace_and_spectrum(self, rho, params):
        for side in Side:
            out = apply_local_unitary(rho, su2(params), side)
            assert abs(np.trace(out) - np.trace(rho)) < 1e-12
            before = linalg.eig_hermitian(rho)[0]
            after = linalg.eig_hermitian(out)[0]
            assert np.max(np.abs(before - after)) < 1e-9


class TestFlipChannel:
    def test_p0_unchanged(self, rng):
        rho = random_density(rng)
        assert np.array_equal(flip_channel(rho, 0.0), rho)

    def test_p1_is_flip(self, rng):
        rho = random_density(rng)
        assert np.allclose(flip_channel(rho, 1.0), apply_local_unitary(rho, X, Side.QUBIT_P), atol=1e-15)

    def test_twice_at_endpoints(self, rng):
        rho = random_density(rng)
        assert np.allclose(flip_channel(flip_channel(rho, 0.0), 0.0), rho, atol=1e-15)
        assert np.allclose(flip_channel(flip_channel(rho, 1.0), 1.0), rho, atol=1e-15)

    @pytest.mark.parametrize("p", [-0.01, 1.01, float("nan")])
    def test_out_of_range(self, p):
        with pytest.raises(ProbabilityOutOfRange):
            flip_channel(SINGLET, p)

    @given(density_matrices(), probabilities)
    def test_density_invariants(self, rho, p):
        out = flip_channel(rho, p)
        assert abs(np.trace(out) - 1) < 1e-10
        assert linalg.hermiticity_error(out) < 1e-10
        assert np.linalg.eigvalsh(out).min() >= -1e-10


class TestClosedForm:
    def test_p0_singlet(self):
        assert np.allclose(rho3_hadamard_closed_form(0.0), SINGLET, atol=1e-15)

    def test_p1(self):
        expected = 0.5 * np.array([[1, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0], [-1, 0, 0, 1]])
        assert np.array_equal(rho3_hadamard_closed_form(1.0), expected)

    @pytest.mark.parametrize("p", np.round(np.linspace(0, 1, 11), 10))
    def test_matches_pipeline(self, p):
        rho = density_from_state(bell_state("psi-"))
        rho = apply_local_unitary(rho, H, Side.QUBIT_Q)
        rho = flip_channel(rho, p)
        rho = apply_local_unitary(rho, H, Side.QUBIT_Q)
        assert np.max(np.abs(rho - rho3_hadamard_closed_form(p))) < 1e-12

    def test_out_of_range(self):
        with pytest.raises(ProbabilityOutOfRange):
            rho3_hadamard_closed_form(2.0)


def test_evolve_general_stays_density(rng):
    for _ in range(50):
        out = evolve(su2(random_params(rng)), rng.uniform(), su2(random_params(rng)))
        check_density(out)


def test_check_density_catches_bad_matrix():
    with pytest.raises(InvariantViolation):
        check_density(np.diag([1.5, -0.5, 0, 0]))
    with pytest.raises(InvariantViolation):
        check_density(np.eye(4))
