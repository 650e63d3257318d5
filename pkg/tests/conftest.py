import os

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from qpennyflip.quantum import UnitaryParams

settings.register_profile("default", max_examples=50, deadline=None)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
angles = st.floats(min_value=0.0, max_value=2 * np.pi, allow_nan=False)
probabilities = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


@st.composite
def complex_matrices(draw, dim=4):
    re = draw(st.lists(finite, min_size=dim * dim, max_size=dim * dim))
    im = draw(st.lists(finite, min_size=dim * dim, max_size=dim * dim))
    return (np.array(re) + 1j * np.array(im)).reshape(dim, dim)


@st.composite
def unitary_params(draw):
    return UnitaryParams(draw(angles), draw(angles), draw(angles))


@st.composite
def density_matrices(draw):
    a = draw(complex_matrices())
    rho = a @ a.conj().T
    tr = np.trace(rho).real
    if tr < 1e-6:
        return np.diag([1.0, 0, 0, 0]).astype(complex)
    return rho / tr


def random_state(rng, dim=4):
    psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return psi / np.linalg.norm(psi)


def random_density(rng, rank=None):
    k = rank or rng.integers(1, 5)
    a = rng.normal(size=(4, k)) + 1j * rng.normal(size=(4, k))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_params(rng):
    return UnitaryParams(*rng.uniform(0, 2 * np.pi, size=3))


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
