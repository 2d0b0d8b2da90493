import numpy as np
import pytest

# One line per acceptance criterion, filled in by tests/test_acceptance.py
# and echoed after the run (the summary section is never captured).
acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_hermitian(n, rng, scale=1.0):
    G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * (G + G.conj().T) / 2


def random_psd(n, rng, rank=None):
    rank = n if rank is None else rank
    G = (rng.standard_normal((rank, n)) + 1j * rng.standard_normal((rank, n))) / np.sqrt(2)
    return G.conj().T @ G
