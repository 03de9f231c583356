from pathlib import Path

import pytest

from qsim.core import QuantumComputer

CORPUS_DIR = Path(__file__).resolve().parent.parent / "programs"

SWAP_CODE = """\
x q[2];
cx q[1], q[2];
h q[1];
h q[2];
cx q[1], q[2];
h q[1];
h q[2];
cx q[1], q[2];
measure q[1];
measure q[2];
"""

BELL_CODE = """\
h q[0];
cx q[0], q[1];
measure q[0];
"""


@pytest.fixture
def qc() -> QuantumComputer:
    return QuantumComputer(seed=0)


@pytest.fixture
def make_qc():
    def _make_qc(seed: int = 0, num_qubits: int = 5) -> QuantumComputer:
        return QuantumComputer(num_qubits=num_qubits, seed=seed)

    return _make_qc


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture
def swap_code() -> str:
    return SWAP_CODE


@pytest.fixture
def bell_code() -> str:
    return BELL_CODE
