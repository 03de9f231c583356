import pytest
import torch

from qsim.core import (
    QuantumComputer,
    QuantumRegister,
    QuantumRegisterCollection,
    reorder,
    swap,
    swap_helper,
)
from qsim.core.reorder import _swap_permutation
from qsim.errors import InvalidIndexError, ReorderError
from qsim.linalg import allclose, equal_up_to_global_phase, is_unitary, kron
from qsim.states import canonical_state, state_from_string, string_from_state
from tests.oracle import DenseSimulator

NAMES = [f"q{i}" for i in range(5)]


def test_swap_helper():
    items = ["a", "b", "c"]
    swap_helper(items, 0, 2)
    assert items == ["c", "b", "a"]


def test_swap_adjacent_qubits():
    state = kron(
        canonical_state("one"), canonical_state("plus"), canonical_state("zero")
    )
    register = QuantumRegister(["q2", "q0", "q1"], state)

    swap(register, 0, 1)

    assert register.get_qubit_names() == ["q0", "q2", "q1"]
    expected = kron(
        canonical_state("plus"), canonical_state("one"), canonical_state("zero")
    )
    assert allclose(register.get_state(), expected)


def test_swap_is_an_involution():
    generator = torch.Generator().manual_seed(1)
    state = torch.randn(8, dtype=torch.complex128, generator=generator)
    register = QuantumRegister(["a", "b", "c"], state)
    swap(register, 1, 2)
    swap(register, 1, 2)
    assert register.get_qubit_names() == ["a", "b", "c"]
    assert allclose(register.get_state(), state)


@pytest.mark.parametrize("i,j", [(0, 2), (1, 0), (2, 3)])
def test_swap_rejects_non_adjacent(i, j):
    register = QuantumRegister(["a", "b", "c"])
    with pytest.raises(InvalidIndexError):
        swap(register, i, j)


def test_swap_permutation_is_unitary():
    for i in range(3):
        permutation = _swap_permutation(4, i, i + 1)
        assert is_unitary(permutation)
        assert torch.equal(permutation, permutation.T)


def test_reorder_sorts_register():
    collection = QuantumRegisterCollection(NAMES)
    register = collection.entangle_qubits("q2", "q0")
    register.set_state(state_from_string("10"))

    state = reorder(collection, ["q0", "q2"])

    assert string_from_state(state) == "01"
    assert register.get_qubit_names() == ["q0", "q2"]


def test_reorder_skips_unrequested_registers():
    collection = QuantumRegisterCollection(NAMES)
    collection.register_of("q1").set_state(canonical_state("one"))
    collection.register_of("q3").set_state(canonical_state("one"))

    state = reorder(collection, ["q1", "q2", "q3"])

    assert string_from_state(state) == "101"
    assert collection.num_registers() == 5


def test_reorder_merges_interleaved_registers():
    qc = QuantumComputer(seed=0)
    qc.execute("h q[0]; cx q[0], q[4]; h q[1]; cx q[1], q[3];")
    oracle = DenseSimulator()
    oracle.run([("h", (0,)), ("cx", (0, 4)), ("h", (1,)), ("cx", (1, 3))])

    state = reorder(qc.qubits, ["q0", "q1", "q3", "q4"])

    expected = oracle.state.reshape(2, 2, 2, 2, 2)[:, :, 0].reshape(-1)
    assert allclose(state, expected, atol=1e-9)
    assert qc.get_quantum_register_containing("q1").get_qubit_names() == [
        "q0",
        "q1",
        "q3",
        "q4",
    ]


def test_reorder_fails_when_qubit_cannot_be_separated():
    qc = QuantumComputer(seed=0)
    qc.execute(
        "h q[0]; cx q[0], q[1]; cx q[1], q[2]; cx q[2], q[3]; cx q[3], q[4];"
    )
    assert qc.num_registers() == 1

    with pytest.raises(ReorderError, match="q2"):
        reorder(qc.qubits, ["q0", "q1", "q3", "q4"])


def test_reorder_fails_inside_unrequested_span():
    qc = QuantumComputer(seed=0)
    qc.execute("h q[0]; cx q[0], q[2];")
    with pytest.raises(ReorderError):
        reorder(qc.qubits, ["q1"])


@pytest.mark.parametrize("order", [[], ["q1", "q0"], ["q0", "q0"]])
def test_reorder_rejects_order(order):
    with pytest.raises(ReorderError):
        reorder(QuantumRegisterCollection(NAMES), order)


def test_reorder_full_machine_matches_oracle():
    qc = QuantumComputer(seed=0)
    qc.execute("h q[4]; cx q[4], q[2]; cx q[2], q[0]; t q[0]; x q[3];")
    oracle = DenseSimulator()
    oracle.run(
        [("h", (4,)), ("cx", (4, 2)), ("cx", (2, 0)), ("t", (0,)), ("x", (3,))]
    )

    state = reorder(qc.qubits, NAMES)

    assert equal_up_to_global_phase(state, oracle.state, atol=1e-9)
