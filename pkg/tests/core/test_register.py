import math

import pytest
import torch

from qsim.core import QuantumRegister
from qsim.errors import DimensionMismatchError, InvalidIndexError, UnknownQubitError
from qsim.linalg import as_vector, kron
from qsim.states import canonical_state, state_from_string

BELL = as_vector([1, 0, 0, 1]) / math.sqrt(2)


def test_default_state_is_all_zero():
    register = QuantumRegister(["q0", "q1", "q2"])
    assert register.num_qubits() == 3
    assert torch.equal(register.get_state(), state_from_string("000"))
    assert register.get_noop() is None


@pytest.mark.parametrize("names", [[], ["q0", "q0"]])
def test_invalid_names(names):
    with pytest.raises(ValueError):
        QuantumRegister(names)


def test_state_dimension_must_match():
    with pytest.raises(DimensionMismatchError):
        QuantumRegister(["q0"], state_from_string("00"))
    register = QuantumRegister(["q0"])
    with pytest.raises(DimensionMismatchError):
        register.set_state(BELL)


def test_index_of_and_contains():
    register = QuantumRegister(["q3", "q1"])
    assert register.index_of("q1") == 1
    assert register.contains("q3")
    assert not register.contains("q0")
    with pytest.raises(UnknownQubitError):
        register.index_of("q0")


def test_get_qubit_names_is_a_copy():
    register = QuantumRegister(["q0", "q1"])
    register.get_qubit_names().append("q2")
    assert register.get_qubit_names() == ["q0", "q1"]


def test_noop_first_write_wins():
    register = QuantumRegister(["q0", "q1"], BELL)
    register.record_noop(BELL)
    register.record_noop(state_from_string("11"))
    assert torch.equal(register.get_noop(), BELL)


def test_merge():
    first = QuantumRegister(["q2"], canonical_state("one"))
    second = QuantumRegister(["q0"], canonical_state("plus"))
    first.record_noop(canonical_state("one"))

    merged = QuantumRegister.merge(first, second)

    assert merged.get_qubit_names() == ["q2", "q0"]
    assert torch.allclose(
        merged.get_state(),
        kron(canonical_state("one"), canonical_state("plus")),
    )
    assert merged.get_noop() is None


def test_permute_applies_to_noop():
    register = QuantumRegister(["q0", "q1"], state_from_string("01"))
    register.record_noop(state_from_string("01"))
    swap = torch.eye(4, dtype=torch.complex128)[[0, 2, 1, 3]]

    register.permute(swap)

    assert torch.equal(register.get_state(), state_from_string("10"))
    assert torch.equal(register.get_noop(), state_from_string("10"))


def test_swap_qubit_names():
    register = QuantumRegister(["q0", "q1", "q2"])
    register.swap_qubit_names(0, 2)
    assert register.get_qubit_names() == ["q2", "q1", "q0"]
    with pytest.raises(InvalidIndexError):
        register.swap_qubit_names(0, 3)


def test_equality():
    a = QuantumRegister(["q0", "q1"], BELL)
    b = QuantumRegister(["q0", "q1"], BELL.clone())
    c = QuantumRegister(["q1", "q0"], BELL)
    assert a == b
    assert a != c
    assert a != "register"


def test_copy_pre_collapse():
    register = QuantumRegister(["q0", "q1"], BELL)
    register.record_noop(BELL)
    register.set_state(state_from_string("11"))

    plain = register.copy()
    before = register.copy(pre_collapse=True)

    assert torch.equal(plain.get_state(), state_from_string("11"))
    assert torch.allclose(before.get_state(), BELL)
    assert torch.allclose(before.get_noop(), BELL)

    plain.set_state(state_from_string("00"))
    assert torch.equal(register.get_state(), state_from_string("11"))
