import itertools

import pytest
import torch

from qsim.errors import DimensionMismatchError, NotBasisStateError, UnknownNameError
from qsim.linalg import as_vector, equal_up_to_global_phase, norm2
from qsim.states import (
    CANONICAL_STATE_NAMES,
    basis_label,
    basis_state,
    canonical_state,
    canonical_state_name,
    num_qubits_of,
    state_from_string,
    string_from_state,
)


@pytest.mark.parametrize("name", CANONICAL_STATE_NAMES)
def test_canonical_states_are_normalized(name):
    state = canonical_state(name)
    assert state.shape == (2,)
    assert abs(norm2(state) - 1) < 1e-12
    assert canonical_state_name(state) == name


def test_canonical_state_unknown_name():
    with pytest.raises(UnknownNameError):
        canonical_state("plus_j")


def test_canonical_state_name_up_to_phase():
    assert canonical_state_name(1j * canonical_state("minus")) == "minus"
    assert canonical_state_name(as_vector([0.6, 0.8])) is None


def test_state_from_string():
    state = state_from_string("10011")
    assert state.shape == (32,)
    assert state[19] == 1
    assert norm2(state) == 1


@pytest.mark.parametrize("bits", ["", "012", "100000", "1a"])
def test_state_from_string_rejects(bits):
    with pytest.raises(ValueError):
        state_from_string(bits)


ALL_BASIS_STRINGS = [
    "".join(bits) for n in range(1, 6) for bits in itertools.product("01", repeat=n)
]


@pytest.mark.parametrize("bits", ALL_BASIS_STRINGS)
def test_string_from_state(bits):
    assert string_from_state(state_from_string(bits)) == bits
    assert string_from_state(-1j * state_from_string(bits)) == bits


def test_string_from_state_rejects_superposition():
    with pytest.raises(NotBasisStateError):
        string_from_state(canonical_state("plus"))


def test_basis_state_and_label():
    assert torch.equal(basis_state(2, 2), as_vector([0, 0, 1, 0]))
    assert basis_label(2, 3) == "010"
    assert equal_up_to_global_phase(basis_state(5, 3), state_from_string("101"))


def test_num_qubits_of():
    assert num_qubits_of(basis_state(0, 4)) == 4
    with pytest.raises(DimensionMismatchError):
        num_qubits_of(as_vector([1, 0, 0]))
    with pytest.raises(DimensionMismatchError):
        num_qubits_of(as_vector([1]))
