"""Gate matrices and constructors lifting them onto n-qubit registers.

Qubit positions are 0-based, position 0 is the leftmost tensor factor.
"""
from __future__ import annotations

import cmath
import logging
import math
from functools import lru_cache
from typing import Callable, Dict, Tuple

import torch
from torch import Tensor

from qsim.errors import (
    DimensionMismatchError,
    InvalidIndexError,
    UnknownNameError,
)
from qsim.linalg import (
    DTYPE,
    as_matrix,
    identity,
    is_unitary,
    kron,
    matvec,
)
from qsim.states.states import num_qubits_of

logger = logging.getLogger(__name__)

_GATE_REGISTRY: Dict[str, Callable[[], Tensor]] = {}


def register_gate(name: str) -> Callable:
    """Decorator registering a single-qubit gate constructor under a name.

    :param str name: Public gate name, e.g. :code:`"H"`.

    :returns: Inner function which registers the constructor.
    """

    def _inner(_constructor: Callable[[], Tensor]) -> Callable[[], Tensor]:
        _GATE_REGISTRY[name] = lru_cache(maxsize=None)(_constructor)
        return _constructor

    return _inner


@register_gate("H")
def _hadamard() -> Tensor:
    return as_matrix([[1, 1], [1, -1]]) / math.sqrt(2)


@register_gate("X")
def _pauli_x() -> Tensor:
    return as_matrix([[0, 1], [1, 0]])


@register_gate("Y")
def _pauli_y() -> Tensor:
    return as_matrix([[0, -1j], [1j, 0]])


@register_gate("Z")
def _pauli_z() -> Tensor:
    return as_matrix([[1, 0], [0, -1]])


@register_gate("S")
def _phase() -> Tensor:
    return as_matrix([[1, 0], [0, 1j]])


@register_gate("Sdagger")
def _phase_dagger() -> Tensor:
    return as_matrix([[1, 0], [0, -1j]])


@register_gate("T")
def _pi_over_8() -> Tensor:
    return as_matrix([[1, 0], [0, cmath.exp(1j * math.pi / 4)]])


@register_gate("Tdagger")
def _pi_over_8_dagger() -> Tensor:
    return as_matrix([[1, 0], [0, cmath.exp(-1j * math.pi / 4)]])


@register_gate("I")
def _identity() -> Tensor:
    return identity(2)


def gate_names() -> Tuple[str, ...]:
    return tuple(_GATE_REGISTRY.keys())


def gate(name: str) -> Tensor:
    """Look up a single-qubit gate matrix by name.

    :param str name: One of :code:`H, X, Y, Z, S, Sdagger, T, Tdagger, I`.

    :returns: A fresh copy of the 2x2 gate matrix.
    :rtype: Tensor

    :raises UnknownNameError: The gate is not supported.
    """
    if name not in _GATE_REGISTRY:
        raise UnknownNameError(
            f"Unknown gate {name!r}, expected one of {gate_names()}"
        )
    matrix = _GATE_REGISTRY[name]()
    assert is_unitary(matrix), f"Gate {name} is not unitary"
    return matrix.clone()


def lift_single(g: Tensor, target_index: int, register_size: int) -> Tensor:
    """Lift a single-qubit gate to act on one qubit of a register.

    Builds :code:`I x ... x g x ... x I` with :code:`g` in slot
    :code:`target_index`, e.g. :code:`lift_single(X, 2, 4) == I x I x X x I`.

    :param Tensor g: 2x2 gate matrix.
    :param int target_index: 0-based position of the target qubit.
    :param int register_size: Number of qubits in the register.

    :returns: :code:`2^n x 2^n` gate matrix.
    :rtype: Tensor

    :raises InvalidIndexError: Target outside the register.
    """
    if register_size < 1 or not 0 <= target_index < register_size:
        raise InvalidIndexError(
            f"Target {target_index} outside register of size {register_size}"
        )
    factors = [identity(2)] * register_size
    factors[target_index] = g
    return kron(*factors)


@lru_cache(maxsize=None)
def _cnot_permutation(control: int, target: int, n: int) -> Tensor:
    labels = torch.arange(2**n)
    control_bits = (labels >> (n - 1 - control)) & 1
    flipped = labels ^ (control_bits << (n - 1 - target))

    matrix = torch.zeros((2**n, 2**n), dtype=DTYPE)
    matrix[flipped, labels] = 1
    return matrix


def cnot(control_index: int, target_index: int, register_size: int) -> Tensor:
    """CNOT acting on an n-qubit register.

    Built directly as the basis permutation flipping the target bit of
    every label whose control bit is set. :code:`cnot(0, 1, 2)` is the
    textbook 4x4 CNOT.

    :param int control_index: 0-based control position.
    :param int target_index: 0-based target position.
    :param int register_size: Number of qubits, at least 2.

    :returns: :code:`2^n x 2^n` permutation matrix.
    :rtype: Tensor

    :raises InvalidIndexError: Equal or out-of-range positions.
    """
    n = register_size
    if n < 2:
        raise InvalidIndexError(f"CNOT needs a register of 2+ qubits, got {n}")
    if not (0 <= control_index < n and 0 <= target_index < n):
        raise InvalidIndexError(
            f"CNOT({control_index}, {target_index}) outside register of "
            f"size {n}"
        )
    if control_index == target_index:
        raise InvalidIndexError(
            f"CNOT control and target are both {control_index}"
        )
    return _cnot_permutation(control_index, target_index, n).clone()


def change_basis(state: Tensor, basis: str) -> Tensor:
    """Rotate a single-qubit state into the x or y basis.

    The x transform is :code:`H`, the y transform is :code:`H S^dagger`,
    so :code:`plus -> zero` and :code:`plus_i -> zero` (up to phase).

    :raises DimensionMismatchError: Multi-qubit input.
    :raises UnknownNameError: Basis other than :code:`x` or :code:`y`.
    """
    if num_qubits_of(state) != 1:
        raise DimensionMismatchError(
            f"change_basis takes a single-qubit state, got {tuple(state.shape)}"
        )
    if basis == "x":
        transform = gate("H")
    elif basis == "y":
        transform = gate("H") @ gate("Sdagger")
    else:
        raise UnknownNameError(f"Unknown basis {basis!r}, expected x or y")
    return matvec(transform, state)
