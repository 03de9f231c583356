"""Canonical single-qubit states and basis-string helpers."""
from __future__ import annotations

import logging
import math
from typing import Dict, Optional, Tuple

import torch
from torch import Tensor

from qsim.errors import (
    DimensionMismatchError,
    NotBasisStateError,
    UnknownNameError,
)
from qsim.linalg import ATOL, as_vector, equal_up_to_global_phase, kron

logger = logging.getLogger(__name__)

DEFAULT_MAX_QUBITS = 5

_INV_SQRT2 = 1 / math.sqrt(2)

# Name -> amplitudes. Diagonal states are the x basis, circular the y basis.
_CANONICAL_STATES: Dict[str, Tuple[complex, complex]] = {
    "zero": (1, 0),
    "one": (0, 1),
    "plus": (_INV_SQRT2, _INV_SQRT2),
    "minus": (_INV_SQRT2, -_INV_SQRT2),
    "plus_i": (_INV_SQRT2, 1j * _INV_SQRT2),
    "minus_i": (_INV_SQRT2, -1j * _INV_SQRT2),
}

CANONICAL_STATE_NAMES = tuple(_CANONICAL_STATES.keys())
Z_STATE_NAMES = ("zero", "one")


def canonical_state(name: str) -> Tensor:
    """Build one of the six canonical single-qubit states.

    :param str name: One of :code:`zero, one, plus, minus, plus_i, minus_i`.

    :returns: A fresh 2-element state vector.
    :rtype: Tensor

    :raises UnknownNameError: The name is not a canonical state.
    """
    if name not in _CANONICAL_STATES:
        raise UnknownNameError(
            f"Unknown state {name!r}, expected one of {CANONICAL_STATE_NAMES}"
        )
    return as_vector(_CANONICAL_STATES[name])


def canonical_state_name(state: Tensor, atol: float = ATOL) -> Optional[str]:
    """Name of the canonical state equal to :code:`state` up to phase."""
    if state.shape != (2,):
        return None
    for name in CANONICAL_STATE_NAMES:
        if equal_up_to_global_phase(state, canonical_state(name), atol):
            return name
    return None


def num_qubits_of(state: Tensor) -> int:
    """Number of qubits represented by a state vector.

    :raises DimensionMismatchError: Length is not a power of two.
    """
    length = state.shape[-1] if state.dim() > 0 else 0
    if state.dim() != 1 or length < 2 or length & (length - 1):
        raise DimensionMismatchError(
            f"State of shape {tuple(state.shape)} is not a 2^n vector"
        )
    return length.bit_length() - 1


def basis_state(index: int, num_qubits: int) -> Tensor:
    state = torch.zeros(2**num_qubits, dtype=torch.complex128)
    state[index] = 1
    return state


def basis_label(index: int, num_qubits: int) -> str:
    return format(index, f"0{num_qubits}b")


def state_from_string(
    bits: str,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> Tensor:
    """Build the computational basis state for a binary string.

    The leftmost character is the most significant qubit, so :code:`"10011"`
    is the basis vector with a one at index 19.

    :param str bits: Non-empty string over :code:`{0, 1}`.
    :param int max_qubits: Largest accepted string length.

    :returns: Basis state vector of length :code:`2 ** len(bits)`.
    :rtype: Tensor

    :raises ValueError: Empty, too long, or containing other characters.
    """
    if not bits or len(bits) > max_qubits:
        raise ValueError(
            f"Bit string must have 1 to {max_qubits} characters: {bits!r}"
        )
    bad = set(bits) - {"0", "1"}
    if bad:
        raise ValueError(f"Invalid characters {sorted(bad)} in {bits!r}")

    factors = [canonical_state("one" if b == "1" else "zero") for b in bits]
    return kron(*factors)


def string_from_state(state: Tensor, atol: float = ATOL) -> str:
    """Inverse of :func:`state_from_string`.

    Accepts states equal to a basis vector up to a global phase.

    :raises NotBasisStateError: The state is a superposition.
    """
    num_qubits = num_qubits_of(state)
    index = int(torch.argmax(state.abs()))
    if not equal_up_to_global_phase(
        state, basis_state(index, num_qubits), atol
    ):
        raise NotBasisStateError(
            f"State is not a computational basis state: {state}"
        )
    return basis_label(index, num_qubits)
