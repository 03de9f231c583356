"""The "easy" separation of multi-qubit states.

A state is easily separable when it equals, up to one global phase, a
tensor product of the six canonical single-qubit states. Failing this test
says nothing about genuine entanglement: a product containing
:code:`(|0> + exp(i/3)|1>) / sqrt(2)` is separable yet rejected.
"""
import logging
from typing import List, Optional, Sequence

from torch import Tensor

from qsim.errors import InvalidIndexError, NotSeparableError
from qsim.linalg import allclose, equal_up_to_global_phase, kron
from qsim.states.states import (
    CANONICAL_STATE_NAMES,
    Z_STATE_NAMES,
    canonical_state,
    num_qubits_of,
)

logger = logging.getLogger(__name__)

SEPARABILITY_ATOL = 1e-9


def _separate(
    state: Tensor,
    candidate_names: Sequence[str],
    atol: float,
) -> Optional[List[Tensor]]:
    """Peel canonical factors off the left of :code:`state` one slot at a
    time.

    For a candidate :code:`c` in slot 0, projecting gives the remainder
    :code:`rest = c^dagger . state` (state viewed as a 2 x 2^(n-1) matrix).
    The candidate is kept only if :code:`c x rest` reproduces the state, so
    any phase of the true factor is pushed into :code:`rest`.
    """
    candidates = [canonical_state(n) for n in candidate_names]
    num_qubits = num_qubits_of(state)

    if num_qubits == 1:
        for candidate in candidates:
            if equal_up_to_global_phase(state, candidate, atol):
                return [candidate]
        return None

    halves = state.reshape(2, -1)
    for candidate in candidates:
        rest = candidate.conj().resolve_conj() @ halves
        if not allclose(kron(candidate, rest), state, atol):
            continue
        tail = _separate(rest, candidate_names, atol)
        if tail is not None:
            return [candidate] + tail
    return None


def try_separate_all(
    state: Tensor,
    atol: float = SEPARABILITY_ATOL,
) -> Optional[List[Tensor]]:
    """Factor a state into canonical single-qubit states.

    :param Tensor state: State vector of one or more qubits.
    :param float atol: Entrywise tolerance.

    :returns: Canonical factors in tensor order, or :code:`None` if the
        state is not easily separable.
    :rtype: Optional[List[Tensor]]
    """
    factors = _separate(state, CANONICAL_STATE_NAMES, atol)
    if factors is not None:
        assert equal_up_to_global_phase(kron(*factors), state, atol)
    logger.debug(
        f"Easy separation of {num_qubits_of(state)} qubits: "
        f"{'ok' if factors is not None else 'failed'}"
    )
    return factors


def try_separate_z(
    state: Tensor,
    atol: float = SEPARABILITY_ATOL,
) -> Optional[List[Tensor]]:
    """Factor a state into :code:`|0>` / :code:`|1>` states only.

    Used by the CNOT rule keeping two unentangled qubits in separate
    registers.
    """
    factors = _separate(state, Z_STATE_NAMES, atol)
    if factors is not None:
        assert equal_up_to_global_phase(kron(*factors), state, atol)
    return factors


def extract_qubit(
    state: Tensor,
    position: int,
    atol: float = SEPARABILITY_ATOL,
) -> Tensor:
    """Pull the single-qubit factor at :code:`position` out of a state.

    :raises NotSeparableError: The state is not easily separable.
    :raises InvalidIndexError: Position outside the state.
    """
    num_qubits = num_qubits_of(state)
    if not 0 <= position < num_qubits:
        raise InvalidIndexError(
            f"Position {position} outside {num_qubits}-qubit state"
        )
    factors = try_separate_all(state, atol)
    if factors is None:
        raise NotSeparableError(
            f"State of {num_qubits} qubits is not easily separable"
        )
    return factors[position]
