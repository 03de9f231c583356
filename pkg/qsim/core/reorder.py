"""Bring requested qubits into increasing order and return their state.

Registers hold their qubits in whatever order entangling operations left
them. To answer a question about, say, :code:`(q0, q1, q3)` we:

1. Merge registers so that no requested qubit sits strictly inside the
   index span of a register it does not belong to.
2. Fail if a register mixes requested and unrequested qubits, otherwise
   bubble-sort every register into increasing machine order, permuting its
   state with every adjacent swap.
3. Tensor together, in increasing order, the registers made only of
   requested qubits.
"""
import logging
from typing import Any, List, MutableSequence, Sequence

from torch import Tensor

from qsim.errors import InvalidIndexError, ReorderError
from qsim.linalg import identity, kron
from qsim.states import basis_label

from .collection import QuantumRegisterCollection
from .register import QuantumRegister

logger = logging.getLogger(__name__)


def validate_requested_order(
    collection: QuantumRegisterCollection,
    names: Sequence[str],
) -> List[str]:
    """Check a requested order is non-empty and strictly increasing.

    :raises UnknownQubitError: A name is not a machine qubit.
    :raises ReorderError: Empty, duplicated, or not increasing.
    """
    names = list(names)
    if not names:
        raise ReorderError("Requested order is empty")
    indices = [collection.machine_index(name) for name in names]
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise ReorderError(
            f"Requested qubits must be in increasing machine order: {names}"
        )
    return names


def swap_helper(items: MutableSequence[Any], i: int, j: int) -> None:
    tmp = items[i]
    items[i] = items[j]
    items[j] = tmp


def _swap_permutation(num_qubits: int, i: int, j: int) -> Tensor:
    """Permutation matrix exchanging bit positions i and j of every label."""
    labels = [basis_label(k, num_qubits) for k in range(2**num_qubits)]
    permutation = identity(2**num_qubits)
    swapped = set()

    for label in labels:
        new_label = list(label)
        swap_helper(new_label, i, j)
        new_label = "".join(new_label)
        if new_label == label:
            continue

        transposition = frozenset(
            (labels.index(label), labels.index(new_label))
        )
        if transposition in swapped:
            continue
        swapped.add(transposition)

        i_per, j_per = sorted(transposition)
        permutation[i_per, i_per] = 0
        permutation[j_per, j_per] = 0
        permutation[i_per, j_per] = 1
        permutation[j_per, i_per] = 1

    return permutation


def swap(register: QuantumRegister, i: int, j: int) -> None:
    """Exchange two adjacent qubits of a register, state included.

    :param QuantumRegister register: Register to mutate.
    :param int i: Left position.
    :param int j: Right position, must be :code:`i + 1`.

    :raises InvalidIndexError: Non-adjacent or out-of-range positions.
    """
    n = register.num_qubits()
    if j != i + 1 or not (0 <= i and j < n):
        raise InvalidIndexError(
            f"swap takes adjacent positions inside {register}, got {i}, {j}"
        )
    register.permute(_swap_permutation(n, i, j))
    register.swap_qubit_names(i, j)
    logger.debug(f"Swapped positions {i}, {j}: {register}")


def _merge_interleaved(
    collection: QuantumRegisterCollection,
    order: Sequence[str],
) -> None:
    """Phase 1, repeated until no requested qubit lies inside a foreign
    register's index span."""
    merged = True
    while merged:
        merged = False
        for name in order:
            q = collection.machine_index(name)
            for register in collection.get_quantum_registers():
                if register.contains(name):
                    continue
                indices = [
                    collection.machine_index(m)
                    for m in register.get_qubit_names()
                ]
                if min(indices) < q < max(indices):
                    own = collection.register_of(name)
                    collection.merge_registers(register, own)
                    merged = True
                    break


def _sort_register(
    collection: QuantumRegisterCollection,
    register: QuantumRegister,
) -> None:
    """Bubble sort a register into increasing machine order."""
    n = register.num_qubits()
    swapped = True
    while swapped:
        swapped = False
        for i in range(n - 1):
            keys = list(
                map(collection.machine_index, register.get_qubit_names())
            )
            if keys[i] > keys[i + 1]:
                swap(register, i, i + 1)
                swapped = True


def reorder(
    collection: QuantumRegisterCollection,
    order: Sequence[str],
) -> Tensor:
    """Combined state of the requested qubits in the requested order.

    Mutates the collection: registers may be merged and reordered.

    :param QuantumRegisterCollection collection: Machine qubits.
    :param order: Machine qubit names in strictly increasing index order.
    :type order: Sequence[str]

    :returns: State vector over exactly the requested qubits.
    :rtype: Tensor

    :raises ReorderError: Invalid order, or a requested qubit shares a
        register with unrequested qubits.
    """
    order = validate_requested_order(collection, order)
    requested = set(order)

    _merge_interleaved(collection, order)

    for register in collection.get_quantum_registers():
        members = set(register.get_qubit_names())
        overlap = members & requested
        if overlap and overlap != members:
            raise ReorderError(
                f"Cannot separate {sorted(members - requested)} from "
                f"{sorted(overlap)}: they share {register}"
            )
        if overlap:
            _sort_register(collection, register)

    answer_names: List[str] = []
    answer_states: List[Tensor] = []
    for register in collection.get_quantum_registers():
        if set(register.get_qubit_names()) <= requested:
            answer_names.extend(register.get_qubit_names())
            answer_states.append(register.get_state())

    assert answer_names == order, f"Reordered {answer_names} != {order}"
    logger.debug(f"Reordered answer state over {answer_names}")
    return kron(*answer_states).clone()
