import logging
from typing import Any, List, Optional, Sequence

from torch import Tensor

from qsim.errors import (
    DimensionMismatchError,
    InvalidIndexError,
    UnknownQubitError,
)
from qsim.linalg import ATOL, allclose, as_vector, kron
from qsim.states import canonical_state, num_qubits_of

logger = logging.getLogger(__name__)


class QuantumRegister:
    """Named, ordered group of qubits sharing one state vector.

    Qubit :code:`i` of the register is tensor factor :code:`i` of the
    state. Besides the live state the register can hold a :code:`noop`
    snapshot: the state as it was right before the first measurement
    collapsed it. Nature does not offer this, but it makes measured
    programs testable.

    :var List[str] qubit_names: Names in tensor order.
    :var Tensor state: State vector of dimension :code:`2^len(qubit_names)`.

    :note: Only the first measurement writes the snapshot. Later
        measurements would only record an already collapsed state.
    """

    def __init__(
        self,
        qubit_names: Sequence[str],
        state: Optional[Tensor] = None,
    ) -> None:
        """Create a register, in :code:`|0...0>` unless a state is given.

        :param qubit_names: Distinct qubit names in tensor order.
        :type qubit_names: Sequence[str]
        :param state: Initial state of matching dimension.
        :type state: Optional[Tensor]

        :raises ValueError: Empty or duplicated names.
        :raises DimensionMismatchError: State dimension does not match.
        """
        qubit_names = list(qubit_names)
        if not qubit_names:
            raise ValueError("A register needs at least one qubit")
        if len(set(qubit_names)) != len(qubit_names):
            raise ValueError(f"Duplicate qubit names: {qubit_names}")
        self._qubit_names: List[str] = qubit_names

        if state is None:
            state = kron(*[canonical_state("zero") for _ in qubit_names])
        self._state: Tensor = self._validate(state)
        self._noop: Optional[Tensor] = None

    def _validate(self, state: Tensor) -> Tensor:
        state = as_vector(state)
        if num_qubits_of(state) != len(self._qubit_names):
            raise DimensionMismatchError(
                f"State of length {state.shape[0]} does not fit register "
                f"{self._qubit_names}"
            )
        return state

    def __repr__(self) -> str:
        return f"QuantumRegister({self._qubit_names})"

    def num_qubits(self) -> int:
        return len(self._qubit_names)

    def get_qubit_names(self) -> List[str]:
        return list(self._qubit_names)

    def index_of(self, qubit_name: str) -> int:
        """Tensor position of a qubit inside this register."""
        try:
            return self._qubit_names.index(qubit_name)
        except ValueError:
            raise UnknownQubitError(
                f"Qubit {qubit_name!r} is not in register {self._qubit_names}"
            ) from None

    def contains(self, qubit_name: str) -> bool:
        return qubit_name in self._qubit_names

    def get_state(self) -> Tensor:
        return self._state

    def set_state(self, state: Tensor) -> None:
        self._state = self._validate(state)

    def get_noop(self) -> Optional[Tensor]:
        """Pre-collapse snapshot, :code:`None` until the first measurement."""
        return self._noop

    def record_noop(self, state: Tensor) -> None:
        """Store the pre-collapse state unless one is already stored."""
        if self._noop is not None:
            logger.debug(f"{self}: keeping existing noop snapshot")
            return
        self._noop = self._validate(state)

    def permute(self, permutation: Tensor) -> None:
        """Relabel the basis of the state and of the noop snapshot.

        :param Tensor permutation: Permutation matrix of matching dimension.
        """
        self._state = self._validate(permutation @ self._state)
        if self._noop is not None:
            self._noop = self._validate(permutation @ self._noop)

    def swap_qubit_names(self, i: int, j: int) -> None:
        n = self.num_qubits()
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidIndexError(f"Cannot swap names {i}, {j} in {self}")
        names = self._qubit_names
        names[i], names[j] = names[j], names[i]

    def equals(self, other: Any, atol: float = ATOL) -> bool:
        """Same names in the same order and entrywise-equal states."""
        if not isinstance(other, QuantumRegister):
            return False
        return self._qubit_names == other._qubit_names and allclose(
            self._state, other._state, atol
        )

    def __eq__(self, other: Any) -> bool:
        return self.equals(other)

    # Registers are mutable.
    __hash__ = None

    @classmethod
    def merge(
        cls, first: "QuantumRegister", second: "QuantumRegister"
    ) -> "QuantumRegister":
        """Tensor two registers together, :code:`first` on the left.

        The merged register starts without a noop snapshot.
        """
        return cls(
            first.get_qubit_names() + second.get_qubit_names(),
            kron(first.get_state(), second.get_state()),
        )

    def copy(self, pre_collapse: bool = False) -> "QuantumRegister":
        """Independent copy, optionally holding the noop as its state."""
        state = self._state
        if pre_collapse and self._noop is not None:
            state = self._noop
        clone = QuantumRegister(self._qubit_names, state)
        if self._noop is not None:
            clone._noop = self._noop.clone()
        return clone
