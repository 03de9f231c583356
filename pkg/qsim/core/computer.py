import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Sequence, Tuple, Union

import torch
from torch import Tensor

from qsim.errors import DimensionMismatchError, InvalidIndexError
from qsim.linalg import (
    DTYPE,
    as_vector,
    equal_up_to_global_phase,
    is_unitary,
    kron,
    matvec,
)
from qsim.states import (
    basis_label,
    basis_state,
    cnot,
    expectation,
    extract_qubit,
    get_probabilities,
    lift_single,
    num_qubits_of,
    sample_basis_index,
    try_separate_z,
)
from qsim.utils import resolve_seed

from .collection import QuantumRegisterCollection
from .register import QuantumRegister
from .reorder import reorder

if TYPE_CHECKING:
    from qsim.lang import ExecutionReport

logger = logging.getLogger(__name__)

DEFAULT_NUM_QUBITS = 5
COMPARISON_ATOL = 1e-6

QubitNames = Union[str, Sequence[str]]


def split_qubit_names(names: QubitNames) -> Tuple[str, ...]:
    """Accept :code:`"q1,q2"` as well as :code:`["q1", "q2"]`."""
    if isinstance(names, str):
        return tuple(n.strip() for n in names.split(",") if n.strip())
    return tuple(names)


@dataclass(frozen=True)
class BlochCoords:
    """Cartesian point on the Bloch sphere.

    :var float x: Expectation of :code:`X`.
    :var float y: Expectation of :code:`Y`.
    :var float z: Expectation of :code:`Z`.
    """

    x: float
    y: float
    z: float

    @classmethod
    def from_state(cls, state: Tensor) -> "BlochCoords":
        return cls(
            expectation(state, "x"),
            expectation(state, "y"),
            expectation(state, "z"),
        )

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def isclose(
        self,
        other: "BlochCoords",
        atol: float = COMPARISON_ATOL,
    ) -> bool:
        return all(
            abs(a - b) <= atol for a, b in zip(self.as_tuple(), other.as_tuple())
        )


class QuantumComputer:
    """Ideal simulator of a small gate-model quantum computer.

    Qubits are named :code:`q0 .. q{n-1}` and start in :code:`|0>`, each in
    its own register. Registers are merged only when a CNOT entangles them,
    so most gates act on small matrices.

    :var int num_qubits: Number of machine qubits.
    :var int seed: Seed of the measurement RNG, restored by :code:`reset`.
    :var QuantumRegisterCollection qubits: Current register partition.

    :note: An instance must not be mutated from more than one thread at a
        time. Separate instances are independent.

    Example:

    .. highlight:: python
    .. code-block:: python

        qc = QuantumComputer(seed=7)
        qc.apply_gate(gate("X"), "q2")
        qc.apply_cnot("q1", "q2")
        qc.probabilities_equal(["q1", "q2"], [0, 1, 0, 0])  # True
    """

    def __init__(
        self,
        num_qubits: int = DEFAULT_NUM_QUBITS,
        seed: Optional[int] = None,
    ) -> None:
        """Prepare a fresh machine.

        :param int num_qubits: Number of qubits, at least 1.
        :param seed: Measurement RNG seed. Falls back to :code:`QSIM_SEED`
            and then to a non-deterministic seed.
        :type seed: Optional[int]
        """
        if num_qubits < 1:
            raise ValueError(f"Need at least one qubit, got {num_qubits}")
        self.num_qubits = num_qubits
        self.seed = resolve_seed(seed)
        self.reset()

    def reset(self) -> None:
        """Return every qubit to a singleton :code:`|0>` register and reseed
        the RNG."""
        self.qubits = QuantumRegisterCollection(
            [f"q{i}" for i in range(self.num_qubits)]
        )
        self._generator = torch.Generator().manual_seed(self.seed)
        logger.debug(f"Reset {self.num_qubits}-qubit machine, seed {self.seed}")

    def get_quantum_register_containing(self, qubit_name: str) -> QuantumRegister:
        return self.qubits.register_of(qubit_name)

    def num_registers(self) -> int:
        return self.qubits.num_registers()

    def apply_gate(self, gate: Tensor, qubit_name: str) -> None:
        """Apply a single-qubit gate. Never merges or splits registers.

        :param Tensor gate: 2x2 unitary matrix.
        :param str qubit_name: Target qubit.

        :raises UnknownQubitError: Unknown qubit.
        :raises DimensionMismatchError: Gate is not 2x2.
        """
        if tuple(gate.shape) != (2, 2):
            raise DimensionMismatchError(
                f"Expected a 2x2 gate, got shape {tuple(gate.shape)}"
            )
        gate = gate.to(DTYPE)
        assert is_unitary(gate), "Gate is not unitary"

        register = self.qubits.register_of(qubit_name)
        n = register.num_qubits()
        if n == 1:
            matrix = gate
        else:
            matrix = lift_single(gate, register.index_of(qubit_name), n)
        register.set_state(matvec(matrix, register.get_state()))
        logger.debug(f"Applied gate to {qubit_name} in {register}")

    def apply_cnot(self, control_name: str, target_name: str) -> None:
        """Apply CNOT, merging registers only when the result is entangled.

        Two singleton registers are combined temporarily; if the result is
        still a product of :code:`|0>` / :code:`|1>` states only the target
        is updated. Otherwise, and whenever a register already holds more
        than one qubit, the registers are merged (control's first) and the
        matching CNOT for the in-register positions is applied.

        :param str control_name: Control qubit.
        :param str target_name: Target qubit.

        :raises InvalidIndexError: Control and target are the same qubit.
        :raises UnknownQubitError: Unknown qubit.
        """
        if control_name == target_name:
            raise InvalidIndexError(f"CNOT control and target are both {control_name}")

        control_register = self.qubits.register_of(control_name)
        target_register = self.qubits.register_of(target_name)

        if (
            control_register is not target_register
            and control_register.num_qubits() == 1
            and target_register.num_qubits() == 1
        ):
            combined = kron(
                control_register.get_state(), target_register.get_state()
            )
            result = matvec(cnot(0, 1, 2), combined)
            factors = try_separate_z(result)
            if factors is not None:
                target_register.set_state(factors[1])
                logger.debug(
                    f"CNOT({control_name}, {target_name}) left them separable"
                )
                return
            register = self.qubits.entangle_qubits(control_name, target_name)
            register.set_state(result)
            logger.debug(f"CNOT({control_name}, {target_name}) entangled them")
            return

        if control_register is not target_register:
            register = self.qubits.entangle_qubits(control_name, target_name)
        else:
            register = control_register

        matrix = cnot(
            register.index_of(control_name),
            register.index_of(target_name),
            register.num_qubits(),
        )
        register.set_state(matvec(matrix, register.get_state()))
        logger.debug(f"CNOT({control_name}, {target_name}) on {register}")

    def measure(self, qubit_name: str) -> str:
        """Measure the whole register holding a qubit in the z basis.

        The pre-collapse state is kept as the register's noop snapshot (first
        measurement only) and the state collapses to the sampled basis state.

        :param str qubit_name: Qubit whose register is measured.

        :returns: Collapsed register as a bit string, in register order.
        :rtype: str

        :raises UnknownQubitError: Unknown qubit.
        """
        register = self.qubits.register_of(qubit_name)
        state = register.get_state()
        register.record_noop(state)

        index = sample_basis_index(state, self._generator)
        n = register.num_qubits()
        register.set_state(basis_state(index, n))

        outcome = basis_label(index, n)
        logger.debug(f"Measured {qubit_name}: {register} collapsed to {outcome}")
        return outcome

    def _collection(self, pre_collapse: bool) -> QuantumRegisterCollection:
        if pre_collapse:
            return self.qubits.snapshot(pre_collapse=True)
        return self.qubits

    def _single_qubit_state(
        self, qubit_name: str, pre_collapse: bool = False
    ) -> Tensor:
        register = self._collection(pre_collapse).register_of(qubit_name)
        if register.num_qubits() == 1:
            return register.get_state()
        return extract_qubit(
            register.get_state(), register.index_of(qubit_name)
        )

    def bloch(self, qubit_name: str, pre_collapse: bool = False) -> BlochCoords:
        """Bloch sphere coordinates of one qubit.

        :param str qubit_name: Qubit to inspect.
        :param bool pre_collapse: Use noop snapshots of measured registers.

        :returns: Pauli expectation values of the qubit.
        :rtype: BlochCoords

        :raises NotSeparableError: The qubit shares a register it cannot be
            easily separated from.
        """
        return BlochCoords.from_state(
            self._single_qubit_state(qubit_name, pre_collapse)
        )

    def reordered_state(
        self, names: QubitNames, pre_collapse: bool = False
    ) -> Tensor:
        """State of the requested qubits, in increasing machine order.

        :raises ReorderError: The qubits cannot be separated from the rest.
        """
        return reorder(self._collection(pre_collapse), split_qubit_names(names))

    def probabilities_equal(
        self,
        names: QubitNames,
        expected: Union[Tensor, Sequence[float]],
        pre_collapse: bool = False,
    ) -> bool:
        """Compare outcome probabilities of the requested qubits.

        :param names: Qubits in increasing machine order, as a sequence or a
            comma-separated string.
        :type names: Union[str, Sequence[str]]
        :param expected: :code:`2^len(names)` probabilities.
        :type expected: Union[Tensor, Sequence[float]]
        :param bool pre_collapse: Use noop snapshots of measured registers.

        :raises ReorderError: See :func:`reorder`.
        :raises DimensionMismatchError: Wrong number of probabilities.
        """
        names = split_qubit_names(names)
        expected = torch.as_tensor(expected, dtype=torch.float64).reshape(-1)
        if expected.shape[0] != 2 ** len(names):
            raise DimensionMismatchError(
                f"{len(names)} qubits need {2 ** len(names)} probabilities, "
                f"got {expected.shape[0]}"
            )
        actual = get_probabilities(self.reordered_state(names, pre_collapse))
        return bool(torch.allclose(actual, expected, rtol=0.0, atol=COMPARISON_ATOL))

    def qubit_states_equal(
        self,
        names: QubitNames,
        expected: Union[Tensor, Sequence[complex]],
        pre_collapse: bool = False,
    ) -> bool:
        """Compare amplitudes of the requested qubits up to global phase."""
        names = split_qubit_names(names)
        expected = as_vector(expected)
        if num_qubits_of(expected) != len(names):
            raise DimensionMismatchError(
                f"{len(names)} qubits need {2 ** len(names)} amplitudes, "
                f"got {expected.shape[0]}"
            )
        actual = self.reordered_state(names, pre_collapse)
        return equal_up_to_global_phase(actual, expected, COMPARISON_ATOL)

    def bloch_coords_equal(
        self,
        qubit_name: str,
        expected: Union[BlochCoords, Sequence[float]],
        pre_collapse: bool = False,
    ) -> bool:
        """Compare the Bloch coordinates of one qubit.

        :raises NotSeparableError: Raised, not reported as :code:`False`.
        """
        if not isinstance(expected, BlochCoords):
            expected = BlochCoords(*expected)
        return self.bloch(qubit_name, pre_collapse).isclose(expected)

    def execute(self, source: str) -> "ExecutionReport":
        """Parse and run circuit source on this machine.

        See :func:`qsim.lang.execute`.
        """
        from qsim.lang import execute

        return execute(self, source)
