import logging
from typing import Dict, List, Sequence

from qsim.errors import RegisterMergeError, UnknownQubitError

from .register import QuantumRegister

logger = logging.getLogger(__name__)


class QuantumRegisterCollection:
    """Partition of the machine's qubits into disjoint registers.

    Qubits start in singleton registers and are only merged when an
    operation entangles them, which keeps gate matrices small.

    :var Tuple[str, ...] machine_order: Machine qubit names, :code:`q0`
        first.

    :note: Registers are always enumerated by the smallest machine index of
        their members, so dumps and diagnostics are reproducible.
    """

    def __init__(self, qubit_names: Sequence[str]) -> None:
        self.machine_order = tuple(qubit_names)
        self._machine_index: Dict[str, int] = {
            name: i for i, name in enumerate(self.machine_order)
        }
        if len(self._machine_index) != len(self.machine_order):
            raise ValueError(f"Duplicate qubit names: {qubit_names}")
        self._registers: List[QuantumRegister] = [
            QuantumRegister([name]) for name in self.machine_order
        ]

    def __repr__(self) -> str:
        return f"QuantumRegisterCollection({self.get_quantum_registers()})"

    def machine_index(self, qubit_name: str) -> int:
        if qubit_name not in self._machine_index:
            raise UnknownQubitError(
                f"Unknown qubit {qubit_name!r}, machine has "
                f"{list(self.machine_order)}"
            )
        return self._machine_index[qubit_name]

    def _min_index(self, register: QuantumRegister) -> int:
        return min(map(self.machine_index, register.get_qubit_names()))

    def get_quantum_registers(self) -> List[QuantumRegister]:
        """Registers ordered by the smallest machine index of their members."""
        return sorted(self._registers, key=self._min_index)

    def num_registers(self) -> int:
        return len(self._registers)

    def register_of(self, qubit_name: str) -> QuantumRegister:
        """The unique register holding :code:`qubit_name`.

        :raises UnknownQubitError: The name is not a machine qubit.
        """
        self.machine_index(qubit_name)
        for register in self._registers:
            if register.contains(qubit_name):
                return register
        raise AssertionError(f"Partition lost qubit {qubit_name}")

    get_quantum_register_containing = register_of

    def merge_registers(
        self,
        first: QuantumRegister,
        second: QuantumRegister,
    ) -> QuantumRegister:
        """Replace two registers by their tensor product, :code:`first` left.

        :raises RegisterMergeError: Both arguments are the same register.
        """
        if first is second:
            raise RegisterMergeError(f"Cannot merge {first} with itself")

        merged = QuantumRegister.merge(first, second)
        self._registers = [
            r for r in self._registers if r is not first and r is not second
        ]
        self._registers.append(merged)
        logger.debug(f"Merged {first} and {second} into {merged}")

        self._check_partition()
        return merged

    def entangle_qubits(self, name_a: str, name_b: str) -> QuantumRegister:
        """Merge the registers holding two qubits, :code:`name_a`'s first.

        :param str name_a: Qubit whose register goes on the left.
        :param str name_b: Qubit whose register goes on the right.

        :returns: The merged register.
        :rtype: QuantumRegister

        :raises RegisterMergeError: Both qubits already share a register.
        """
        register_a = self.register_of(name_a)
        register_b = self.register_of(name_b)
        if register_a is register_b:
            raise RegisterMergeError(
                f"{name_a} and {name_b} are already in {register_a}"
            )
        return self.merge_registers(register_a, register_b)

    def qubit_order(self) -> List[str]:
        """Concatenated register name orders, registers in canonical order."""
        order = []
        for register in self.get_quantum_registers():
            order.extend(register.get_qubit_names())
        return order

    def storage_size(self) -> int:
        """Total number of stored amplitudes across all registers."""
        return sum(2 ** r.num_qubits() for r in self._registers)

    def snapshot(
        self, pre_collapse: bool = False
    ) -> "QuantumRegisterCollection":
        """Independent copy of the partition.

        :param bool pre_collapse: Give every register that was measured its
            noop snapshot as live state.
        """
        clone = QuantumRegisterCollection.__new__(QuantumRegisterCollection)
        clone.machine_order = self.machine_order
        clone._machine_index = dict(self._machine_index)
        clone._registers = [r.copy(pre_collapse) for r in self._registers]
        return clone

    def _check_partition(self) -> None:
        names = sorted(q for r in self._registers for q in r.get_qubit_names())
        assert names == sorted(self.machine_order), (
            f"Register partition broken: {self._registers}"
        )
