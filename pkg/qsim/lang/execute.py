from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable, Dict, List, Tuple

from qsim.errors import ExecutionError, QSimError
from qsim.states import gate

from .nodes import Statement, StatementKind
from .parse import parse

if TYPE_CHECKING:
    from qsim.core import BlochCoords, QuantumComputer

logger = logging.getLogger(__name__)

StatementHandler = Callable[["QuantumComputer", Statement, "ExecutionReport"], None]

_STATEMENT_HANDLER_REGISTRY: Dict[StatementKind, StatementHandler] = {}


def register_statement_kind(kind: StatementKind) -> Callable:
    """Decorator registering the function that runs one kind of statement.

    :param StatementKind kind: Statement kind handled by the function.

    :returns: Inner function which registers the handler.
    """

    def _inner(_handler: StatementHandler) -> StatementHandler:
        _STATEMENT_HANDLER_REGISTRY[kind] = _handler
        return _handler

    return _inner


@dataclass(frozen=True)
class MeasurementRecord:
    """Outcome of one :code:`measure` statement.

    :var str qubit: Qubit named in the statement.
    :var Tuple[str, ...] register_names: Qubits collapsed with it, in
        register order.
    :var str outcome: Collapsed register as bits, in register order.
    """

    qubit: str
    register_names: Tuple[str, ...]
    outcome: str

    @property
    def bit(self) -> str:
        return self.outcome[self.register_names.index(self.qubit)]


@dataclass
class ExecutionReport:
    """What running a program produced.

    :var int statement_count: Statements executed.
    :var List[MeasurementRecord] measurements: Measurements in source order.
    :var Dict[str, BlochCoords] bloch: Last Bloch coordinates per qubit.
    """

    statement_count: int = 0
    measurements: List[MeasurementRecord] = field(default_factory=list)
    bloch: Dict[str, "BlochCoords"] = field(default_factory=dict)

    def measured_bits(self) -> Dict[str, str]:
        """Latest observed bit of every measured qubit.

        Qubits collapsed along with the named one count as measured.
        """
        bits: Dict[str, str] = {}
        for record in self.measurements:
            for name, bit in zip(record.register_names, record.outcome):
                bits[name] = bit
        return bits


@register_statement_kind(StatementKind.GATE)
def _run_gate(
    qc: QuantumComputer, statement: Statement, report: ExecutionReport
) -> None:
    qc.apply_gate(gate(statement.gate_name), statement.qubit_names[0])


@register_statement_kind(StatementKind.CNOT)
def _run_cnot(
    qc: QuantumComputer, statement: Statement, report: ExecutionReport
) -> None:
    control, target = statement.qubit_names
    qc.apply_cnot(control, target)


@register_statement_kind(StatementKind.MEASURE)
def _run_measure(
    qc: QuantumComputer, statement: Statement, report: ExecutionReport
) -> None:
    qubit = statement.qubit_names[0]
    register_names = tuple(
        qc.get_quantum_register_containing(qubit).get_qubit_names()
    )
    outcome = qc.measure(qubit)
    report.measurements.append(MeasurementRecord(qubit, register_names, outcome))


@register_statement_kind(StatementKind.BLOCH)
def _run_bloch(
    qc: QuantumComputer, statement: Statement, report: ExecutionReport
) -> None:
    qubit = statement.qubit_names[0]
    report.bloch[qubit] = qc.bloch(qubit)


def execute(qc: QuantumComputer, source: str) -> ExecutionReport:
    """Parse circuit source and run it on a machine.

    The whole source is parsed before anything runs, so a syntax error
    leaves the machine untouched.

    :param QuantumComputer qc: Machine to run on, not reset first.
    :param str source: Program text.

    :returns: Measurements, Bloch results and statement count.
    :rtype: ExecutionReport

    :raises ParseError: Syntax error anywhere in the source.
    :raises ExecutionError: A statement failed, e.g. :code:`bloch` on an
        entangled qubit. Earlier statements have already run.
    """
    statements = parse(source, qc.num_qubits)

    report = ExecutionReport()
    for statement in statements:
        handler = _STATEMENT_HANDLER_REGISTRY[statement.kind]
        try:
            handler(qc, statement, report)
        except QSimError as e:
            logger.debug(f"Statement on line {statement.line} failed: {e}")
            raise ExecutionError(statement.line, e) from e
        report.statement_count += 1

    logger.debug(f"Executed {report.statement_count} statements")
    return report
