import pytest

from qsim.core import BlochCoords, QuantumComputer
from qsim.errors import ExecutionError, NotSeparableError, ParseError
from qsim.lang import ExecutionReport, StatementKind, execute, register_statement_kind
from qsim.lang.execute import _STATEMENT_HANDLER_REGISTRY


def test_every_statement_kind_has_a_handler():
    assert set(_STATEMENT_HANDLER_REGISTRY) == set(StatementKind)


def test_execute_swap(qc, swap_code):
    report = execute(qc, swap_code)

    assert report.statement_count == 10
    assert [m.qubit for m in report.measurements] == ["q1", "q2"]
    assert report.measurements[0].register_names == ("q1", "q2")
    assert report.measurements[0].outcome == "10"
    assert report.measured_bits() == {"q1": "1", "q2": "0"}
    assert qc.probabilities_equal(["q1", "q2"], [0, 0, 1, 0])


def test_execute_is_a_method(qc, swap_code):
    assert isinstance(qc.execute(swap_code), ExecutionReport)


def test_execute_empty_source(qc):
    report = execute(qc, "")
    fresh = QuantumComputer(seed=0)
    assert report.statement_count == 0
    assert report.measurements == []
    for name in ("q0", "q1", "q2", "q3", "q4"):
        assert qc.get_quantum_register_containing(
            name
        ) == fresh.get_quantum_register_containing(name)


def test_bell_measurement_keeps_snapshot(make_qc, bell_code):
    for seed in range(10):
        qc = make_qc(seed)
        report = execute(qc, bell_code)
        (record,) = report.measurements
        assert record.outcome in ("00", "11")
        assert record.bit == record.outcome[0]
        assert report.measured_bits() == {"q0": record.bit, "q1": record.bit}
        assert qc.probabilities_equal(
            ["q0", "q1"], [0.5, 0, 0, 0.5], pre_collapse=True
        )


def test_bloch_recorded(qc):
    report = execute(qc, "h q[2]; s q[2]; bloch q[2];")
    assert report.bloch["q2"].isclose(BlochCoords(0, 1, 0))


def test_parse_error_leaves_machine_untouched(qc):
    with pytest.raises(ParseError) as info:
        execute(qc, "h q[0];\ncx q[0], q[1];\nfoo q[1];")
    assert info.value.line == 3
    assert qc.num_registers() == 5
    assert qc.bloch_coords_equal("q0", (0, 0, 1))


def test_runtime_error_carries_line(qc):
    with pytest.raises(ExecutionError) as info:
        execute(qc, "h q[0];\ncx q[0], q[1];\nbloch q[1];")
    assert info.value.line == 3
    assert isinstance(info.value.cause, NotSeparableError)


def test_register_statement_kind_overrides_handler(qc):
    original = _STATEMENT_HANDLER_REGISTRY[StatementKind.BLOCH]
    calls = []

    @register_statement_kind(StatementKind.BLOCH)
    def _record_bloch(qc, statement, report):
        calls.append(statement.qubit_names)

    try:
        execute(qc, "bloch q[3];")
    finally:
        register_statement_kind(StatementKind.BLOCH)(original)
    assert calls == [("q3",)]
