"""Exceptions raised by the simulator.

Value errors from bad user input all derive from :class:`QSimError` and
:code:`ValueError`, so callers can catch either.
"""
from typing import Optional


class QSimError(Exception):
    """Base class for simulator errors."""


class DimensionMismatchError(QSimError, ValueError):
    pass


class UnknownNameError(QSimError, ValueError):
    """Unknown canonical state or gate name."""


class UnknownQubitError(QSimError, ValueError):
    pass


class InvalidIndexError(QSimError, ValueError):
    """Qubit position outside a register, or an illegal index pair."""


class NotBasisStateError(QSimError, ValueError):
    pass


class NotSeparableError(QSimError, ValueError):
    """State is not easily separable into canonical single-qubit states."""


class RegisterMergeError(QSimError, ValueError):
    pass


class ReorderError(QSimError, ValueError):
    """Requested qubits cannot be separated from the rest of the machine."""


class ParseError(QSimError, ValueError):
    """Syntax error in circuit source.

    :var int line: 1-based source line of the offending statement.
    :var str token: Offending token, empty if none applies.
    """

    def __init__(self, message: str, line: int, token: str = "") -> None:
        self.line = line
        self.token = token
        where = f"line {line}"
        if token:
            where += f", near {token!r}"
        super().__init__(f"{where}: {message}")


class ExecutionError(QSimError):
    """A statement failed while running a program.

    :var int line: Source line of the failing statement.
    :var Exception cause: Original error.
    """

    def __init__(self, line: int, cause: Optional[Exception] = None) -> None:
        self.line = line
        self.cause = cause
        super().__init__(f"line {line}: {cause}")
