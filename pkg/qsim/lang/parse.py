"""Parser for the circuit language.

Grammar, one or more statements per line::

    statement := op operand ("," operand)? ";"
    operand   := "q" "[" index "]"
    op        := h | t | tdg | s | sdg | x | y | z | id
               | cx | cnot | measure | bloch

Lines starting with :code:`#` and everything after :code:`//` are comments.
"""
import logging
import re
from typing import List, Tuple

from qsim.errors import ParseError

from .nodes import (
    BLOCH_TOKEN,
    CNOT_TOKENS,
    GATE_TOKENS,
    MEASURE_TOKEN,
    Statement,
    StatementKind,
)

logger = logging.getLogger(__name__)

DEFAULT_NUM_QUBITS = 5

_STATEMENT_RE = re.compile(r"^(?P<op>[A-Za-z_]\w*)(?:\s+(?P<args>.*))?$", re.S)
_OPERAND_RE = re.compile(r"^q\s*\[\s*(?P<index>\d+)\s*\]$")


def strip_comment(line: str) -> str:
    """Source text of a line without its comment, surrounding space removed."""
    line = line.split("//", 1)[0].strip()
    if line.startswith("#"):
        return ""
    return line


def _kind_of(op: str, line: int) -> StatementKind:
    if op in GATE_TOKENS:
        return StatementKind.GATE
    if op in CNOT_TOKENS:
        return StatementKind.CNOT
    if op == MEASURE_TOKEN:
        return StatementKind.MEASURE
    if op == BLOCH_TOKEN:
        return StatementKind.BLOCH
    raise ParseError("unknown operation", line, op)


def _parse_operand(text: str, line: int, num_qubits: int) -> int:
    match = _OPERAND_RE.match(text.strip())
    if match is None:
        raise ParseError("malformed operand, expected q[<index>]", line, text.strip())
    index = int(match.group("index"))
    if not 0 <= index < num_qubits:
        raise ParseError(
            f"qubit index outside 0..{num_qubits - 1}", line, text.strip()
        )
    return index


def _parse_statement(text: str, line: int, num_qubits: int) -> Statement:
    match = _STATEMENT_RE.match(text)
    if match is None:
        raise ParseError("malformed statement", line, text)

    op = match.group("op")
    kind = _kind_of(op, line)

    args = match.group("args")
    if args is None or not args.strip():
        raise ParseError("missing operand", line, op)
    operands: Tuple[int, ...] = tuple(
        _parse_operand(arg, line, num_qubits) for arg in args.split(",")
    )

    expected = 2 if kind is StatementKind.CNOT else 1
    if len(operands) != expected:
        raise ParseError(
            f"{op} takes {expected} operand(s), got {len(operands)}", line, op
        )
    if kind is StatementKind.CNOT and operands[0] == operands[1]:
        raise ParseError("control and target must differ", line, args.strip())

    return Statement(
        kind=kind,
        operands=operands,
        gate_token=op if kind is StatementKind.GATE else None,
        line=line,
    )


def parse(source: str, num_qubits: int = DEFAULT_NUM_QUBITS) -> List[Statement]:
    """Parse circuit source into statements.

    Parsing is pure; nothing is executed.

    :param str source: Program text.
    :param int num_qubits: Number of machine qubits operands may address.

    :returns: Statements in source order.
    :rtype: List[Statement]

    :raises ParseError: The first syntax error, with its line and token.
    """
    statements: List[Statement] = []
    for line_number, raw_line in enumerate(source.splitlines(), start=1):
        text = strip_comment(raw_line)
        if not text:
            continue
        if not text.endswith(";"):
            raise ParseError(
                "missing ';' terminator", line_number, text.split()[-1]
            )

        for chunk in text[:-1].split(";"):
            chunk = chunk.strip()
            if not chunk:
                raise ParseError("empty statement", line_number, ";")
            statements.append(_parse_statement(chunk, line_number, num_qubits))

    logger.debug(f"Parsed {len(statements)} statements")
    return statements
