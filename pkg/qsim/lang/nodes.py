from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple

# Circuit-language token -> registered gate name.
GATE_TOKENS: Dict[str, str] = {
    "h": "H",
    "t": "T",
    "tdg": "Tdagger",
    "s": "S",
    "sdg": "Sdagger",
    "x": "X",
    "y": "Y",
    "z": "Z",
    "id": "I",
}
CNOT_TOKENS: Tuple[str, ...] = ("cx", "cnot")
MEASURE_TOKEN = "measure"
BLOCH_TOKEN = "bloch"


class StatementKind(enum.Enum):
    GATE = "gate"
    CNOT = "cnot"
    MEASURE = "measure"
    BLOCH = "bloch"


@dataclass(frozen=True)
class Statement:
    """One parsed statement of circuit source.

    :var StatementKind kind: What the statement does.
    :var Tuple[int, ...] operands: Qubit indices, :code:`(control, target)`
        for CNOT.
    :var Optional[str] gate_token: Source token of a one-qubit gate.
    :var int line: 1-based source line, not part of equality.
    """

    kind: StatementKind
    operands: Tuple[int, ...]
    gate_token: Optional[str] = None
    line: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        expected = 2 if self.kind is StatementKind.CNOT else 1
        assert len(self.operands) == expected, (
            f"{self.kind.value} takes {expected} operand(s), got "
            f"{self.operands}"
        )
        assert (self.gate_token is not None) == (
            self.kind is StatementKind.GATE
        )

    @property
    def gate_name(self) -> Optional[str]:
        if self.gate_token is None:
            return None
        return GATE_TOKENS[self.gate_token]

    @property
    def qubit_names(self) -> Tuple[str, ...]:
        return tuple(f"q{i}" for i in self.operands)

    def render(self) -> str:
        if self.kind is StatementKind.GATE:
            op = self.gate_token
        elif self.kind is StatementKind.CNOT:
            op = CNOT_TOKENS[0]
        else:
            op = self.kind.value
        args = ", ".join(f"q[{i}]" for i in self.operands)
        return f"{op} {args};"


def render(statements: Iterable[Statement]) -> str:
    """Canonical source for statements, one per line, :code:`cx` for CNOT.

    Comments and expectation headers are not reproduced.
    """
    return "".join(f"{s.render()}\n" for s in statements)
