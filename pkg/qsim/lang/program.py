from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Dict, List, Optional, Tuple, Union

from qsim.errors import ParseError, QSimError

from .execute import ExecutionReport, execute
from .parse import parse

if TYPE_CHECKING:
    from qsim.core import QuantumComputer

logger = logging.getLogger(__name__)

PROGRAM_SUFFIX = ".q"

_HEADER_RE = re.compile(r"^#\s*expect-(?P<key>[a-z]+)\s*:\s*(?P<value>.*)$")

BlochTriple = Tuple[float, float, float]


def _parse_floats(text: str, line: int) -> Tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise ParseError("expected comma-separated numbers", line, text) from None


@dataclass
class Program:
    """Circuit source plus the results it is expected to produce.

    :var str name: Identifier, the corpus-relative path for files.
    :var str code: Program text, headers included.
    :var Optional[Tuple[str, ...]] order: Qubits the probabilities refer
        to, increasing machine order.
    :var Optional[Tuple[float, ...]] result_probability: Expected outcome
        probabilities over :code:`order`.
    :var Dict[str, BlochTriple] bloch_vals: Expected Bloch coordinates per
        qubit.
    """

    name: str
    code: str
    order: Optional[Tuple[str, ...]] = None
    result_probability: Optional[Tuple[float, ...]] = None
    bloch_vals: Dict[str, BlochTriple] = field(default_factory=dict)

    @classmethod
    def from_source(cls, code: str, name: str = "<source>") -> "Program":
        """Build a program from text, reading its :code:`# expect-*` headers.

        Headers::

            # expect-order: q1,q2
            # expect-prob: 0,0,1,0
            # expect-bloch: q0 = 0,0,1

        Without :code:`expect-order` the probabilities refer to the first
        :code:`log2(len(prob))` machine qubits.

        :raises ParseError: The code or a header is malformed.
        """
        parse(code)

        order = None
        probability = None
        order_line = prob_line = 0
        bloch_vals: Dict[str, BlochTriple] = {}
        for line_number, line in enumerate(code.splitlines(), start=1):
            match = _HEADER_RE.match(line.strip())
            if match is None:
                continue
            key, value = match.group("key"), match.group("value").strip()
            if key == "order":
                order = tuple(n.strip() for n in value.split(","))
                order_line = line_number
            elif key == "prob":
                probability = _parse_floats(value, line_number)
                prob_line = line_number
            elif key == "bloch":
                qubit, sep, coords = value.partition("=")
                triple = _parse_floats(coords, line_number)
                if not sep or len(triple) != 3:
                    raise ParseError(
                        "expected '<qubit> = x,y,z'", line_number, value
                    )
                bloch_vals[qubit.strip()] = triple
            else:
                raise ParseError("unknown expectation header", line_number, key)

        if probability is not None:
            num_qubits = int(math.log2(len(probability)))
            if num_qubits < 1 or 2**num_qubits != len(probability):
                raise ParseError(
                    "number of probabilities must be a power of two, at least 2",
                    prob_line,
                    str(len(probability)),
                )
            if order is None:
                order = tuple(f"q{i}" for i in range(num_qubits))
            if len(order) != num_qubits:
                raise ParseError(
                    f"expect-order names {len(order)} qubits, "
                    f"expect-prob covers {num_qubits}",
                    order_line or prob_line,
                    ",".join(order),
                )

        return cls(
            name=name,
            code=code,
            order=order,
            result_probability=probability,
            bloch_vals=bloch_vals,
        )

    @classmethod
    def from_file(
        cls, path: Union[str, Path], name: Optional[str] = None
    ) -> "Program":
        """Read a UTF-8 program file.

        :raises OSError: The file cannot be read.
        :raises ParseError: The file is not valid UTF-8.
        """
        path = Path(path)
        data = path.read_bytes()
        try:
            code = data.decode("utf-8")
        except UnicodeDecodeError as e:
            line = data.count(b"\n", 0, e.start) + 1
            raise ParseError(
                f"invalid UTF-8 at byte offset {e.start}",
                line,
                data[e.start : e.end].hex(),
            ) from None
        return cls.from_source(code, name or str(path))

    @property
    def has_expectations(self) -> bool:
        return self.result_probability is not None or bool(self.bloch_vals)

    def run(
        self,
        qc: Optional[QuantumComputer] = None,
        seed: Optional[int] = None,
    ) -> Tuple[QuantumComputer, ExecutionReport]:
        """Execute on :code:`qc`, or on a fresh machine seeded with
        :code:`seed`."""
        if qc is None:
            from qsim.core import QuantumComputer

            qc = QuantumComputer(seed=seed)
        return qc, execute(qc, self.code)

    def check(self, qc: QuantumComputer) -> bool:
        """Compare a machine that ran this program with the expectations.

        Registers that were measured are compared through their
        pre-collapse snapshots, so expectations describe the superposition.
        A mismatch, or qubits that cannot be separated out, gives
        :code:`False`.
        """
        if not self.has_expectations:
            logger.warning(f"{self.name}: no expectations to check")
            return True

        if self.result_probability is not None:
            try:
                ok = qc.probabilities_equal(
                    self.order, self.result_probability, pre_collapse=True
                )
            except QSimError as e:
                logger.warning(f"{self.name}: {e}")
                ok = False
            if not ok:
                logger.info(f"{self.name}: probabilities differ")
                return False

        for qubit, coords in self.bloch_vals.items():
            try:
                ok = qc.bloch_coords_equal(qubit, coords, pre_collapse=True)
            except QSimError as e:
                logger.warning(f"{self.name}: {e}")
                ok = False
            if not ok:
                logger.info(f"{self.name}: Bloch coordinates of {qubit} differ")
                return False

        return True


def load_corpus(directory: Union[str, Path]) -> List[Program]:
    """Load every :code:`*.q` file below a directory.

    :returns: Programs sorted by path relative to :code:`directory`, which
        is also their name.
    :rtype: List[Program]

    :raises FileNotFoundError: :code:`directory` does not exist.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"No corpus directory {directory}")

    paths = sorted(
        directory.rglob(f"*{PROGRAM_SUFFIX}"),
        key=lambda p: p.relative_to(directory).as_posix(),
    )
    return [
        Program.from_file(p, p.relative_to(directory).as_posix()) for p in paths
    ]
