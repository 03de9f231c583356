"""Swap the states of q1 and q2 three ways and print the same result.

1. Circuit-language source run by :code:`QuantumComputer.execute`.
2. Direct :code:`QuantumComputer` method calls.
3. Plain state and gate algebra without any register bookkeeping.
"""
import argparse
from argparse import Namespace

from qsim.core import QuantumComputer
from qsim.linalg import kron, matvec
from qsim.states import canonical_state, cnot, gate, lift_single, pretty_print
from qsim.utils import setup_logger

SWAP_CODE = """\
x q[2];
cx q[1], q[2];
h q[1];
h q[2];
cx q[1], q[2];
h q[1];
h q[2];
cx q[1], q[2];
measure q[1];
measure q[2];
"""


def args() -> Namespace:
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--log_level", type=str, default="warning")
    return parser.parse_args()


def swap_with_source(seed: int) -> str:
    qc = QuantumComputer(seed=seed)
    qc.execute(SWAP_CODE)
    return pretty_print(qc.get_quantum_register_containing("q1").get_state())


def swap_with_calls(seed: int) -> str:
    qc = QuantumComputer(seed=seed)
    qc.apply_gate(gate("X"), "q2")
    qc.apply_cnot("q1", "q2")
    qc.apply_gate(gate("H"), "q1")
    qc.apply_gate(gate("H"), "q2")
    qc.apply_cnot("q1", "q2")
    qc.apply_gate(gate("H"), "q1")
    qc.apply_gate(gate("H"), "q2")
    qc.apply_cnot("q1", "q2")
    qc.measure("q1")
    qc.measure("q2")
    return pretty_print(qc.get_quantum_register_containing("q1").get_state())


def swap_with_algebra() -> str:
    q1 = canonical_state("zero")
    q2 = matvec(gate("X"), canonical_state("zero"))

    cnot_12 = cnot(0, 1, 2)
    h_1 = lift_single(gate("H"), 0, 2)
    h_2 = lift_single(gate("H"), 1, 2)

    state = matvec(cnot_12, kron(q1, q2))
    state = matvec(h_2, matvec(h_1, state))
    state = matvec(cnot_12, state)
    state = matvec(h_2, matvec(h_1, state))
    state = matvec(cnot_12, state)
    return pretty_print(state)


def main(args: Namespace) -> None:
    setup_logger(args.log_level)
    results = {
        "circuit source": swap_with_source(args.seed),
        "QuantumComputer calls": swap_with_calls(args.seed),
        "state algebra": swap_with_algebra(),
    }
    for mode, text in results.items():
        print(f"== {mode}")
        print(text)
    assert len(set(results.values())) == 1, "Swap modes disagree"


if __name__ == "__main__":
    main(args())
