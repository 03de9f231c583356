"""Command-line front end.

Usage::

    qsim run programs/swap.q --shots 100 --seed 7 --format json
    qsim checkcorpus programs/

Exit codes: 0 success, 1 corpus check failed, 2 parse or runtime error,
3 I/O error.
"""
import argparse
import json
import logging
import sys
from argparse import Namespace
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from torch import Tensor

from qsim.core import QuantumComputer
from qsim.errors import QSimError
from qsim.lang import ExecutionReport, Program, load_corpus
from qsim.states import get_probabilities, pretty_print
from qsim.utils import resolve_seed, setup_logger

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PROGRAM_ERROR = 2
EXIT_IO_ERROR = 3

FORMATS = ("text", "json")


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def _add_run_args(subparsers) -> None:
    parser = subparsers.add_parser("run", help="Run one program file")
    parser.add_argument("file", type=str)
    parser.add_argument("--shots", type=_positive_int, default=1)
    parser.add_argument(
        "--seed",
        type=int,
        help="Measurement seed, falls back to QSIM_SEED",
    )
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.set_defaults(command=run)


def _add_checkcorpus_args(subparsers) -> None:
    parser = subparsers.add_parser(
        "checkcorpus", help="Check every program below a directory"
    )
    parser.add_argument("dir", type=str)
    parser.add_argument("--seed", type=int, default=0)
    parser.set_defaults(command=checkcorpus)


def parse_args(argv: Optional[Sequence[str]] = None) -> Namespace:
    parser = argparse.ArgumentParser(
        prog="qsim", description="Ideal 5-qubit quantum computer simulator"
    )
    parser.add_argument("--log_level", type=str, default="warning")

    subparsers = parser.add_subparsers(dest="command_name", required=True)
    _add_run_args(subparsers)
    _add_checkcorpus_args(subparsers)

    return parser.parse_args(argv)


def _histogram_key(report: ExecutionReport, qc: QuantumComputer) -> str:
    bits = report.measured_bits()
    return "".join(
        bits[name] for name in qc.qubits.machine_order if name in bits
    )


def _final_state(
    qc: QuantumComputer, report: ExecutionReport
) -> Tuple[List[str], Tensor]:
    """Pre-collapse state of the measured qubits, else of the whole
    machine."""
    measured = [
        name for name in qc.qubits.machine_order if name in report.measured_bits()
    ]
    if measured:
        try:
            return measured, qc.reordered_state(measured, pre_collapse=True)
        except QSimError as e:
            logger.info(f"Showing all qubits, measured ones are entangled: {e}")

    order = list(qc.qubits.machine_order)
    return order, qc.reordered_state(order, pre_collapse=True)


def _render_text(
    order: List[str],
    state: Tensor,
    report: ExecutionReport,
    histogram: Dict[str, int],
    args: Namespace,
) -> str:
    lines = [f"order: {','.join(order)}", pretty_print(state)]
    for qubit, coords in report.bloch.items():
        lines.append(
            f"bloch {qubit}: x={coords.x:.6f} y={coords.y:.6f} z={coords.z:.6f}"
        )
    if histogram:
        lines.append(f"histogram (shots={args.shots}, seed={args.seed}):")
        for key in sorted(histogram):
            lines.append(f"{key}: {histogram[key]}")
    return "\n".join(lines)


def _render_json(
    order: List[str],
    state: Tensor,
    report: ExecutionReport,
    histogram: Dict[str, int],
    args: Namespace,
) -> str:
    document = {
        "order": order,
        "probabilities": get_probabilities(state).tolist(),
        "histogram": {key: histogram[key] for key in sorted(histogram)},
        "bloch": {q: list(c.as_tuple()) for q, c in report.bloch.items()},
        "seed": args.seed,
        "shots": args.shots,
    }
    return json.dumps(document, indent=2)


def run(args: Namespace) -> int:
    """Run a program once per shot, each shot on a fresh machine seeded
    with :code:`seed + shot`, and print the last shot's state."""
    args.seed = resolve_seed(args.seed)
    try:
        program = Program.from_file(args.file)
    except OSError as e:
        print(f"error: cannot read {args.file}: {e}", file=sys.stderr)
        return EXIT_IO_ERROR
    except QSimError as e:
        print(f"error: {args.file}: {e}", file=sys.stderr)
        return EXIT_PROGRAM_ERROR

    histogram: Counter = Counter()
    try:
        for shot in range(args.shots):
            qc, report = program.run(seed=args.seed + shot)
            if report.measurements:
                histogram[_histogram_key(report, qc)] += 1
        order, state = _final_state(qc, report)
    except QSimError as e:
        print(f"error: {args.file}: {e}", file=sys.stderr)
        return EXIT_PROGRAM_ERROR
    logger.debug(f"Ran {args.file} for {args.shots} shots")

    render = _render_json if args.format == "json" else _render_text
    print(render(order, state, report, dict(histogram), args))
    return EXIT_OK


def checkcorpus(args: Namespace) -> int:
    """Run every corpus program and compare with its expectations."""
    try:
        programs = load_corpus(args.dir)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO_ERROR
    except QSimError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PROGRAM_ERROR

    if not programs:
        logger.warning(f"No programs found in {args.dir}")
        print("0 programs checked")
        return EXIT_OK

    failures = 0
    for program in programs:
        try:
            qc, _ = program.run(seed=args.seed)
            passed = program.check(qc)
        except QSimError as e:
            logger.info(f"{program.name} raised: {e}")
            passed = False
        failures += not passed
        print(f"{'PASS' if passed else 'FAIL'}  {program.name}")

    print(f"{len(programs) - failures}/{len(programs)} programs passed")
    return EXIT_CHECK_FAILED if failures else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    setup_logger(args.log_level)
    return args.command(args)
