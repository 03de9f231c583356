"""Probabilities, the :code:`|psi>=` / :code:`Pr(...)` text block and
single-qubit expectation values."""
import logging
from typing import List, Optional

import torch
from torch import Tensor

from qsim.errors import DimensionMismatchError, UnknownNameError
from qsim.linalg import ATOL, matvec
from qsim.states.gates import gate
from qsim.states.states import basis_label, num_qubits_of

logger = logging.getLogger(__name__)

# Basis states whose probability is below this are omitted when printing.
PRINT_EPS = 1e-10

_BASIS_OBSERVABLES = {"x": "X", "y": "Y", "z": "Z"}


def get_probabilities(state: Tensor) -> Tensor:
    """Probabilities of each basis state in canonical ordering.

    :param Tensor state: State vector.

    :returns: :code:`float64` tensor with entry k equal to
        :code:`|amplitude_k|^2`.
    :rtype: Tensor
    """
    return (state.abs() ** 2).to(torch.float64)


def sample_basis_index(
    state: Tensor,
    generator: Optional[torch.Generator] = None,
) -> int:
    """Draw one basis index with probability :code:`|amplitude_k|^2`."""
    probabilities = get_probabilities(state)
    index = torch.multinomial(probabilities, 1, generator=generator)
    return int(index.item())


def _format_coefficient(amplitude: complex) -> str:
    re, im = amplitude.real, amplitude.imag
    if abs(amplitude - 1) <= ATOL:
        return "+"
    if abs(im) <= ATOL:
        return f"{re:+.4f}"
    if abs(re) <= ATOL:
        return f"{im:+.4f}i"
    return f"+({re:.4f}{im:+.4f}i)"


def pretty_print(state: Tensor) -> str:
    """Render a state the way the IBM Quantum Experience transcript does.

    The first line is :code:`|psi>=` followed by the basis labels with
    non-negligible amplitude, each weighted by its amplitude to four places
    (an amplitude of exactly one is omitted). Then one
    :code:`Pr(|bits>)=p;` line per such basis state, :code:`p` to six places.

    Example for :code:`|10>`::

        |psi>=|10>
        Pr(|10>)=1.000000;

    :param Tensor state: State vector.

    :returns: The multi-line text block, without a trailing newline.
    :rtype: str
    """
    num_qubits = num_qubits_of(state)
    probabilities = get_probabilities(state)

    terms: List[str] = []
    lines: List[str] = []
    for index, probability in enumerate(probabilities.tolist()):
        if probability <= PRINT_EPS:
            continue
        label = basis_label(index, num_qubits)
        terms.append(f"{_format_coefficient(complex(state[index]))}|{label}>")
        lines.append(f"Pr(|{label}>)={probability:.6f};")

    header = "".join(terms)
    if header.startswith("+"):
        header = header[1:]
    return "\n".join([f"|psi>={header}"] + lines)


def expectation(state: Tensor, basis: str) -> float:
    """Expectation value of the Pauli observable for :code:`basis`.

    Diagonal is the x basis and circular is the y basis, so :code:`x`,
    :code:`y` and :code:`z` measure :code:`X`, :code:`Y` and :code:`Z`.

    :param Tensor state: Single-qubit state.
    :param str basis: One of :code:`x, y, z`.

    :returns: :code:`<psi|P|psi>`, a real number in :code:`[-1, 1]`.
    :rtype: float

    :raises DimensionMismatchError: Multi-qubit input.
    :raises UnknownNameError: Unknown basis letter.
    """
    if num_qubits_of(state) != 1:
        raise DimensionMismatchError(
            f"Expectation takes a single-qubit state, got {tuple(state.shape)}"
        )
    if basis not in _BASIS_OBSERVABLES:
        raise UnknownNameError(f"Unknown basis {basis!r}, expected x, y or z")

    observable = gate(_BASIS_OBSERVABLES[basis])
    value = complex(torch.vdot(state, matvec(observable, state)))
    assert abs(value.imag) <= ATOL, f"Non-real expectation {value}"
    return value.real
