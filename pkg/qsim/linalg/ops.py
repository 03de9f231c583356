"""Dense complex linear algebra on :code:`torch.complex128` tensors.

Vectors are 1-D tensors and matrices are 2-D tensors. States never exceed
32 amplitudes so everything stays dense.
"""
import logging
from functools import reduce
from typing import Any, Union

import torch
from torch import Tensor

from qsim.errors import DimensionMismatchError

logger = logging.getLogger(__name__)

DTYPE = torch.complex128
ATOL = 1e-10


def _check_finite(tensor: Tensor) -> Tensor:
    if not bool(torch.isfinite(tensor).all()):
        raise ValueError(f"Non-finite entries in tensor: {tensor}")
    return tensor


def as_vector(values: Union[Tensor, Any]) -> Tensor:
    """Coerce :code:`values` into a 1-D complex vector.

    :param values: Tensor or nested python sequence of numbers.

    :returns: A new 1-D :code:`complex128` tensor.
    :rtype: Tensor

    :raises ValueError: Empty input or non-finite entries.
    """
    vector = torch.as_tensor(values, dtype=DTYPE).reshape(-1).clone()
    if vector.numel() == 0:
        raise ValueError("Vectors must have at least one element")
    return _check_finite(vector)


def as_matrix(values: Union[Tensor, Any]) -> Tensor:
    """Coerce :code:`values` into a 2-D complex matrix.

    :raises DimensionMismatchError: Input is not two dimensional.
    """
    matrix = torch.as_tensor(values, dtype=DTYPE).clone()
    if matrix.dim() != 2 or matrix.numel() == 0:
        raise DimensionMismatchError(
            f"Expected a non-empty 2-D matrix, got shape {tuple(matrix.shape)}"
        )
    return _check_finite(matrix)


def identity(dim: int) -> Tensor:
    return torch.eye(dim, dtype=DTYPE)


def matvec(m: Tensor, v: Tensor) -> Tensor:
    """Matrix-vector product.

    :param Tensor m: Matrix with shape :code:`(r, c)`.
    :param Tensor v: Vector with :code:`c` elements.

    :returns: Vector with :code:`r` elements.
    :rtype: Tensor

    :raises DimensionMismatchError: :code:`m.cols != len(v)`.
    """
    if m.dim() != 2 or v.dim() != 1 or m.shape[1] != v.shape[0]:
        raise DimensionMismatchError(
            f"Cannot multiply matrix of shape {tuple(m.shape)} with vector "
            f"of shape {tuple(v.shape)}"
        )
    return m @ v


def kron(*operands: Tensor) -> Tensor:
    """Kronecker product of one or more vectors (or matrices).

    The leftmost operand varies slowest, so it is the most significant
    qubit of the canonical ordering: :code:`kron(one, zero)` is
    :code:`|10>`, basis index 2.

    :returns: The folded Kronecker product.
    :rtype: Tensor
    """
    if not operands:
        raise ValueError("kron needs at least one operand")
    return reduce(torch.kron, operands)


def conj_transpose(m: Tensor) -> Tensor:
    return m.mH.resolve_conj()


def norm2(v: Tensor) -> float:
    """Sum of squared moduli of the vector entries."""
    return float(torch.sum(v.abs() ** 2))


def allclose(a: Tensor, b: Tensor, atol: float = ATOL) -> bool:
    if a.shape != b.shape:
        return False
    return bool(torch.allclose(a, b, rtol=0.0, atol=atol))


def equal_up_to_global_phase(a: Tensor, b: Tensor, atol: float = ATOL) -> bool:
    """Check :code:`a == exp(i phi) * b` entrywise for some phase phi.

    The phase is estimated from the largest-modulus entry of :code:`b`.
    """
    if a.shape != b.shape:
        return False
    pivot = int(torch.argmax(b.abs()))
    if abs(complex(b[pivot])) <= atol:
        return allclose(a, b, atol)

    phase = complex(a[pivot]) / complex(b[pivot])
    if abs(abs(phase) - 1.0) > atol:
        return False
    return allclose(a, phase * b, atol)


def is_unitary(m: Tensor, atol: float = ATOL) -> bool:
    """Check :code:`U^dagger U == I` and :code:`U U^dagger == I`."""
    if m.dim() != 2 or m.shape[0] != m.shape[1]:
        return False
    eye = identity(m.shape[0])
    m_dagger = conj_transpose(m)
    return allclose(m_dagger @ m, eye, atol) and allclose(
        m @ m_dagger, eye, atol
    )
