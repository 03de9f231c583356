import math

import pytest
import torch

from qsim.errors import DimensionMismatchError
from qsim.linalg import (
    DTYPE,
    allclose,
    as_matrix,
    as_vector,
    conj_transpose,
    equal_up_to_global_phase,
    identity,
    is_unitary,
    kron,
    matvec,
    norm2,
)


def test_kron_leftmost_is_most_significant():
    zero = as_vector([1, 0])
    one = as_vector([0, 1])

    state = kron(one, zero)

    assert torch.equal(state, as_vector([0, 0, 1, 0]))
    assert kron(one, zero, one).argmax().item() == 5


def test_kron_matrices():
    x = as_matrix([[0, 1], [1, 0]])
    result = kron(identity(2), x)
    assert result.shape == (4, 4)
    assert torch.equal(result[:2, :2], x)
    assert torch.equal(result[2:, :2], torch.zeros((2, 2), dtype=DTYPE))


def test_kron_requires_operands():
    with pytest.raises(ValueError):
        kron()


def test_matvec():
    m = as_matrix([[0, 1j], [1, 0]])
    assert torch.equal(matvec(m, as_vector([1, 2])), as_vector([2j, 1]))


def test_matvec_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        matvec(identity(4), as_vector([1, 0]))


def test_as_vector_rejects_bad_input():
    with pytest.raises(ValueError):
        as_vector([])
    with pytest.raises(ValueError):
        as_vector([1, float("nan")])


def test_as_matrix_rejects_vectors():
    with pytest.raises(DimensionMismatchError):
        as_matrix([1, 0])


def test_conj_transpose():
    m = as_matrix([[1, 2j], [3, 4]])
    assert torch.equal(conj_transpose(m), as_matrix([[1, 3], [-2j, 4]]))


def random_matrix(generator, rows, cols):
    return torch.randn(rows, cols, dtype=DTYPE, generator=generator)


@pytest.mark.parametrize("seed", range(5))
def test_kron_is_associative(seed):
    generator = torch.Generator().manual_seed(seed)
    a = random_matrix(generator, 2, 2)
    b = random_matrix(generator, 2, 1)
    c = random_matrix(generator, 4, 2)
    assert allclose(kron(kron(a, b), c), kron(a, kron(b, c)))
    assert allclose(kron(a, b, c), kron(a, kron(b, c)))


@pytest.mark.parametrize("seed", range(5))
def test_conj_transpose_is_involution(seed):
    generator = torch.Generator().manual_seed(seed)
    m = random_matrix(generator, 3, 4)
    assert conj_transpose(m).shape == (4, 3)
    assert torch.equal(conj_transpose(conj_transpose(m)), m)


def test_norm2():
    v = as_vector([3, 4j]) / 5
    assert math.isclose(norm2(v), 1.0)


def test_allclose_shape_mismatch():
    assert not allclose(as_vector([1, 0]), as_vector([1, 0, 0, 0]))


@pytest.mark.parametrize("phase", [1, -1, 1j, -1j, complex(0.6, 0.8)])
def test_equal_up_to_global_phase(phase):
    v = as_vector([1, 1j]) / math.sqrt(2)
    assert equal_up_to_global_phase(phase * v, v)


def test_equal_up_to_global_phase_rejects_relative_phase():
    plus = as_vector([1, 1]) / math.sqrt(2)
    minus = as_vector([1, -1]) / math.sqrt(2)
    assert not equal_up_to_global_phase(plus, minus)
    assert not equal_up_to_global_phase(2 * plus, plus)


def test_is_unitary():
    h = as_matrix([[1, 1], [1, -1]]) / math.sqrt(2)
    assert is_unitary(h)
    assert not is_unitary(as_matrix([[1, 1], [0, 1]]))
    assert not is_unitary(as_matrix([[1, 0, 0], [0, 1, 0]]))
