from .ops import (
    ATOL,
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
