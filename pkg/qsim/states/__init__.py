from .gates import (
    change_basis,
    cnot,
    gate,
    gate_names,
    lift_single,
    register_gate,
)
from .probability import (
    expectation,
    get_probabilities,
    pretty_print,
    sample_basis_index,
)
from .separability import extract_qubit, try_separate_all, try_separate_z
from .states import (
    CANONICAL_STATE_NAMES,
    basis_label,
    basis_state,
    canonical_state,
    canonical_state_name,
    num_qubits_of,
    state_from_string,
    string_from_state,
)
