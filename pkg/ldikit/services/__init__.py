# ldikit/services/__init__.py
"""
Domain operations on stabilizer codes.
"""
from .symplectic import (
    commutes_mod,
    parse_local_dimension,
    pauli_weight,
    phi_decode,
    phi_encode,
    product_matrix,
    require_commuting,
    symplectic_product,
    syndrome_of,
)
from .linalg import (
    IntegerLattice,
    ModularSpan,
    canonical_form,
    integer_kernel,
    integer_rank,
    nullspace_mod,
    rank_gf,
    rank_mod,
    rank_report,
    replay_ops,
    restore_frame,
    rref_mod,
    smith_normal_form,
    solve_integer,
)
from .ldi import b_entry_bound, make_ldi, sign_lift, verify_ldi
from .distance import (
    classify_error,
    d_star,
    d_star_enumerated,
    distance_mod,
    logical_operators,
    phase_space_distance,
    phase_space_norm,
)
from .bounds import distance_promise, pstar_alternative, pstar_css, pstar_hadamard, report_for
from .cv_export import additive_commutator, logical_quadratures, nullifier_of, to_nullifiers
from .catalog import (
    hamming_family,
    lookup,
    random_commuting_code,
    steane_ldi,
    steane_standard,
    toric_code,
    two_register_example,
)
from .statecheck import apply_pauli, stabilized_state, stabilizes

__all__ = [
    "commutes_mod",
    "parse_local_dimension",
    "pauli_weight",
    "phi_decode",
    "phi_encode",
    "product_matrix",
    "require_commuting",
    "symplectic_product",
    "syndrome_of",
    "IntegerLattice",
    "ModularSpan",
    "canonical_form",
    "integer_kernel",
    "integer_rank",
    "nullspace_mod",
    "rank_gf",
    "rank_mod",
    "rank_report",
    "replay_ops",
    "restore_frame",
    "rref_mod",
    "smith_normal_form",
    "solve_integer",
    "b_entry_bound",
    "make_ldi",
    "sign_lift",
    "verify_ldi",
    "classify_error",
    "d_star",
    "d_star_enumerated",
    "distance_mod",
    "logical_operators",
    "phase_space_distance",
    "phase_space_norm",
    "distance_promise",
    "pstar_alternative",
    "pstar_css",
    "pstar_hadamard",
    "report_for",
    "additive_commutator",
    "logical_quadratures",
    "nullifier_of",
    "to_nullifiers",
    "hamming_family",
    "lookup",
    "random_commuting_code",
    "steane_ldi",
    "steane_standard",
    "toric_code",
    "two_register_example",
    "apply_pauli",
    "stabilized_state",
    "stabilizes",
]
