from .engine import (
    F2,
    RATIONALS,
    FieldSpec,
    HomologyProfile,
    Verdict,
    boundary_matrix,
    euler_characteristic_check,
    is_cohen_macaulay,
    is_gorenstein,
    is_locally_gorenstein,
    parse_field,
    parse_fields,
    reduced_homology,
)
from .linalg import bareiss_rank, rank_mod_p
