from .takayama import (
    DegreeVector,
    DepthReport,
    delta_a,
    delta_a_symbolic,
    depth_via_takayama,
    is_cm_power,
    is_cm_radical,
    is_cm_square,
    is_cm_symbolic_square,
    join_square_depth,
    local_cohomology_dim,
    search_space,
    search_space_size,
)
