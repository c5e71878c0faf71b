"""hexsat: exact geometry, CNF encoding and solving for empty-hexagon search."""

from .geometry import (
    Orientation,
    Point,
    check_split_hull,
    find_empty_triangle,
    has_convex_kgon,
    has_empty_kgon,
    hull_membership,
    in_general_position,
    is_empty_triangle_for,
    point,
    pt_in_triangle_hull,
    pt_in_triangle_sigma,
    sigma,
)
from .canon import (
    CanonicalConfig,
    SigmaEquivalence,
    canonicalize,
    distinct_x_shear,
    lex_condition_holds,
    verify_sigma_equiv,
)
from .encoder import (
    Cnf,
    StructuredVar,
    VarMap,
    allocate_vars,
    encode_gon6,
    encode_hole6,
    encode_lex,
    encode_naive_hole,
    read_dimacs,
    write_dimacs,
)
from .witness import Assignment, build_tau, decode_model, eval_cnf
from .solver import SolveResult, SolverConfig, run_case, solve

__version__ = "0.1.0"
