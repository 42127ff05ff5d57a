"""Hermitian algebraic-geometry codes, HOPI instances, classical baseline
solvers, and the closed-form DQI semicircle performance model."""

from .agcode import (
    HermitianCode,
    build_code,
    check_duality,
    dual_parameter,
    encode,
    min_distance_bruteforce,
    rr_basis,
)
from .curve import CurvePoint, HermitianCurve, genus, hermitian_curve, is_on_curve, rational_points
from .dqi_model import (
    ModelPoint,
    dqi_expected_fraction,
    ell_from_params,
    sweep_fig1a,
    sweep_fig1b,
    sweep_fig2,
)
from .gf import FieldElement, FieldSpec, field_new
from .hopi import (
    Assignment,
    HopiInstance,
    parse_instance,
    planted_instance,
    random_instance,
    read_instance,
    score,
    score_pm,
    serialize_instance,
    write_instance,
)
from .linalg import Matrix, mul_matrix, mul_vec, nullspace, rank, solve, submatrix_rows, transpose
from .solvers import (
    AnnealSchedule,
    SolveResult,
    best_of,
    brute_force_optimum,
    make_schedule,
    prange_expectation,
    prange_solve,
    simulated_annealing,
)

__version__ = "0.1.0"
