"""Snake graphs, m-dimer covers, Lambda-matrix products and generalised continued fractions."""
from .bracket import bordered_bracket, bracket, bracket_recurrence_step, normalize_cf_for_bracket
from .enumeration import (
    EdgeMultiset,
    RppLabeling,
    count_m_dimers,
    dimer_to_lattice_path,
    enumerate_m_dimers,
    enumerate_m_lattice_paths,
    path_to_rpp,
    rank_generating_function,
)
from .gcf import (
    CfVector,
    CubicData,
    LimitEnclosure,
    Word,
    cf_vector_matrix,
    cf_vector_recursive,
    invert_r_m,
    periodic_cubic,
    polygon_diagonal,
    r_limit,
    r_real,
    sample_r_curve,
)
from .genfun import (
    F_at_q1,
    linear_extensions_with_stats,
    principal_specialization,
    q_binomial,
    q_fibonacci,
    quasi_sym_poly,
    series_in_x,
    stanley_F,
    stanley_U,
    unimodality_report,
)
from .kernels import BACKEND
from .linalg import BigMatrix, lambda_matrix, lambda_product, lr_word_product, multichoose, r_power
from .qpoly import QPolynomial, QXRational
from .snake import (
    ContinuedFraction,
    FencePoset,
    Poset,
    PrecisionExhausted,
    SignSequence,
    SnakeGraph,
    build_snake,
    cf_to_sign_sequence,
    cf_value,
    dual_cf,
    dual_snake,
    fence_poset_of,
    real_to_cf,
)

__version__ = "0.1.0"
