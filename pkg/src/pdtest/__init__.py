"""Positive definiteness tests for unidiagonal triangle-integral matrices by bigraph inflations."""
from ._backend import kernels as _kernels
from .bigraph import (
    GramBigraph,
    InputMatrix,
    coefficient_precheck,
    connected_components,
    eval_form,
    is_connected,
    symmetrize,
    triangularise,
)
from .dynkin import DynkinType, dynkin_bigraph, recognize_dynkin
from .errors import (
    BudgetExceeded,
    CoefficientOverflow,
    Disconnected,
    DimensionMismatch,
    MatrixParseError,
    NotDefined,
    NotTriangleIntegral,
    NotUnidiagonal,
    PdTestError,
    VertexOutOfRange,
)
from .generators import gen_nakayama, gen_random_positive, gen_random_uti, random_positive_bigraph
from .inflation import (
    ExecutionLog,
    InflationStep,
    Strategy,
    inflate_at_pair,
    inflate_at_vertex,
    inflations_at_pair_bounded,
    inflations_to_pos_sincere_root,
    make_rng,
    select_dotted_edge,
)
from .oracle import brute_force_roots, gauss_pos_def_test, has_positive_sincere_root
from .positivity import (
    TestOutcome,
    igfpos,
    igfposs,
    pos_def_test_by_inflations,
    pos_def_test_by_root_inflations,
)
from .textio import format_matrix, parse_matrix, read_matrix, write_matrix

BACKEND = _kernels.NAME

__version__ = "0.1.0"
