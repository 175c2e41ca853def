"""Exact computations for metabelian groups A x| Q with A = Z[x, x^-1, f_i^-1, 1/k]."""

from .charspace import (
    Character,
    ConeFamily,
    ConeSpec,
    LinearCondition,
    TameResult,
    build_V,
    cone_contains,
    family_contains,
    halfspace_test,
    m_tame_check,
    parse_character,
    plain_sum_check,
)
from .cohomology import (
    CyclicGroupOrder,
    coinvariants_reduce,
    fixed_point_order,
    fixed_point_order_bruteforce,
    h2_report,
    h2_theoremC,
)
from .exactalg import (
    GroupElement,
    InvalidSetup,
    LocalizedElement,
    QMonomial,
    Setup,
    g_n_setup,
    loc_arith,
    loc_normalize,
    module_action,
    monomial_image,
    setup_validate,
)
from .geometry import (
    StabilizerData,
    TreeContext,
    TreeVertex,
    act_on_vertex,
    av_membership,
    compute_beta,
    connectivity_precondition,
    crt_normalize,
    line_intersection_sup,
    orbit_reps,
    stabilizer_data,
    tree_ball,
    tree_context,
    w_project_ceil,
)
from .polynomial import Poly, poly_resultant
from .sigma import (
    SearchBounds,
    SigmaVerdict,
    Witness,
    centralizer_witness_search,
    sigma_c_theoremB_data,
    verify_theoremB,
)
from .valuations import INF, ValuationId, char_of_valuation, degree, fadic, padic, val_eval

__version__ = "0.1.0"
