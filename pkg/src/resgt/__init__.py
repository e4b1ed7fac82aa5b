"""Non-adaptive group testing over the Boolean semifield.

Testing schemes are residuated maps x -> x @ H; the residual
y -> not(not(y) @ H^T) is the decoder.  d-disjunct matrices recover any
pattern of up to d positives exactly, and incidence structures of
partial linear spaces provide certified constructions.
"""

from .boolsemi import (
    BoolMatrix,
    BoolVec,
    DimensionMismatch,
    FormatError,
    ball_enumerate,
    ball_size,
    colspace_member,
    hamming_distance,
    hamming_weight,
    leq,
    linearly_independent,
    mat_vec_mul,
    matrix_from_text,
    matrix_to_text,
    negate,
    vec_add,
    vec_mul,
    vector_from_text,
    vector_to_text,
)
from .conditions import (
    CertificationFailed,
    PropertyReport,
    certify_scheme,
    check_d_dis,
    check_d_rev_direct,
    check_d_rev_via_ball,
    check_d_rev_via_colspace,
    check_d_rev_via_img,
    max_d,
)
from .geometry import (
    GQDescriptor,
    GeometryError,
    PartialLinearSpace,
    construct_grid,
    construct_symplectic,
    dual_pls,
    incidence_matrix,
    is_generalized_quadrangle,
    to_testing_scheme,
    validate_pls,
)
from .residuation import (
    ResiduatedPair,
    SizeGuardExceeded,
    TestingScheme,
    closure,
    decode,
    encode,
    enumerate_closed,
    enumerate_kernel,
    kernel,
    scheme_from_text,
    scheme_to_text,
    verify_residuated_pair,
)
from .simulation import (
    CampaignStats,
    PatternModel,
    TrialRecord,
    campaign_csv,
    run_campaign,
    run_trial,
    sample_pattern,
    stats_text,
)

__version__ = "0.1.0"
