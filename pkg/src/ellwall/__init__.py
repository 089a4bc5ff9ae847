"""Exact-arithmetic Bridgeland stability data on Weierstrass elliptic
surfaces: lattice and frame arithmetic, cohomological transforms of Chern
characters, central charges and limit phases along the volume section,
potential walls with asymptotic classification, and finite enumeration of
candidate destabilizers."""

from .charge import (
    EQUAL,
    PRECEDES,
    SUCCEEDS,
    ChargeValue,
    LimitCharge,
    PhaseLimit,
    central_charge,
    charge_sq,
    cross_coefficients,
    limit_charge,
    limit_compare,
    phase_limit,
    re_z_identity_check,
)
from .chern import (
    POS_INFINITY,
    ChernCharacter,
    DiscriminantReport,
    GiesekerSlope,
    bogomolov_constant,
    character,
    discriminants,
    gieseker_slope_1dim,
    is_bogomolov_type,
    line_bundle_twist,
    slope,
    torsion_free_threshold,
    twist,
    twisted_euler,
)
from .destabilize import (
    CandidateReport,
    EnumerationRequest,
    LineBundleReport,
    candidate_checks,
    enumerate_destabilizers,
    line_bundle_analysis,
)
from .errors import (
    DimensionError,
    DomainError,
    EllwallError,
    EmptySectionError,
    InputError,
    InvariantError,
    NonGenericError,
    NotInHeartError,
    UnsupportedRankError,
)
from .fmtransform import composition_check, phi, phi_hat, wit_sign
from .nslattice import (
    SQ,
    UV,
    ConeMembership,
    DivisorClass,
    ExtraSection,
    Frame,
    FrameDecomposition,
    LambdaQ,
    LambdaT,
    QuadraticRoot,
    ShearPoint,
    SurfaceConfig,
    VolumeSectionParams,
    cone_membership,
    decompose,
    elliptic_frame,
    intersect,
    lambda_t_to_uv,
    make_frame,
    section_q,
    shear,
    to_lambda_q,
    unshear,
    uv_on_section,
    uv_to_lambda_t,
    volume_params,
    volume_section_u,
)
from .walls import (
    AsymptoteClass,
    FactoredCharacter,
    OneDimCharacter,
    OneDimPartner,
    PartnerCharacter,
    WallSQ,
    WallValue,
    bertram_wall,
    classify_asymptote_dim1,
    classify_asymptote_dim2,
    reduce_by_twist,
    shift_wall,
    wall_lambda_q,
    wall_lambda_q_dim1,
)

__version__ = "0.1.0"
