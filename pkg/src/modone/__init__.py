"""modone: exact-arithmetic tools for fractional parts of geometric orbits,
mechanical binary words, and certified oscillation of their power series."""

from .exactnum import (
    CertifiedValue,
    ExactRational,
    PrecisionExhausted,
    Rational,
    RealValue,
    RefinableStream,
    SqrtRational,
    approx,
    ceil_certified,
    decimal_str,
    floor_certified,
    format_rational,
    frac_certified,
    parse_rational,
    rational_value,
    real_add,
    real_neg,
    real_scale,
    real_sub,
    sqrt_value,
)
from .words import (
    Word,
    WordStream,
    ZeroBlockProfile,
    balance_discrepancy,
    detect_period,
    find_pattern,
    left_extension_pair,
    subword_complexity,
    zero_block_profile,
)
from .sturmian import (
    ExtremalSpec,
    SturmianSpec,
    Variant,
    block_lengths,
    extremal_stream,
    extremal_word,
    fibonacci_spec,
    marker_positions,
    partial_sum,
    partial_sums,
    sturmian_letter,
    sturmian_prefix,
    sturmian_stream,
)
from .series import (
    BoundedSeq,
    InsufficientPrefix,
    OscillationReport,
    default_terms,
    eval_series,
    oscillation,
    tail_radius,
    telescope_residual,
    window_midpoints,
)
from .orbit import (
    Orbit,
    OrbitParams,
    OrbitRow,
    Theorem1Report,
    digit_identity_check,
    orbit_row,
    series_equals_py,
    t_sequence,
    theorem1_gap,
)
from .verify import (
    EscalationReport,
    ExtensionPairNotFound,
    IdentityKind,
    ProofIdentity,
    ProofIdentityReport,
    StructureAudit,
    check_proof_identities,
    contradiction_witness,
    equality_identities,
    mh_escalation,
    mh_escalation_sweep,
    structure_audit,
)

__version__ = "0.1.0"
