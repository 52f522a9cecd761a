"""Exact simulator and analysis toolkit for LOCC-assisted quantum secret
sharing built from arbitrary classical linear codes.

The heavy lifting lives in the C++ extension ``qsslocc._core``; this package
re-exports its public surface. Subsets passed to the Python API are 0-based;
the CLI and file formats number sites from 1.
"""

from ._core import (
    Budgets,
    CollisionWitness,
    DecodeIsometry,
    Field,
    GFMatrix,
    GFVector,
    LinearCode,
    MeasurementRecord,
    ProtocolTranscript,
    RankCriterionReport,
    Secret,
    StateVector,
    SubsetReport,
    # errors
    Error,
    NonPrimeCharacteristic,
    ReduciblePolynomial,
    NoBuiltinPolynomial,
    FieldMismatch,
    DivisionByZero,
    DimensionMismatch,
    IndexOutOfRange,
    EmptySelection,
    BudgetExceeded,
    InvalidSubset,
    NotAssisted,
    SupportLeak,
    DegenerateState,
    ParseError,
    # operations
    code_spec_to_json,
    compute_correction,
    distance_via_rank,
    encode_secret,
    encode_word,
    enumerate_assisting,
    fidelity,
    is_locc_assisting,
    is_mds,
    kernel_basis,
    load_code_file,
    load_code_spec,
    mat_vec,
    min_distance,
    rank,
    run_protocol,
    select_columns,
    solve,
    transcript_to_json,
    transpose,
    verify_rank_criterion,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
