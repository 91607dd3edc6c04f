"""Generalized eigenvalues of MAX/MIN and LCM/GCD matrix pencils."""

from .conjecture import (
    ScanRecord,
    SequenceWindow,
    a004754_term,
    a004754_window,
    binary_begins_10,
    members,
    predicate_formula_consistency,
    scan_minus_one,
)
from .errors import (
    DimensionMismatch,
    GPencilError,
    InternalConsistencyError,
    InvalidParameter,
    InvalidSet,
    NoConvergence,
    NotPositiveDefinite,
    UnsupportedSet,
    VerificationFailure,
)
from .exactdet import (
    IntPolynomial,
    SurdValue,
    Verdict,
    ZeroTestVerdict,
    bareiss_determinant,
    hadamard_bits,
    modular_primes,
    modular_zero_test,
    pencil_charpoly,
    poly_eval_integer,
    poly_eval_surd,
    root_multiplicity,
)
from .interlace import (
    InterlaceReport,
    check_interlacing,
    consecutive_lcm_gcd_spectra,
    leading_principal_submatrix,
    positive_count_monotone,
)
from .pencilsolve import (
    ClusterReport,
    Spectrum,
    cholesky_factor,
    cluster_count,
    generalized_eigenvalues,
    jacobi_eigenvalues,
    lcmgcd_small_closed_form,
    maxmin_closed_form,
)
from .setmatrix import (
    BigIntMatrix,
    Permutation,
    SetKind,
    SetSpec,
    build_gcd_matrix,
    build_lcm_matrix,
    build_max_matrix,
    build_min_matrix,
    permute_conjugate,
)

__version__ = "0.1.0"
