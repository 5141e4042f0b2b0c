"""framekit: finite frame systems on discrete grids.

Computes frame-theoretic operators (Gramian, analysis/synthesis, frame
bounds), the inverse-Gramian reproducing kernel and canonical Parseval frame
of a vector system, and simulates Karhunen-Loeve Gaussian variables whose
variances obey the frame-bound sandwich.
"""

__version__ = "0.1.0"

from .classic import (
    hilbert_gramian_exact,
    hilbert_spectrum_report,
    mercedes_frame,
    monomial_frame,
    random_riesz_frame,
)
from .errors import (
    DimensionMismatch,
    FramekitError,
    InvalidArgument,
    InvalidIndex,
    InvalidMatrix,
    NotAFrame,
    NotPositiveSemidefinite,
    ZeroSpan,
)
from .frames import (
    FrameBounds,
    FrameSystem,
    Gramian,
    Grid,
    analysis,
    build_gramian,
    compute_frame_bounds,
    eval_l,
    frame_operator_apply,
    gram_apply,
    synthesis,
    weighted_inner,
    weighted_norm,
)
from .gp import (
    AtomicMeasure,
    ComplexVector,
    GaussianModel,
    KLSampleSet,
    SigmaFrame,
    empirical_variance,
    fourier_at_atoms,
    kl_coefficients,
    sample_kl,
    sandwich_check,
    sigma_frame_bounds,
    theoretical_variances,
)
from .rkhs import (
    CanonicalTightFrame,
    KernelMatrix,
    LaxMilgramOperator,
    canonical_tight,
    isometry_check,
    kernel_from_tight,
    lax_milgram,
    naive_kernel,
    polar_unitary,
    rk_kernel,
    verify_lax_identity,
    verify_reproducing,
)
from .spectral import (
    DEFAULT_RANK_TOL,
    SpectralDecomposition,
    SymMatrix,
    inv_sqrt,
    jacobi_backend,
    pinv,
    sym_eig,
)

__all__ = [
    "__version__",
    "DEFAULT_RANK_TOL",
    "SymMatrix",
    "SpectralDecomposition",
    "sym_eig",
    "pinv",
    "inv_sqrt",
    "jacobi_backend",
    "Grid",
    "FrameSystem",
    "Gramian",
    "FrameBounds",
    "build_gramian",
    "analysis",
    "synthesis",
    "frame_operator_apply",
    "gram_apply",
    "compute_frame_bounds",
    "eval_l",
    "weighted_inner",
    "weighted_norm",
    "KernelMatrix",
    "CanonicalTightFrame",
    "LaxMilgramOperator",
    "naive_kernel",
    "rk_kernel",
    "canonical_tight",
    "kernel_from_tight",
    "verify_reproducing",
    "lax_milgram",
    "verify_lax_identity",
    "isometry_check",
    "polar_unitary",
    "monomial_frame",
    "hilbert_gramian_exact",
    "hilbert_spectrum_report",
    "mercedes_frame",
    "random_riesz_frame",
    "AtomicMeasure",
    "SigmaFrame",
    "ComplexVector",
    "GaussianModel",
    "KLSampleSet",
    "fourier_at_atoms",
    "sigma_frame_bounds",
    "kl_coefficients",
    "theoretical_variances",
    "sandwich_check",
    "sample_kl",
    "empirical_variance",
    "FramekitError",
    "InvalidMatrix",
    "NotPositiveSemidefinite",
    "DimensionMismatch",
    "InvalidIndex",
    "InvalidArgument",
    "ZeroSpan",
    "NotAFrame",
]
