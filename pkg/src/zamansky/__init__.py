"""Conjugate functions on the circle and the uniform-convergence test for
real parts of disc-algebra functions."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    ConvergenceError,
    DomainError,
    FourierCoefficients,
    Grid,
    InputError,
    PeriodicFunction,
    analyze,
    evaluate,
    modulus_of_continuity,
    sup_norm,
)
from .diagnostics import (  # noqa: E402
    ConvergenceProfile,
    DiagnosticConfig,
    DiagnosticReport,
    TheoremAReport,
    Verdict,
    classify_convergence,
    disc_algebra_test,
    theorem_a_report,
    zamansky_profile,
)
from .kernels import (  # noqa: E402
    TruncationMoments,
    conj_poisson_kernel,
    half_cot,
    poisson_kernel,
    truncated_moments,
)
from .transforms import (  # noqa: E402
    AnalyticExtension,
    SmoothnessProbe,
    abel_conjugate,
    analytic_extension,
    conj_spectral,
    evaluate_extension,
    smoothness_defect,
    truncated_conjugate_fast,
    truncated_conjugate_quadrature,
)
