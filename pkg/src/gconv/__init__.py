"""Translation-invariant operators on finite abelian groups.

Filters with matrix taps act on tuples of square-summable signals by group
convolution. Passing to the frequency side turns them into families of small
matrices indexed by dual points, under which composition is a pointwise
product and the adjoint a pointwise conjugate transpose. That makes operator
norms, invertibility certificates, inverse filters, and the optimal
Bessel/Riesz bounds of group-generated translate systems directly
computable, with a dense block-circulant oracle for independent
verification.
"""

__version__ = "0.1.0"

from .errors import (
    DomainMismatchError,
    ExactnessError,
    GConvError,
    NonHermitianError,
    NotInvertibleError,
    SchemaError,
    ShapeMismatchError,
    SizeCapError,
    SpecMismatchError,
)
from .group import DualPoint, Element, GroupSpec, character
from .fourier import Signal, convolve, forward, grid_symbol, inverse, translate
from .convop import (
    FilterMatrix,
    SymbolMatrix,
    TranslationVarianceReport,
    VectorSignal,
    adjoint,
    apply,
    compose,
    compose_direct,
    extract_filter,
    filter_from_symbol,
    symbol,
)
from .spectral import (
    ExtremalEigs,
    InvertibilityResult,
    SpectralReport,
    benzi_bound,
    hermitian_extremal_eigs,
    inverse_filter,
    inverse_norm,
    invertibility,
    operator_norm,
    spectral_report,
)
from .riesz import (
    GeneratorSystem,
    GramData,
    PositivityReport,
    RieszReport,
    analyze_gram,
    correlation_identity_gap,
    gram,
    positivity_check,
    riesz_analysis,
    synthesis,
)
from .oracle import (
    DenseOperator,
    dense_singular_values,
    dense_svd_extremes,
    dense_synthesis,
    densify,
)

__all__ = [
    "__version__",
    "GConvError", "SpecMismatchError", "DomainMismatchError", "ShapeMismatchError",
    "SchemaError", "SizeCapError", "NonHermitianError", "ExactnessError",
    "NotInvertibleError",
    "GroupSpec", "Element", "DualPoint", "character",
    "Signal", "forward", "inverse", "convolve", "translate", "grid_symbol",
    "FilterMatrix", "SymbolMatrix", "VectorSignal", "TranslationVarianceReport",
    "apply", "symbol", "filter_from_symbol", "compose", "compose_direct",
    "adjoint", "extract_filter",
    "SpectralReport", "InvertibilityResult", "ExtremalEigs",
    "operator_norm", "benzi_bound", "invertibility", "inverse_filter",
    "inverse_norm", "hermitian_extremal_eigs", "spectral_report",
    "GeneratorSystem", "GramData", "RieszReport", "PositivityReport",
    "gram", "synthesis", "riesz_analysis", "analyze_gram",
    "positivity_check", "correlation_identity_gap",
    "DenseOperator", "densify", "dense_singular_values", "dense_svd_extremes",
    "dense_synthesis",
]
