"""splitkit: exact-arithmetic toolkit around factorizations of matrix
polynomials, layered graphs, Hilbert series, and combinatorial topology."""

from .calibration import CalibrationResult, calibrate_convention
from .dualalg import (
    GraphPresentation,
    KoszulVerdict,
    QuadraticPresentation,
    vertex_algebra_presentation,
    discrepancy_lhs,
    discrepancy_lhs_table,
    graded_dims,
    vertex_hilbert,
    numerical_koszul_check,
    quadratic_dual,
)
from .errors import (
    DegreeMismatch,
    FaceNotInComplex,
    GenericityFailure,
    HypothesisViolation,
    NegativeDimension,
    NegativeDiscrepancy,
    NonUnitConstantTerm,
    NonzeroRemainder,
    ParseError,
    SingularMatrix,
    SizeLimit,
    SplitkitError,
    TruncationMismatch,
    ValidationError,
)
from .exactlinalg import (
    GF2,
    GF3,
    RATIONALS,
    DenseMatrix,
    FieldSpec,
    annihilator_basis,
    char_poly,
    parse_field,
)
from .laygraph import (
    LayeredGraph,
    SimplicialComplex,
    boolean_graph,
    complex_graph,
    down_graph,
    hat,
    is_codim1_connected,
    is_pure,
    is_uniform,
    subspace_graph,
    validate,
)
from .mobius import (
    graded_mobius,
    hilbert_series,
    hilbert_series_inverse,
    mobius_value,
    mobius_value_chain,
    subset_lattice_series,
)
from .ncfactor import (
    GenericityReport,
    MatrixPolynomial,
    OrderingCheck,
    PseudoRootTable,
    RootSystem,
    block_vandermonde,
    check_all_orderings,
    check_diamond,
    expand_factorization,
    genericity_check,
    pseudo_root,
    quasideterminant,
    random_generic_roots,
    viete_coefficients,
)
from .seriespoly import (
    IntPolynomial,
    TruncatedSeries,
    poly_divide,
    series_inverse,
    series_mul,
    substitute_neg,
)
from .topo import (
    BettiVector,
    KoszulityPrediction,
    betti,
    discrepancy_rhs,
    discrepancy_rhs_table,
    euler_characteristic,
    link,
    local_homology_vanishes,
    order_complex,
    predict_koszulity,
)

__version__ = "0.1.0"
