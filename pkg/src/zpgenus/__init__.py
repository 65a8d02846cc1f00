"""zpgenus: exact Hirzebruch genera of manifolds with Z/p actions.

Given the tangent weights of the fixed points of a Z/p action, the package
computes the genus of the ambient manifold mod p by three independent exact
routes (formal power systems, coefficient extraction against the trace
generating series, and direct cyclotomic traces), checks the Conner-Floyd
style vanishing that realizable weight data must satisfy, and carries a
laboratory of linear actions on complex projective spaces where every value
has a closed form.
"""
from .cyclotomic import (
    CycloElem,
    ab_trace,
    cyclo_trace,
    evaluate_at_theta,
    theta_minimal_polynomial,
    theta_of,
    trace_theta_power,
)
from .engine import (
    SubmanifoldComponent,
    SubmanifoldData,
    Thm71Report,
    WeightSet,
    a_series,
    ab_coefficient,
    b_series,
    cf_residuals,
    genus_mod_p,
    h_series,
    p_series_term,
    reduce_value,
    submanifold_genus,
    thm71_check,
)
from .cpn import (
    Eq45Report,
    Eq46Report,
    ResidueTuple,
    canonical_residues,
    check_eq45,
    check_eq46,
    cpn_weight_set,
    homogenized_legendre,
    legendre_coeffs,
    legendre_value,
)
from .errors import (
    BadParams,
    DuplicateResidues,
    EngineError,
    GuardViolation,
    IndexBeyondTruncation,
    IntegrateInResidueRing,
    NonIntegralAtP,
    NonUnitConstantTerm,
    NonzeroInnerConstant,
    NotReversible,
    PrimeMismatch,
    RingMismatch,
    UnsupportedClosedForm,
    UnsupportedKind,
    ZeroDivision,
    ZeroPolynomial,
    ZeroWeight,
)
from .genus import (
    CATALOG_KINDS,
    GenusSpec,
    cpn_genus,
    default_order,
    genus_name,
    make_genus,
    parse_genus_name,
    power_system,
    power_system_closed,
)
from .rings import (
    DE,
    INHOMOGENEOUS,
    QQ,
    GradedPoly,
    GradedPolyModP,
    ModP,
    Rational,
    graded_modp_ring,
    modp_ring,
    poly_from_text,
    poly_reduce_mod_p,
    poly_to_text,
    rational_reduce_mod_p,
    weighted_degree,
)
from .series import Series, binomial_power, geometric

__version__ = "0.1.0"
