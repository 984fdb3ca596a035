"""Exact-arithmetic divisor-class invariants on unnodal Enriques surfaces.

The numerical lattice, effectivity and nefness tests, the phi invariant
with certified witnesses, total line-bundle cohomology, simple isotropic
decomposition types with their moduli-component database, and the
twisted-tangent-bundle machinery that computes fiber dimensions of the
period-type moduli maps and extendability caps.
"""

from .lattice import (
    DELTA,
    GRAM,
    RANK,
    NumClass,
    basis_gram,
    divisibility,
    inner,
    isotropic_generator,
    two_isotropic_generator,
)
from .surface import (
    CANONICAL,
    PhiResult,
    PicClass,
    enumerate_isotropic,
    genus,
    half_fiber_form,
    is_effective,
    is_nef,
    phi,
)
from .cohomology import (
    CohTriple,
    MultBound,
    MultCert,
    certify_mult_surjective,
    chi,
    coh,
    k3_coh,
    mult_corank_bound,
)
from .decomposition import (
    ComponentRecord,
    DatabaseError,
    DecompositionType,
    ParseError,
    Symbol,
    all_tabulated_components,
    canonical_type,
    component_of,
    components,
    pairing,
    parse,
    realize,
    two_divisible,
    validate_simple,
)
from .moduli import (
    BOUND_TABLE,
    BetaBounds,
    Certificate,
    EnriquesSplit,
    GammaDelta,
    H1Interval,
    alpha,
    beta_bounds,
    enriques_split,
    extendability_cap,
    fiber_dimension,
    fiber_dimension_curves,
    gamma_delta,
    h1_bound_double_cover,
    h1_bound_embedding,
    h1_tangent_k3,
    phi1_family_total,
    phi2_double_family_total,
    phi2_triple_family_total,
    quadric_coh,
)

__version__ = "0.1.0"

__all__ = [
    "DELTA",
    "GRAM",
    "RANK",
    "NumClass",
    "basis_gram",
    "divisibility",
    "inner",
    "isotropic_generator",
    "two_isotropic_generator",
    "CANONICAL",
    "PhiResult",
    "PicClass",
    "enumerate_isotropic",
    "genus",
    "half_fiber_form",
    "is_effective",
    "is_nef",
    "phi",
    "CohTriple",
    "MultBound",
    "MultCert",
    "certify_mult_surjective",
    "chi",
    "coh",
    "k3_coh",
    "mult_corank_bound",
    "ComponentRecord",
    "DatabaseError",
    "DecompositionType",
    "ParseError",
    "Symbol",
    "all_tabulated_components",
    "canonical_type",
    "component_of",
    "components",
    "pairing",
    "parse",
    "realize",
    "two_divisible",
    "validate_simple",
    "BOUND_TABLE",
    "BetaBounds",
    "Certificate",
    "EnriquesSplit",
    "GammaDelta",
    "H1Interval",
    "alpha",
    "beta_bounds",
    "enriques_split",
    "extendability_cap",
    "fiber_dimension",
    "fiber_dimension_curves",
    "gamma_delta",
    "h1_bound_double_cover",
    "h1_bound_embedding",
    "h1_tangent_k3",
    "phi1_family_total",
    "phi2_double_family_total",
    "phi2_triple_family_total",
    "quadric_coh",
    "__version__",
]
