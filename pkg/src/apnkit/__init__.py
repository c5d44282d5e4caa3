"""apnkit: analysis of vectorial Boolean functions over GF(2^m).

Differential and Walsh spectra, APN/AB/crookedness tests, CCZ-equivalence
invariants from group-algebra ideal dimensions, a catalog of known APN
families, and an exhaustive APN-binomial search.
"""

__version__ = "0.1.0"

from .field import (
    DEFAULT_POLYS,
    Field,
    NotASubfield,
    RejectedPolynomial,
    UnsupportedDegree,
    ZeroHasNoOrder,
    build_field,
)
from .function import (
    ANF,
    FieldMismatch,
    NotBijective,
    NotLinear,
    VectorialFunction,
    add_functions,
    algebraic_degree,
    anf,
    compose_with_linear,
    from_lut,
    from_polynomial,
    mobius_transform,
    parse_polynomial_terms,
    power_function,
    random_linear_permutation,
    read_lut_file,
)
from .spectra import (
    DifferentialSpectrum,
    WalshSpectrum,
    differential_spectrum,
    differential_uniformity,
    is_ab,
    is_apn,
    is_crooked,
    linearity,
    spectra_equal,
    walsh_spectrum,
    walsh_table,
)
from .invariants import (
    DimensionCapExceeded,
    EchelonBasis,
    EmptyElement,
    GroupAlgebraElement,
    NotAPN,
    TooLarge,
    build_aF,
    build_graph_element,
    element_from_support,
    ideal_dimension,
    ideal_dimension_oracle,
    load_basis,
    permute_support,
    save_basis,
    translate,
)
from .catalog import (
    CatalogEntry,
    WrongField,
    binomial_t1,
    binomial_t1_u_is_valid,
    binomial_t1_valid_us,
    binomial_t2,
    binomial_t2_u_is_valid,
    binomial_t2_valid_us,
    known_apn_functions,
)
from .search import (
    SearchHit,
    SearchSpace,
    canonical_orbit_representative,
    enumerate_canonical_pairs,
    search_binomials,
)
