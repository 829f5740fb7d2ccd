"""Exact simplicial (co)homology and combinatorial Alexander duality."""
from .algebra import (
    INTEGERS,
    RATIONALS,
    ContractError,
    GroupInvariants,
    IntMatrix,
    RingSpec,
    SmithForm,
    prime_field,
    quotient_invariants,
    rank_over,
    smith_normal_form,
)
from .duality import (
    DualityReport,
    PhiMap,
    build_phi,
    check_commutation,
    check_lemma_adfirst,
    commutation_by_degree,
    enumerate_complexes,
    sample_complexes,
    verify_duality,
)
from .homology import (
    GradedChainComplex,
    homology_invariants,
    reduced_chain_complex,
    reduced_cochain_complex,
    reduced_homology,
    reduced_cohomology,
    relative_chain_complex,
)
from .io import ParseError, parse_complex, serialize_complex
from .simplicial import (
    DomainError,
    SimplicialComplex,
    alexander_dual,
    check_sign_lemma,
    closure_contains,
    empty_complex,
    faces_of_dimension,
    full_simplex,
    parity,
    sign,
    void_complex,
)

__version__ = "0.1.0"
