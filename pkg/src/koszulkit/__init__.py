"""koszulkit: exact-arithmetic toolkit for Koszul filtrations of standard
graded algebras, Groebner bases of binomial ideals, and graded resolutions."""

from .filtration import (
    FiltrationCert,
    certificate_from_json,
    certificate_to_json,
    export_certificate,
    forbidden_ideal_scan,
    import_certificate,
    linear_colon_ideals,
    linear_flags,
    partial_koszul_filtration,
    partial_linear_filtration,
    verify_filtration,
)
from .groebner import (
    GroebnerBasis,
    IdealS,
    buchberger,
    colon,
    ideal_equals,
    intersect,
    is_groebner_basis,
    normal_form,
    saturate,
    toric_ideal,
)
from .gtheory import (
    Graph,
    bei_gset_chain,
    binomial_edge_ideal,
    build_gsequence_filtration,
    colon_gb,
    find_gsequence,
    gseq_colon_set,
    gsequence_filtration_cert,
    is_gset,
    mod_out_gset,
)
from .linalg import BACKEND
from .quotient import (
    QuotientRing,
    RIdeal,
    annihilator,
    apply_permutation,
    colon_element,
    colon_r,
    is_linearly_generated,
    linear_forms_with_linear_annihilator,
    trim,
)
from .resolution import (
    BettiTable,
    HilbertSeries,
    betti_truncated,
    dim_graded_piece,
    hilbert_series,
    res_looks_linear,
)
from .rings import (
    GF,
    QQ,
    Block,
    DegRevLex,
    Field,
    Lex,
    ParseError,
    Polynomial,
    PolyRing,
    compare_monomials,
    enumerate_linear_forms,
    parse_polynomial,
)

__version__ = "0.1.0"
