"""golodlab: exact-arithmetic detection of Golod rings via Groebner
degeneration, Koszul homology products, and Massey operations."""

from .analyzer import (
    AnalyzerConfig,
    FiberInvariantResult,
    GolodCertificate,
    fiber_invariant,
    golod_certificate,
    recognize_monomial_power,
)
from .betti import BettiTable, has_linear_resolution
from .determinantal import (
    LadderMatrix,
    ideal_power,
    maximal_minors,
    parse_mask,
    verify_sparse_theorems,
)
from .errors import (
    CapExceededError,
    GolodlabError,
    InconsistencyError,
    InputError,
    ParseError,
    RingMismatchError,
)
from .fields import GF, QQ, Field
from .flatfam import (
    HomogenizedIdeal,
    degeneration_summary,
    homogenize_ideal,
    initial_form,
    specialize_t,
)
from .groebner import GroebnerBasis, QuotientRing, buchberger, normal_form
from .koszul import HomologyClass, KoszulComplex, KoszulElement, koszul_betti
from .massey import (
    KoszulMap,
    MasseyResult,
    MasseyTable,
    TrivialMasseyOutcome,
    build_rainbow_table,
    build_trivial_table,
    homology_product,
    massey_product,
    pullback_massey,
    pushforward_massey,
)
from .monomial import (
    MonomialIdeal,
    Polarization,
    RainbowStructure,
    detect_rainbow,
    display_sorted,
    polarize,
    validate_rainbow,
)
from .orders import TermOrder, diagonal_order, grevlex, lex, weight_order
from .parsing import (
    IdealFile,
    ideal_file_str,
    infer_ring_from_text,
    parse_ideal_text,
    parse_order,
    parse_poly,
    parse_ring,
    poly_str,
)
from .resolution import PoincareData, golod_series, poincare_coeffs, serre_bound
from .rings import PolyRing, Polynomial
from .taylor import taylor_betti

__all__ = [
    "AnalyzerConfig",
    "BettiTable",
    "CapExceededError",
    "FiberInvariantResult",
    "Field",
    "GF",
    "GolodCertificate",
    "GolodlabError",
    "GroebnerBasis",
    "HomogenizedIdeal",
    "HomologyClass",
    "IdealFile",
    "InconsistencyError",
    "InputError",
    "KoszulComplex",
    "KoszulElement",
    "KoszulMap",
    "LadderMatrix",
    "MasseyResult",
    "MasseyTable",
    "MonomialIdeal",
    "ParseError",
    "PoincareData",
    "Polarization",
    "PolyRing",
    "Polynomial",
    "QQ",
    "QuotientRing",
    "RainbowStructure",
    "RingMismatchError",
    "TermOrder",
    "TrivialMasseyOutcome",
    "buchberger",
    "build_rainbow_table",
    "build_trivial_table",
    "degeneration_summary",
    "detect_rainbow",
    "diagonal_order",
    "display_sorted",
    "fiber_invariant",
    "golod_certificate",
    "golod_series",
    "grevlex",
    "has_linear_resolution",
    "homogenize_ideal",
    "homology_product",
    "ideal_file_str",
    "ideal_power",
    "infer_ring_from_text",
    "initial_form",
    "koszul_betti",
    "lex",
    "massey_product",
    "maximal_minors",
    "normal_form",
    "parse_ideal_text",
    "parse_mask",
    "parse_order",
    "parse_poly",
    "parse_ring",
    "poincare_coeffs",
    "polarize",
    "poly_str",
    "pullback_massey",
    "pushforward_massey",
    "recognize_monomial_power",
    "serre_bound",
    "specialize_t",
    "taylor_betti",
    "validate_rainbow",
    "verify_sparse_theorems",
    "weight_order",
]
