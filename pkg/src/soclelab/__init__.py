"""soclelab: exact computations with graded rings and local cohomology.

A small exact-arithmetic workbench: Groebner bases, graded free
resolutions, local cohomology degrees through graded duality (with an
independent Koszul-limit oracle), canonical ideals, and the
characteristic-p layer of Frobenius powers and gauge degrees.
"""

from .errors import (
    AlgebraError,
    DomainError,
    EmbeddingSearchError,
    HypothesisError,
    InputSyntaxError,
    StructuralError,
    TruncationError,
    UnstableLimitError,
)
from .fields import QQ, PrimeField, RationalField, field_of
from .frobenius import (
    FedderReport,
    GaugeRecord,
    canonical_frobenius_socle,
    cartier_degrees,
    fedder_module,
    gauge_scan,
    socle_gauge_identity,
)
from .groebner import (
    Ideal,
    buchberger,
    contains,
    frobenius_power,
    hilbert_function,
    ideal_colon,
    ideal_intersection,
    ideal_power,
    ideal_sum,
    krull_dimension,
    minimal_generator_degrees,
    minimal_generators,
    normal_form,
)
from .inputfile import parse_input, parse_input_file
from .localcoh import (
    AlphaTable,
    CanonicalData,
    SocleReport,
    alpha_max,
    alpha_table,
    canonical_ideal,
    canonical_module,
    endomorphism_check,
    ext_dual,
    ext_k_begin,
    ideal_as_module,
    koszul_piece,
    lc_end,
    module_depth,
    module_dimension,
    regularity,
    socle_begin,
    socle_piece,
    socle_report,
)
from .modules import (
    GradedFreeModule,
    GradedMatrix,
    ModulePresentation,
    free_module,
    module_hilbert,
    quotient_module,
)
from .orders import DEGLEX, DEGREVLEX, MonomialOrder
from .poly import (
    NEG_INF,
    POS_INF,
    PolyRing,
    Polynomial,
    format_polynomial,
    parse_polynomial,
)
from .resolutions import (
    BettiTable,
    Resolution,
    minimal_free_resolution,
    module_hom,
    module_kernel_image,
    residue_field_resolution,
    syzygy,
    truncated_resolution,
)
from .rings import RingPresentation
from .scans import criterion_check, lemma37_scan, scan_powers

__all__ = [
    "AlgebraError",
    "DomainError",
    "EmbeddingSearchError",
    "HypothesisError",
    "InputSyntaxError",
    "StructuralError",
    "TruncationError",
    "UnstableLimitError",
    "QQ",
    "PrimeField",
    "RationalField",
    "field_of",
    "FedderReport",
    "GaugeRecord",
    "canonical_frobenius_socle",
    "cartier_degrees",
    "fedder_module",
    "gauge_scan",
    "socle_gauge_identity",
    "Ideal",
    "buchberger",
    "contains",
    "frobenius_power",
    "hilbert_function",
    "ideal_colon",
    "ideal_intersection",
    "ideal_power",
    "ideal_sum",
    "krull_dimension",
    "minimal_generator_degrees",
    "minimal_generators",
    "normal_form",
    "parse_input",
    "parse_input_file",
    "AlphaTable",
    "CanonicalData",
    "SocleReport",
    "alpha_max",
    "alpha_table",
    "canonical_ideal",
    "canonical_module",
    "endomorphism_check",
    "ext_dual",
    "ext_k_begin",
    "ideal_as_module",
    "koszul_piece",
    "lc_end",
    "module_depth",
    "module_dimension",
    "regularity",
    "socle_begin",
    "socle_piece",
    "socle_report",
    "GradedFreeModule",
    "GradedMatrix",
    "ModulePresentation",
    "free_module",
    "module_hilbert",
    "quotient_module",
    "DEGLEX",
    "DEGREVLEX",
    "MonomialOrder",
    "NEG_INF",
    "POS_INF",
    "PolyRing",
    "Polynomial",
    "format_polynomial",
    "parse_polynomial",
    "BettiTable",
    "Resolution",
    "minimal_free_resolution",
    "module_hom",
    "module_kernel_image",
    "residue_field_resolution",
    "syzygy",
    "truncated_resolution",
    "RingPresentation",
    "criterion_check",
    "lemma37_scan",
    "scan_powers",
]
