"""Exact dot-analogue counts over odd finite fields.

Counts subspaces of F_q^n by the square class of the Gram determinant of
the standard dot product (and its lambda-scaled companion), in closed form
and by brute-force enumeration, together with the polynomial families the
counts trace out in q.
"""

from .closed import (
    Flavor,
    Variant,
    asymptotic_gap,
    bracket,
    bracket_factorial,
    dot_binom,
    dot_binom_variant,
    gaussian_binom,
    group_order,
    limit_value,
    line_counts,
    mobius_sequence,
    pascal_check,
    pascal_row,
    quotient_identity_check,
    shape_checks,
    verbatim_flavor,
    verbatim_group_order,
    verbatim_line_count,
)
from .errors import (
    AmbientMismatch,
    BudgetExceeded,
    DegreeOutOfRange,
    DimensionMismatch,
    DivisionByZero,
    DotAnalogueError,
    EvenCharacteristic,
    ExactDivisionFailed,
    IdentityViolated,
    InvalidQ,
    Mismatch,
    NeitherSign,
    NotALine,
    NotPrime,
    UndefinedForParameters,
    UnsupportedFlavor,
)
from .gf import FieldElement, FieldSpec, SquareClass, make_field
from .oracle import (
    CountReport,
    PosetKind,
    PosetSnapshot,
    build_poset,
    count_flags,
    count_lines,
    count_subspaces_by_class,
    count_symmetric_ksets,
    enumerate_orthogonal_group,
    enumerate_subspaces,
    export_hasse,
    full_count_report,
    mobius_bottom,
)
from .polyq import (
    FunctionalSign,
    PolyFamilyKey,
    RatPoly,
    coefficient_symmetry_report,
    depressed_coefficients,
    dot_binom_poly,
    eval_consistency,
    functional_equation_check,
    functional_sign_report,
    gaussian_binom_poly,
    limit_check,
    published_functional_sign,
    row_symmetric,
)
from .quadspace import (
    AmbientForm,
    AmbientKind,
    LineType,
    Subspace,
    SubspaceClass,
    classify,
    dot_space,
    lambda_dot_space,
    line_type,
)
from .report import CheckRecord, Status, VerifyReport
from .verify import run_verify

__version__ = "0.1.0"

__all__ = [
    "AmbientForm",
    "AmbientKind",
    "AmbientMismatch",
    "BudgetExceeded",
    "CheckRecord",
    "CountReport",
    "DegreeOutOfRange",
    "DimensionMismatch",
    "DivisionByZero",
    "DotAnalogueError",
    "EvenCharacteristic",
    "ExactDivisionFailed",
    "FieldElement",
    "FieldSpec",
    "Flavor",
    "FunctionalSign",
    "IdentityViolated",
    "InvalidQ",
    "LineType",
    "Mismatch",
    "NeitherSign",
    "NotALine",
    "NotPrime",
    "PolyFamilyKey",
    "PosetKind",
    "PosetSnapshot",
    "RatPoly",
    "SquareClass",
    "Status",
    "Subspace",
    "SubspaceClass",
    "UndefinedForParameters",
    "UnsupportedFlavor",
    "Variant",
    "VerifyReport",
    "asymptotic_gap",
    "bracket",
    "bracket_factorial",
    "build_poset",
    "classify",
    "coefficient_symmetry_report",
    "count_flags",
    "count_lines",
    "count_subspaces_by_class",
    "count_symmetric_ksets",
    "depressed_coefficients",
    "dot_binom",
    "dot_binom_poly",
    "dot_binom_variant",
    "dot_space",
    "enumerate_orthogonal_group",
    "enumerate_subspaces",
    "eval_consistency",
    "export_hasse",
    "full_count_report",
    "functional_equation_check",
    "functional_sign_report",
    "gaussian_binom",
    "gaussian_binom_poly",
    "group_order",
    "lambda_dot_space",
    "limit_check",
    "limit_value",
    "line_counts",
    "line_type",
    "make_field",
    "mobius_bottom",
    "mobius_sequence",
    "pascal_check",
    "pascal_row",
    "published_functional_sign",
    "quotient_identity_check",
    "row_symmetric",
    "run_verify",
    "shape_checks",
    "verbatim_flavor",
    "verbatim_group_order",
    "verbatim_line_count",
]
