"""Exact computations with finite-dimensional soluble Lie and Leibniz algebras.

Everything is exact: rationals via :mod:`fractions`, prime fields via integer
residues.  Structure constants are stored sparsely and indexed from 0 in
code; the catalog text format indexes from 1.
"""

from .algebra import (
    LEIBNIZ,
    LIE,
    AlgebraPresentation,
    Ideal,
    Morphism,
    as_leibniz,
    centralizer,
    centralizer_of_section,
    change_basis,
    direct_sum,
    fiber_product,
    morphism,
    quotient,
    validate,
)
from .catalog import (
    CatalogDocument,
    CatalogParseError,
    emit_catalog,
    generate_counterexample,
    load_builtin,
    parse_catalog,
)
from .batch import BatchReport, run_batch
from .exact_linalg import GF, QQ, Field, Matrix, Subspace, span
from .formations import (
    FormationSpec,
    MembershipCertificate,
    Target,
    char0_abelian_quotient_check,
    check_certificate,
    fn_theorem_check,
    formation_membership,
    parse_formation,
)
from .modules import (
    ModulePresentation,
    antisymmetrize,
    classify_dichotomy,
    is_irreducible,
    minimal_submodule,
    split_extension,
    symmetrize,
)
from .series import chief_series, derived_series, leib_ideal, lower_central_series, nilradical

__all__ = [
    "AlgebraPresentation",
    "BatchReport",
    "CatalogDocument",
    "CatalogParseError",
    "Field",
    "FormationSpec",
    "GF",
    "Ideal",
    "LEIBNIZ",
    "LIE",
    "Matrix",
    "MembershipCertificate",
    "ModulePresentation",
    "Morphism",
    "QQ",
    "Subspace",
    "Target",
    "antisymmetrize",
    "as_leibniz",
    "centralizer",
    "centralizer_of_section",
    "change_basis",
    "char0_abelian_quotient_check",
    "check_certificate",
    "chief_series",
    "classify_dichotomy",
    "derived_series",
    "direct_sum",
    "emit_catalog",
    "fiber_product",
    "fn_theorem_check",
    "formation_membership",
    "generate_counterexample",
    "is_irreducible",
    "leib_ideal",
    "load_builtin",
    "lower_central_series",
    "minimal_submodule",
    "morphism",
    "nilradical",
    "parse_catalog",
    "parse_formation",
    "quotient",
    "run_batch",
    "span",
    "split_extension",
    "symmetrize",
    "validate",
]
