"""Exact computations in Lam's algebra of ribbon Schur operators and 3-tuple LLT polynomials."""

from .laurent import LaurentPoly, qpow
from .shapes import SkewShape, RestrictedShape, core_and_quotient, add_ribbon, conjugate
from .words import invi, desi, des_pair, inv_pair, standardize
from .quotient import (
    AlgebraElement,
    CanonicalForm,
    RelationSystem,
    ResourceGuardError,
    canonical_form_lam,
    equal_in_quotient,
    equivalence_class,
    act_on_tuple,
    act_on_partition_spin,
)
from .rsst import Rsst, arrows, sqread, enumerate_rsst, reading_words, is_nonzero_rsst
from .ncsf import FlagSpec, flagged_schur, flagged_schur_lam, j_expand, verify_theorem_main, verify_lemma_4_1, verify_corollary_4_3
from .symfunc import SymFunc, schur, schur_expand
from .llt import SkewTuple, enumerate_W, llt_polynomial, spin_llt, qlr_coefficients, tuple_descent_data
from .conjecture import check_letter_peeling, check_conjecture_5_1

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "qpow",
    "SkewShape",
    "RestrictedShape",
    "core_and_quotient",
    "add_ribbon",
    "conjugate",
    "invi",
    "desi",
    "des_pair",
    "inv_pair",
    "standardize",
    "AlgebraElement",
    "CanonicalForm",
    "RelationSystem",
    "ResourceGuardError",
    "canonical_form_lam",
    "equal_in_quotient",
    "equivalence_class",
    "act_on_tuple",
    "act_on_partition_spin",
    "Rsst",
    "arrows",
    "sqread",
    "enumerate_rsst",
    "reading_words",
    "is_nonzero_rsst",
    "FlagSpec",
    "flagged_schur",
    "flagged_schur_lam",
    "j_expand",
    "verify_theorem_main",
    "verify_lemma_4_1",
    "verify_corollary_4_3",
    "SymFunc",
    "schur",
    "schur_expand",
    "SkewTuple",
    "enumerate_W",
    "llt_polynomial",
    "spin_llt",
    "qlr_coefficients",
    "tuple_descent_data",
    "check_letter_peeling",
    "check_conjecture_5_1",
]
