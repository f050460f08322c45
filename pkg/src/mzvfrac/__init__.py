"""Exact shuffle products of MZV fractions.

The package manipulates the symbolic fractions
``1/((u1+...+uk)^s1 (u2+...+uk)^s2 ... uk^sk)`` whose orthant sums are
multiple zeta values.  Products are computed two independent ways, by the
recursive shuffle of encoded words and by a closed-form binomial expansion,
and verified against exact rational-point evaluation and an exact
integral-operator model.
"""

from .closed_form import (
    Interleaving,
    binomial,
    closed_form_product,
    compositions,
    euler_decomposition,
    interleavings,
    merge_variables,
    slot_coefficient,
    slot_exponent,
)
from .errors import (
    MzvFracError,
    NotAdmissible,
    NotInDomain,
    ParseError,
    UnboundVariable,
    VariableCollision,
)
from .expsum import (
    ONE,
    ExpSum,
    as_exp_sum,
    eval_at_zero,
    integral_representation,
    integrate,
)
from .nested_sums import (
    IdentityCheck,
    check_summed_identity,
    fraction_sum_truncated,
    zeta_truncated,
)
from .rational_eval import (
    Verdict,
    eval_fraction,
    eval_lincomb,
    fraction_value,
    sample_assignment,
    verify_identity,
)
from .render import lincomb_from_json, lincomb_to_json, render_lincomb
from .shuffle import prepend_letter, shuffle_product, shuffle_words
from .words import (
    UNIT,
    X0,
    FracTerm,
    LinComb,
    concat,
    frac_term,
    is_admissible,
    parse_term,
    term_to_word,
    word_to_term,
)

__version__ = "0.1.0"

__all__ = [
    "ExpSum",
    "FracTerm",
    "IdentityCheck",
    "Interleaving",
    "LinComb",
    "MzvFracError",
    "NotAdmissible",
    "NotInDomain",
    "ONE",
    "ParseError",
    "UNIT",
    "UnboundVariable",
    "VariableCollision",
    "Verdict",
    "X0",
    "as_exp_sum",
    "binomial",
    "check_summed_identity",
    "closed_form_product",
    "compositions",
    "concat",
    "euler_decomposition",
    "eval_at_zero",
    "eval_fraction",
    "eval_lincomb",
    "frac_term",
    "fraction_sum_truncated",
    "fraction_value",
    "integral_representation",
    "integrate",
    "interleavings",
    "is_admissible",
    "lincomb_from_json",
    "lincomb_to_json",
    "merge_variables",
    "parse_term",
    "prepend_letter",
    "render_lincomb",
    "sample_assignment",
    "shuffle_product",
    "shuffle_words",
    "slot_coefficient",
    "slot_exponent",
    "term_to_word",
    "verify_identity",
    "word_to_term",
    "zeta_truncated",
]
