"""Exact crystal combinatorics for rank-2 Kac-Moody weights.

Kashiwara-style raising/lowering operators on sparse coordinate vectors,
closed-form highest/lowest weight vectors of the unit component, and the
linear-inequality (polyhedral) realization of that component, all in exact
integer arithmetic with cross-verification between closed forms and search.
"""

from .cartan import (
    AlgebraKind,
    AlphaBetaPosition,
    CartanRank2,
    LadderMatch,
    Regime,
    Weight,
    WeightClassification,
    a_prime_seq,
    a_seq,
    affine_level,
    chebyshev,
    classify_weight,
    compare_with_alpha_beta,
    discriminant,
)
from .crystal import (
    CrystalGraph,
    LambdaVector,
    SigmaProfile,
    bfs_component,
    e_tilde,
    epsilon,
    f_tilde,
    iota,
    k_minus,
    k_plus,
    phi,
    raise_to_extremal,
    sigma,
    sigma_profile,
    wt,
)
from .extremal import (
    CheckResult,
    ExtremalReport,
    classical_table,
    h_coeff,
    highest_vector,
    highest_vector_at,
    l_coeff,
    lowest_vector,
    lowest_vector_at,
    verify_extremal,
)
from .forms import (
    FamilyName,
    FormFamily,
    LinearForm,
    beta_bar,
    check_pn_assumptions,
    closure,
    enumerate_box,
    first_violation,
    half_closure,
    is_member,
    phi_chain_closed,
    phi_chain_iterated,
    regime_generators,
    regime_table,
    s_bar,
    undocumented_forms,
    xi_closure,
    xi_displayed,
    xi_family,
    xi_generators,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "AlgebraKind", "AlphaBetaPosition", "CartanRank2", "LadderMatch", "Regime",
    "Weight", "WeightClassification", "a_prime_seq", "a_seq", "affine_level",
    "chebyshev", "classify_weight", "compare_with_alpha_beta", "discriminant",
    "CrystalGraph", "LambdaVector", "SigmaProfile", "bfs_component", "e_tilde",
    "epsilon", "f_tilde", "iota", "k_minus", "k_plus", "phi",
    "raise_to_extremal", "sigma", "sigma_profile", "wt",
    "CheckResult", "ExtremalReport", "classical_table", "h_coeff",
    "highest_vector", "highest_vector_at", "l_coeff", "lowest_vector",
    "lowest_vector_at", "verify_extremal",
    "FamilyName", "FormFamily", "LinearForm", "beta_bar",
    "check_pn_assumptions", "closure", "enumerate_box", "first_violation",
    "half_closure", "is_member", "phi_chain_closed", "phi_chain_iterated",
    "regime_generators", "regime_table", "s_bar", "undocumented_forms",
    "xi_closure", "xi_displayed", "xi_family", "xi_generators",
    "errors",
]
