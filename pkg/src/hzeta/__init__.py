"""Hurwitz zeta for complex s and alpha via a shifted power series,
with s-derivative jets, alpha-derivatives, generalized Stieltjes
constants, identity verification, and an independent oracle suite."""

from .errors import (
    DomainError,
    HZetaError,
    NearPole,
    Nonconvergence,
    PoleAtOne,
    SingularJet,
)
from .hurwitz import (
    EvalResult,
    SeriesParams,
    choose_k,
    convergence_bound,
    hurwitz_alpha_derivative,
    hurwitz_jet,
    hurwitz_regularized_jet,
)
from .identities import (
    IDENTITY_NAMES,
    IdentityReport,
    dalpha_of_sderiv,
    dalpha_sderiv_at_zero,
    verify_identity,
)
from .jets import Jet, jet_exp, pochhammer_jet, pow_negs
from .stieltjes import (
    LaurentExpansion,
    dgamma_dalpha,
    generalized_stieltjes,
    generating_series_at_zero,
)
from .zetacore import (
    EulerMaclaurinParams,
    StieltjesTable,
    regularized_tail_jet,
    riemann_zeta_jet,
    stieltjes_constants,
    zeta_tail_jet,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "EulerMaclaurinParams",
    "EvalResult",
    "HZetaError",
    "IDENTITY_NAMES",
    "IdentityReport",
    "Jet",
    "LaurentExpansion",
    "NearPole",
    "Nonconvergence",
    "PoleAtOne",
    "SeriesParams",
    "SingularJet",
    "StieltjesTable",
    "choose_k",
    "convergence_bound",
    "dalpha_of_sderiv",
    "dalpha_sderiv_at_zero",
    "dgamma_dalpha",
    "generalized_stieltjes",
    "generating_series_at_zero",
    "hurwitz_alpha_derivative",
    "hurwitz_jet",
    "hurwitz_regularized_jet",
    "jet_exp",
    "pochhammer_jet",
    "pow_negs",
    "regularized_tail_jet",
    "riemann_zeta_jet",
    "stieltjes_constants",
    "verify_identity",
    "zeta_tail_jet",
]
