"""Exact computation with q-Key polynomials, non-symmetric Hall-Littlewood theory.

Modules, bottom-up: ``qcoeff`` (rational functions of q), ``multipoly``
(Laurent polynomials), ``symgroup`` (permutations), ``heckealg`` (the Hecke
algebra and Yang-Baxter bases), ``demazure`` (operators on polynomials),
``hall`` (Hall-Littlewood P/Q and straightening), ``qkey`` (the four Key
families and transition matrices) and ``ctscalar`` (the constant-term scalar
product).
"""

from .qcoeff import ONE, Q, ZERO, Pole, QRat, d_lambda, eval_q, q_factorial, q_int
from .multipoly import LaurentPoly, compare_order, monomial, n_stat
from .heckealg import HeckeElt, bilinear, yang_baxter, yb_transition_matrix
from .demazure import OpFactor, apply_box, apply_nabla, apply_partial, apply_pi, apply_pihat, apply_T
from .hall import HLExpansion, MINUS_INFINITY, hl_P, hl_Q, p_of, straighten_Q, top_term
from .qkey import key_poly, transition_matrix, u_poly, uhat_poly
from .ctscalar import ct_oracle, scalar_q, verify_duality

__version__ = "0.1.0"

__all__ = [
    "QRat", "Q", "ONE", "ZERO", "Pole", "q_int", "q_factorial", "d_lambda", "eval_q",
    "LaurentPoly", "monomial", "compare_order", "n_stat",
    "HeckeElt", "yang_baxter", "bilinear", "yb_transition_matrix",
    "OpFactor", "apply_partial", "apply_pi", "apply_pihat", "apply_box", "apply_nabla", "apply_T",
    "HLExpansion", "MINUS_INFINITY", "hl_P", "hl_Q", "straighten_Q", "p_of", "top_term",
    "u_poly", "uhat_poly", "key_poly", "transition_matrix",
    "scalar_q", "ct_oracle", "verify_duality",
]
