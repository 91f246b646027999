"""Signatures of a small dependent type theory and finite inverse categories."""

from .bridge import build_TK, cosieve_order, fic_to_sig, object_order, sig_to_fic
from .congruence import (
    IsoWitness,
    canonical_ctx,
    canonical_sig,
    iso_ctx,
    iso_sig,
    swap_closure_oracle,
    swap_ok,
)
from .fic import Arrow, Fic, Identity, compose_arrows, cosieve, iso_fic, make_fic, parse_fic, print_fic, to_dot, validate_fic
from .kernel import (
    CheckReport,
    apply_subst,
    check_context,
    check_signature,
    check_sort,
    check_subst,
    check_term,
    compose_subst,
    ctx_vars,
    proj,
    reify,
    vars_by_head,
)
from .syntax import Context, ParseError, Signature, Sort, alpha_eq, fresh_name, parse_sig, print_sig

__version__ = "0.1.0"
