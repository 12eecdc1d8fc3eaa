"""Rooted tree maps, the polynomials F_f and G_f, and identity sweeps."""

from src.rtm.cache import RtmCache
from src.rtm.maps import (
    DOT_FOREST,
    G_DOT,
    RtmEvaluator,
    clear_caches,
    default_cache,
    f_poly,
    g_poly,
    rtm_apply,
    rtm_letter,
    span_rank,
)
from src.rtm.registry import (
    ALIASES,
    REGISTRY,
    Bounds,
    Identity,
    VerificationReport,
    identity_names,
    resolve_identity,
    run_all,
    verify_identity,
)

# Registration happens on import
from src.rtm import identities as _identities  # noqa: E402,F401
from src.rtm import algebra_identities as _algebra_identities  # noqa: E402,F401
from src.rtm.identities import fg_tensor, pq_displays  # noqa: E402

__all__ = [
    # Maps and polynomials
    "DOT_FOREST",
    "G_DOT",
    "RtmCache",
    "RtmEvaluator",
    "clear_caches",
    "default_cache",
    "f_poly",
    "g_poly",
    "rtm_apply",
    "rtm_letter",
    "span_rank",
    "fg_tensor",
    "pq_displays",
    # Verification
    "ALIASES",
    "REGISTRY",
    "Bounds",
    "Identity",
    "VerificationReport",
    "identity_names",
    "resolve_identity",
    "run_all",
    "verify_identity",
]
