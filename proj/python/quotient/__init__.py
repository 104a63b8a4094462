"""Quotient complexity of regular languages."""

from ._core import (
    AlphabetError,
    CapExceeded,
    FormatError,
    ParseError,
    QuotientError,
    RangeError,
    bound_names,
    campaign,
    derive,
    evaluate_bound,
    kappa,
    minimal_dfa,
    normalize,
    profile,
    reversal_campaign,
    verify,
    witness,
    witness_families,
)

__all__ = [
    "AlphabetError",
    "CapExceeded",
    "FormatError",
    "ParseError",
    "QuotientError",
    "RangeError",
    "bound_names",
    "campaign",
    "derive",
    "evaluate_bound",
    "kappa",
    "minimal_dfa",
    "normalize",
    "profile",
    "reversal_campaign",
    "verify",
    "witness",
    "witness_families",
]
