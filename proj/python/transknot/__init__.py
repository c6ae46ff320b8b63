"""Braid words, Legendrian fronts, contact forms and cyclic cover homology."""

from ._transknot import (
    Braid,
    BraidError,
    ContactError,
    FrontError,
    ParseError,
    certify,
    contact_check,
    contact_density,
    equivalent,
    front_invariants,
    stabilize_front,
    verify_certificate,
)

__all__ = [
    "Braid",
    "BraidError",
    "ContactError",
    "FrontError",
    "ParseError",
    "certify",
    "contact_check",
    "contact_density",
    "equivalent",
    "front_invariants",
    "stabilize_front",
    "verify_certificate",
]
