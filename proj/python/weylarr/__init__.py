"""Exact root-system and Weyl-arrangement restriction toolkit."""

from weylarr._core import (
    __version__,
    basis_restriction,
    classify_pair,
    orbits,
    positive_roots,
    restriction,
    restriction_char_poly,
    system,
    verify,
)

__all__ = [
    "__version__",
    "basis_restriction",
    "classify_pair",
    "orbits",
    "positive_roots",
    "restriction",
    "restriction_char_poly",
    "system",
    "verify",
]
