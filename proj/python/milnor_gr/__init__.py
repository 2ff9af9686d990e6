"""Graded quotients gr^m of Milnor K-groups mod p^n of a mixed characteristic CDVF.

Forms and residue-field elements are exchanged as text, e.g. ``"t1^1*dlog[1]"``.
"""

from ._core import (
    MilnorError,
    Params,
    canonical_element,
    canonical_form,
    selftest,
    verify_q1,
)

__all__ = [
    "MilnorError",
    "Params",
    "canonical_element",
    "canonical_form",
    "selftest",
    "verify_q1",
]
