"""Exact Clifford analysis: Psi operators, harmonic, (phi,psi)-harmonic and
inframonogenic polynomial fields.

Multivectors and fields are passed as text, e.g. ``"3/5*e[1,2] - x1*x2*e[3]"``.
Structural sets use the CLI spec strings: ``standard``, ``reversed``,
``signedperm:2,-1,3``, ``rot2:3/5``, ``refl2:3/5``, ``matrix:<path>``.
"""

from fractions import Fraction

from ._clifan import (
    ParseError,
    apply_psi,
    class_dimensions,
    classify,
    converse_counterexample,
    demo,
    find_witness,
    format_field,
    product,
    psi_rank,
    verify,
)
from . import _clifan


def closed_form(m, j, k):
    """Eigenvalue of Psi_j (equal sets) on grade-k multivectors in dimension m."""
    return Fraction(_clifan.closed_form(m, j, k))


def hypergeometric_form(m, j, k):
    return Fraction(_clifan.hypergeometric_form(m, j, k))


__all__ = [
    "ParseError",
    "apply_psi",
    "class_dimensions",
    "classify",
    "closed_form",
    "converse_counterexample",
    "demo",
    "find_witness",
    "format_field",
    "hypergeometric_form",
    "product",
    "psi_rank",
    "verify",
]
