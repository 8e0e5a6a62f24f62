"""Chekanov-Eliashberg DGAs of Legendrian knots, twist-spun tori, and obstructions."""

from .algebra import (
    ChordGen,
    CoefMonomial,
    DGA,
    DGAMorphism,
    NCPoly,
    check_d_squared,
    check_morphism,
    eval_coefficients,
    extend_leibniz,
    identity_morphism,
    nc_multiply,
)

__all__ = [
    "ChordGen",
    "CoefMonomial",
    "DGA",
    "DGAMorphism",
    "NCPoly",
    "check_d_squared",
    "check_morphism",
    "eval_coefficients",
    "extend_leibniz",
    "identity_morphism",
    "nc_multiply",
]

__version__ = "0.1.0"
