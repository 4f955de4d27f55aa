"""Immersed multicurves in the marked torus.

Exact computation with taut (pegboard-geodesic) curves: minimal-position
intersection numbers, crossing-height bookkeeping in the vertical cover,
type-D loop-calculus conversion, and symmetric curve simplification.
"""

from .curves import (
    IDENTITY,
    LineComponent,
    MCGMatrix,
    Multicurve,
    NEG_IDENTITY,
    PegComponent,
    apply_mcg,
    homology_class,
    involute,
    is_self_conjugate,
    multicurve,
)
from .tautify import NullHomotopic, RawCurve, f2_word, tautify
from .words import reduce_word

__all__ = [
    "IDENTITY",
    "LineComponent",
    "MCGMatrix",
    "Multicurve",
    "NEG_IDENTITY",
    "NullHomotopic",
    "PegComponent",
    "RawCurve",
    "apply_mcg",
    "f2_word",
    "homology_class",
    "involute",
    "is_self_conjugate",
    "multicurve",
    "reduce_word",
    "tautify",
]
