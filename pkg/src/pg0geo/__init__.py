"""Exact projective-plane arithmetic for surfaces with p_g = 0.

Everything is computed over the rationals: line arrangements and their
singular points, divisor classes on blown-up planes, (Z/2)^n cover
combinatorics, and the symbolic local model of a deforming node.
"""

from pg0geo.plane_geom import ProjPoint, ProjLine, Conic
from pg0geo.picard_lattice import Lattice, DivisorClass, CurveClassKind
from pg0geo.burniat import BurniatConfig

__version__ = "0.1.0"

__all__ = [
    "ProjPoint",
    "ProjLine",
    "Conic",
    "Lattice",
    "DivisorClass",
    "CurveClassKind",
    "BurniatConfig",
    "__version__",
]
