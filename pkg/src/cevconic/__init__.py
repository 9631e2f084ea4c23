"""Exact rational geometry of cevian conics.

Points, lines and 3x3 maps are canonical integer triples/matrices, so every
construction and theorem check is an exact equality test.
"""

from cevconic._backend import BACKEND
from cevconic.config import CevianConfig, build_config
from cevconic.conics import Conic, center_of, classify, conic_through_5
from cevconic.kernel import HLine, HPoint, Mat3, join, meet
from cevconic.theorems import REGISTRY, run_all
from cevconic.triangle import Bary, TriangleRef

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Bary", "CevianConfig", "Conic", "HLine", "HPoint", "Mat3",
    "REGISTRY", "TriangleRef", "build_config", "center_of", "classify",
    "conic_through_5", "join", "meet", "run_all",
]
