"""Galois groups and monogenicity of even sextic trinomials x^6 + A x^(2k) + B."""

from .classify import Classification, classify_direct, classify_theorem_main, cross_validate
from .galois import GaloisGroup, galois_group
from .monogenic import MonogenicVerdict, is_monogenic
from .trinomial import Trinomial

__all__ = [
    "Classification",
    "GaloisGroup",
    "MonogenicVerdict",
    "Trinomial",
    "classify_direct",
    "classify_theorem_main",
    "cross_validate",
    "galois_group",
    "is_monogenic",
]
__version__ = "0.1.0"
