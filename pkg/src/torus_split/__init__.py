"""Maximal tori of symplectic groups over finite fields and the splitting of their normalizers."""

from .bweyl import CycleType, SignedPerm, centralizer, cycle_type, enumerate_types, standard_rep
from .gf import FieldElem, FieldSpec, make_field
from .normalizer import NormalizerGroup, build_normalizer
from .sympmat import MonomialMatrix, SympMatrix
from .torus import TorusPoint, TorusSpec, enumerate_torus, make_torus

__version__ = "0.1.0"

__all__ = [
    "CycleType", "FieldElem", "FieldSpec", "MonomialMatrix", "NormalizerGroup", "SignedPerm",
    "SympMatrix", "TorusPoint", "TorusSpec", "build_normalizer", "centralizer", "cycle_type",
    "enumerate_torus", "enumerate_types", "make_field", "make_torus", "standard_rep",
]
