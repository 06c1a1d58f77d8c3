"""Exact quantum-torus models of skein algebras of surfaces."""

from __future__ import annotations

from .errors import SkeinError
from .ground import GroundScalar, VarSet, delta, q_half, q_pow
from .torus import AntisymForm, TorusElement, mono_hom, reflection, weyl_normalize

__all__ = [
    "AntisymForm",
    "GroundScalar",
    "SkeinError",
    "TorusElement",
    "VarSet",
    "delta",
    "mono_hom",
    "q_half",
    "q_pow",
    "reflection",
    "weyl_normalize",
]
