"""Exact computations with Kauffman bracket skein algebras at roots of unity."""

from .cyclotomic import CycloScalar, RootSpec, root_spec
from .surface_coords import SurfaceSig, build_datum, build_standard_pants, build_standard_triangulation
from .torus_algebra import TorusSkein

__version__ = "0.1.0"

__all__ = [
    "CycloScalar",
    "RootSpec",
    "SurfaceSig",
    "TorusSkein",
    "build_datum",
    "build_standard_pants",
    "build_standard_triangulation",
    "root_spec",
]
