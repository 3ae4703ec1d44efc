"""weldkit: a combinatorial workbench for virtual and welded knot diagrams."""

from weldkit.diagram import (
    GaussCode,
    PlanarDiagram,
    Token,
    UNKNOT,
    ValidationError,
    realize_gauss_code,
)

__all__ = [
    "GaussCode",
    "PlanarDiagram",
    "Token",
    "UNKNOT",
    "ValidationError",
    "realize_gauss_code",
]

__version__ = "0.1.0"
