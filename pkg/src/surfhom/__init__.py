"""Hochschild and cyclic homology of gentle algebras from triangulated
unpunctured surfaces."""

from importlib import resources

from .homology import AlgebraSummary, HomologyTable, compute_table, ses_dimension_check
from .quiver import Path, Quiver, SurfaceAlgebra, Tag
from .surface import (Triangulation, flip, internal_triangles, isomorphic,
                      parse_triangulation, topology, validate)

__version__ = "0.1.0"


def example_path(name: str):
    """Path of a bundled triangulation, e.g. ``example_path("fig2")``."""
    return resources.files(__package__).joinpath("data", f"{name}.tri")


def load_example(name: str) -> Triangulation:
    return parse_triangulation(example_path(name).read_text(encoding="utf-8"))


__all__ = [
    "AlgebraSummary", "HomologyTable", "Path", "Quiver", "SurfaceAlgebra", "Tag",
    "Triangulation", "compute_table", "example_path", "flip", "internal_triangles",
    "isomorphic", "load_example", "parse_triangulation", "ses_dimension_check",
    "topology", "validate",
]
