"""Spectral graph geometry: Laplacians, curvature, path homology and learning harnesses."""

from .graph import DiGraph, Graph, GraphError, Orientation, from_edge_list
from .io import TOOL_VERSION as __version__

__all__ = ["DiGraph", "Graph", "GraphError", "Orientation", "from_edge_list", "__version__"]
