from .graph import WeightedGraph
from .nde import NdeTree, SubtreeRange
from .population import Population

# This allows "from app.models import WeightedGraph, NdeTree, Population"
__all__ = [
    "WeightedGraph",
    "NdeTree",
    "SubtreeRange",
    "Population",
]
