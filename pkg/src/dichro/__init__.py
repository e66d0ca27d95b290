"""Finite-scale toolkit for digraph dichromatic theory.

Exact dichromatic/chromatic solvers with certificates, digirth-preserving
twin amalgamation, arrow-relation checking, and generators for the named
graph families, all behind one CLI (`dichro`).
"""

__version__ = "0.1.0"

from .core import (  # noqa: F401
    Digraph,
    DigonCreated,
    Embedding,
    Graph,
    digirth,
    digraph_union,
    find_embedding,
    induced,
    is_acyclic,
    is_orientation_of,
    reverse,
    underlying_graph,
)
from .solver import (  # noqa: F401
    AcyclicPartition,
    ArcBipartition,
    Exceeded,
    arc_bipartition,
    chromatic_number,
    dichromatic_number,
    max_dichromatic_over_induced,
    verify_acyclic_partition,
)
