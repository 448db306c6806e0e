"""Exact knotting/linking invariants for spatial embeddings of the Petersen-family graphs.

The package is organised in layers:

* :mod:`graphknots.graphs` -- abstract graphs, cycles, link patterns,
  triangle-Y moves and the Petersen-family catalog.
* :mod:`graphknots.spatial` -- exact integer/rational embeddings, regular
  projection, and the twist-parameterised canonical K331 diagram family.
* :mod:`graphknots.diagrams` -- crossing data, Gauss codes, skein moves.
* :mod:`graphknots.invariants` -- linking number, the second Conway
  coefficient, and the Wu invariant stack.
* :mod:`graphknots.verify` -- identity checks and certificate searches.
* :mod:`graphknots.cli` -- batch command-line front end.

All arithmetic on coordinates, crossings and lattices is exact (ints and
fractions); no floating point is used anywhere.
"""

from graphknots.graphs import (
    Graph,
    Cycle,
    LinkPattern,
    PetersenCatalog,
    build_petersen_family,
    triangle_y_move,
    enumerate_cycles,
    enumerate_link_patterns,
    k331_subgraphs,
    phi_cycle_map,
    psi_link_map,
)

__all__ = [
    "Graph",
    "Cycle",
    "LinkPattern",
    "PetersenCatalog",
    "build_petersen_family",
    "triangle_y_move",
    "enumerate_cycles",
    "enumerate_link_patterns",
    "k331_subgraphs",
    "phi_cycle_map",
    "psi_link_map",
]

__version__ = "0.1.0"
