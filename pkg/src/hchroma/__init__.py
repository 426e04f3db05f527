"""Chromatic functions over universal graph series.

Exact enumeration engines for graph invariants built from homomorphism
counts: symmetric-function expansions indexed by hyper-multigraph
classes, Kneser and Paley host graphs over finite fields, and the
induced/subgraph/functional indices of host series.
"""

__version__ = "0.1.0"

from .graphs import SimpleGraph, parse_graph6, to_graph6  # noqa: F401
