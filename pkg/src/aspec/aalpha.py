"""Degree data and the weighted combination of degree and adjacency matrices.

The central object is ``alpha * D + (1 - alpha) * A`` for a simple graph with
degree matrix D and adjacency matrix A, with the mixing weight alpha in
[0, 1]. alpha = 0 gives the adjacency matrix, alpha = 1/2 half the signless
Laplacian, alpha = 1 the degree matrix.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError
from .graphs import Graph

__all__ = [
    "AlphaParam",
    "degree_vector",
    "adjacency_matrix",
    "build_a_alpha",
    "signless_laplacian",
]


@dataclass(frozen=True)
class AlphaParam:
    """Mixing weight of the degree matrix; beta = 1 - alpha weights adjacency."""

    alpha: float
    beta: float = field(init=False)

    def __post_init__(self) -> None:
        a = float(self.alpha)
        if not 0.0 <= a <= 1.0:
            raise ValidationError(f"alpha must lie in [0, 1], got {self.alpha!r}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", 1.0 - a)


def degree_vector(graph: Graph) -> np.ndarray:
    """Vertex degrees as an integer vector indexed 0..n-1 for labels 1..n."""
    deg = np.zeros(graph.n_vertices, dtype=np.int64)
    for u, v in graph.edges:
        deg[u - 1] += 1
        deg[v - 1] += 1
    return deg


def adjacency_matrix(graph: Graph) -> np.ndarray:
    a = np.zeros((graph.n_vertices, graph.n_vertices))
    for u, v in graph.edges:
        a[u - 1, v - 1] = 1.0
        a[v - 1, u - 1] = 1.0
    return a


def build_a_alpha(graph: Graph, weights: AlphaParam) -> np.ndarray:
    """Dense symmetric matrix alpha * D + (1 - alpha) * A."""
    n = graph.n_vertices
    m = np.zeros((n, n))
    beta = weights.beta
    for u, v in graph.edges:
        m[u - 1, v - 1] = beta
        m[v - 1, u - 1] = beta
    np.fill_diagonal(m, weights.alpha * degree_vector(graph).astype(np.float64))
    return m


def signless_laplacian(graph: Graph) -> np.ndarray:
    """D + A; equals twice the alpha = 1/2 combination matrix."""
    q = adjacency_matrix(graph)
    np.fill_diagonal(q, degree_vector(graph).astype(np.float64))
    return q
