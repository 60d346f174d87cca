"""Spectral-radius bounds for unicyclic graphs and their threshold constants.

For a connected unicyclic graph with maximum degree at least 3, the spectral
radius of the combination matrix stays strictly below

    alpha * max_degree + 2 * (1 - alpha) * sqrt(max_degree - 1)
                       * cos(pi / (2 * height + 1)),

where height is one more than the deepest pendant tree hanging off the cycle.
The inequality holds for every alpha in [0, 1) when max_degree >= 4, or when
max_degree = 3 with height >= 4; for max_degree = 3 with height 2 or 3 it
holds once alpha exceeds a threshold determined by the root of a small
parametric eigenvalue equation (see :func:`alpha_threshold`). A graph with
max degree 2 is a bare cycle with spectral radius exactly 2, and the bound
does not apply.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .aalpha import AlphaParam, build_a_alpha, degree_vector
from .errors import NumericalError, ValidationError
from .graphs import Graph, decompose_unicyclic
from .spectral import DEFAULT_SOLVE_TOL, SymTridiagonal, dense_eigenvalues, tridiag_eigenvalues

__all__ = [
    "BoundReport",
    "unicyclic_height",
    "cosine_reference_radius",
    "spectral_radius_bound",
    "bound_comparison_matrix",
    "cosine_reference_matrix",
    "threshold_matrix_height3",
    "threshold_matrix_height2",
    "threshold_root_height3",
    "threshold_root_height2",
    "alpha_threshold",
    "verify_bound",
]


def unicyclic_height(graph: Graph) -> int:
    """One plus the largest pendant-tree depth over the cycle vertices."""
    dec = decompose_unicyclic(graph)
    return max(dec.heights) + 1


def cosine_reference_radius(delta: int, k: int) -> float:
    """Closed form 2 * sqrt(delta - 1) * cos(pi / (2k + 1))."""
    if not isinstance(delta, int) or delta < 2:
        raise ValidationError(f"degree must be an integer >= 2, got {delta!r}")
    if not isinstance(k, int) or k < 1:
        raise ValidationError(f"height must be a positive integer, got {k!r}")
    return 2.0 * math.sqrt(delta - 1.0) * math.cos(math.pi / (2 * k + 1))


def spectral_radius_bound(delta: int, height: int, weights: AlphaParam) -> float:
    """Bound value alpha * delta + beta * cosine_reference_radius(delta, height)."""
    if not isinstance(delta, int) or delta < 3:
        raise ValidationError(f"bound requires max degree >= 3, got {delta!r}")
    if not isinstance(height, int) or height < 1:
        raise ValidationError(f"height must be a positive integer, got {height!r}")
    if weights.alpha >= 1.0:
        raise ValidationError("bound requires alpha in [0, 1)")
    return weights.alpha * delta + weights.beta * cosine_reference_radius(delta, height)


def bound_comparison_matrix(delta: int, k: int) -> SymTridiagonal:
    """k-by-k tridiagonal dominating the alpha-free part of the corner block.

    Zero diagonal except 2 at the last entry; codiagonal sqrt(delta - 1)
    except sqrt(delta - 2) at the last coupling.
    """
    if not isinstance(delta, int) or delta < 3:
        raise ValidationError(f"degree must be an integer >= 3, got {delta!r}")
    if not isinstance(k, int) or k < 2:
        raise ValidationError(f"order must be an integer >= 2, got {k!r}")
    diag = np.zeros(k)
    diag[-1] = 2.0
    off = np.full(k - 1, math.sqrt(delta - 1.0))
    off[-1] = math.sqrt(delta - 2.0)
    return SymTridiagonal(diag, off)


def cosine_reference_matrix(delta: int, k: int) -> SymTridiagonal:
    """k-by-k tridiagonal whose radius is exactly cosine_reference_radius.

    Zero diagonal except sqrt(delta - 1) at the last entry; constant
    codiagonal sqrt(delta - 1).
    """
    if not isinstance(delta, int) or delta < 2:
        raise ValidationError(f"degree must be an integer >= 2, got {delta!r}")
    if not isinstance(k, int) or k < 2:
        raise ValidationError(f"order must be an integer >= 2, got {k!r}")
    s = math.sqrt(delta - 1.0)
    diag = np.zeros(k)
    diag[-1] = s
    off = np.full(k - 1, s)
    return SymTridiagonal(diag, off)


def threshold_matrix_height3(corner: float) -> SymTridiagonal:
    """3-by-3 parametric block for the degree-3, height-3 threshold equation."""
    return SymTridiagonal(
        np.array([float(corner), 0.0, 2.0]), np.array([math.sqrt(2.0), 1.0])
    )


def threshold_matrix_height2(corner: float) -> SymTridiagonal:
    """2-by-2 parametric block for the degree-3, height-2 threshold equation."""
    return SymTridiagonal(np.array([float(corner), 2.0]), np.array([1.0]))


def _radius(tridiag: SymTridiagonal, tol: float) -> float:
    return float(tridiag_eigenvalues(tridiag, tol)[-1])


def _corner_root(matrix_fn, target: float, lo: float, hi: float, tol: float) -> float:
    """Bisect the corner value where the parametric radius meets the target.

    The radius is strictly increasing in the corner entry, so the sign of
    radius - target brackets the root.
    """
    solve_tol = min(tol, 1e-13)
    g_lo = _radius(matrix_fn(lo), solve_tol) - target
    g_hi = _radius(matrix_fn(hi), solve_tol) - target
    if not (g_lo < 0.0 < g_hi):
        raise NumericalError(
            f"threshold root not bracketed on [{lo}, {hi}]: endpoints {g_lo}, {g_hi}"
        )
    a, b = lo, hi
    for _ in range(300):
        if b - a <= tol:
            break
        mid = 0.5 * (a + b)
        if _radius(matrix_fn(mid), solve_tol) - target < 0.0:
            a = mid
        else:
            b = mid
    return 0.5 * (a + b)


_root_cache: dict[tuple[str, float], float] = {}


def threshold_root_height3(tol: float = 1e-12) -> float:
    """Corner value in (-0.25, -0.2) where the height-3 block radius equals
    the degree-3 height-3 cosine reference."""
    key = ("h3", float(tol))
    if key not in _root_cache:
        _root_cache[key] = _corner_root(
            threshold_matrix_height3, cosine_reference_radius(3, 3), -0.25, -0.2, tol
        )
    return _root_cache[key]


def threshold_root_height2(tol: float = 1e-12) -> float:
    """Corner value in (-1.2, -1.1) where the height-2 block radius equals
    the degree-3 height-2 cosine reference."""
    key = ("h2", float(tol))
    if key not in _root_cache:
        _root_cache[key] = _corner_root(
            threshold_matrix_height2, cosine_reference_radius(3, 2), -1.2, -1.1, tol
        )
    return _root_cache[key]


def alpha_threshold(height: int, tol: float = 1e-12) -> float:
    """Smallest alpha above which the degree-3 bound holds at this height.

    Only heights 2 and 3 carry a threshold; the bound holds for every alpha
    in [0, 1) at height >= 4. The threshold is -c / (2 - c) for the
    corresponding corner root c, mapping the root back through the corner
    parametrization corner = -2 * alpha / (1 - alpha).
    """
    if height == 3:
        root = threshold_root_height3(tol)
    elif height == 2:
        root = threshold_root_height2(tol)
    else:
        raise ValidationError(f"threshold defined only for heights 2 and 3, got {height!r}")
    return -root / (2.0 - root)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of checking the spectral-radius bound on one unicyclic graph."""

    n_vertices: int
    delta: int
    height: int
    alpha: float
    rho: float
    bound: float | None
    applicable: bool
    case: str
    satisfied: bool | None
    slack: float | None

    def to_jsonable(self) -> dict:
        return {
            "n_vertices": self.n_vertices,
            "delta": self.delta,
            "height": self.height,
            "alpha": self.alpha,
            "rho": self.rho,
            "bound": self.bound,
            "applicable": self.applicable,
            "case": self.case,
            "satisfied": self.satisfied,
            "slack": self.slack,
        }


def verify_bound(
    graph: Graph, weights: AlphaParam, solve_tol: float = DEFAULT_SOLVE_TOL
) -> BoundReport:
    """Classify a unicyclic graph and check its spectral radius against the bound.

    The radius is computed densely (the oracle route); the report records the
    case split, whether the bound applies at this alpha, and the slack when it
    does. Non-unicyclic input raises a validation error.
    """
    if weights.alpha >= 1.0:
        raise ValidationError("bound requires alpha in [0, 1)")
    dec = decompose_unicyclic(graph)
    delta = int(degree_vector(graph).max())
    height = max(dec.heights) + 1
    rho = float(dense_eigenvalues(build_a_alpha(graph, weights), solve_tol)[-1])

    if delta <= 2:
        return BoundReport(
            graph.n_vertices, delta, height, weights.alpha, rho,
            None, False, "plain-cycle", None, None,
        )

    bound = spectral_radius_bound(delta, height, weights)
    if delta >= 4:
        case, applicable = "max-degree-4-or-more", True
    elif height >= 4:
        case, applicable = "degree-3-height-4-or-more", True
    else:
        threshold = alpha_threshold(height)
        if weights.alpha > threshold:
            case, applicable = f"degree-3-height-{height}-above-threshold", True
        else:
            case, applicable = f"degree-3-height-{height}-below-threshold", False

    satisfied = bool(rho < bound) if applicable else None
    return BoundReport(
        graph.n_vertices, delta, height, weights.alpha, rho,
        bound, applicable, case, satisfied, bound - rho,
    )
