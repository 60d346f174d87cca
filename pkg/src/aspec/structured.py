"""Spectra of base graphs with one rooted-graph copy attached per vertex.

The combination matrix of such a composition decomposes over the base: each
base eigenvalue rho contributes the spectrum of the attachment's combination
matrix with rho added at the root corner, each copy contributing once. When
the attachment is a level-regular rooted tree the corner matrices collapse to
small symmetric tridiagonals, so the full spectrum of a graph with r * n
vertices reduces to k - 1 shared leading blocks (with known multiplicities)
plus one corner-shifted block per distinct base eigenvalue. Cycle bases admit
closed-form base eigenvalues, avoiding the dense solve entirely.

All of this requires the adjacency weight to be positive, so mixing weights
here live in [0, 1) except for the general dense route, which allows 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .aalpha import AlphaParam, build_a_alpha
from .errors import NumericalError, ValidationError
from .graphs import Graph, GeneralizedBetheTreeSpec, RootedGraph, root_last
from .spectral import (
    DEFAULT_MERGE_TOL,
    DEFAULT_SOLVE_TOL,
    SpectrumMultiset,
    SymTridiagonal,
    dense_eigenvalues,
    merge_spectrum,
    tridiag_eigenvalues,
)

__all__ = [
    "CharPolySequence",
    "LevelBlock",
    "CornerBlock",
    "StructuredSpectrumReport",
    "tree_tridiagonal",
    "corner_shifted_tridiagonal",
    "base_eigenvalues",
    "composition_spectrum",
    "structured_spectrum",
    "cycle_structured_spectrum",
]


class CharPolySequence:
    """Characteristic polynomials of the leading tridiagonal blocks of a spec.

    Index 0 is the constant 1; index j the monic characteristic polynomial of
    the j-by-j leading block from :func:`tree_tridiagonal`, evaluated by the
    three-term recursion driven by level degrees and branching ratios.
    """

    def __init__(self, spec: GeneralizedBetheTreeSpec, weights: AlphaParam) -> None:
        self.spec = spec
        self.weights = weights
        self._beta2 = weights.beta * weights.beta
        self._branching = spec.branching()

    @property
    def k(self) -> int:
        return self.spec.k

    def eval(self, j: int, lam: float) -> float:
        """Value of the index-j polynomial at lam; j runs 0..k."""
        if not isinstance(j, int) or not 0 <= j <= self.k:
            raise ValidationError(f"index must lie in 0..{self.k}, got {j!r}")
        return self.values(lam)[j]

    def values(self, lam: float) -> list[float]:
        """All polynomial values at lam, indices 0..k."""
        lam = float(lam)
        alpha = self.weights.alpha
        degrees = self.spec.degrees
        out = [1.0]
        if self.k == 0:
            return out
        p_prev, p = 1.0, lam - alpha
        out.append(p)
        for i in range(2, self.k + 1):
            p, p_prev = (
                (lam - alpha * degrees[i - 1]) * p
                - self._beta2 * self._branching[i - 2] * p_prev,
                p,
            )
            out.append(p)
        return out


def _tridiag_entries(
    spec: GeneralizedBetheTreeSpec, weights: AlphaParam, j: int
) -> tuple[list[float], list[float]]:
    degrees = spec.degrees
    alpha, beta = weights.alpha, weights.beta
    diag = [alpha * degrees[i] for i in range(j)]
    off = []
    for i in range(1, j):
        level_above = i + 1
        if level_above < spec.k:
            off.append(beta * math.sqrt(degrees[level_above - 1] - 1))
        else:
            off.append(beta * math.sqrt(degrees[level_above - 1]))
    return diag, off


def tree_tridiagonal(
    spec: GeneralizedBetheTreeSpec, weights: AlphaParam, j: int
) -> SymTridiagonal:
    """j-by-j leading block of the level tridiagonal attached to a spec.

    Diagonal entries weight the level degrees; codiagonal entries carry the
    square roots of the downward branching counts scaled by the adjacency
    weight. Its characteristic polynomial is CharPolySequence index j.
    """
    if not isinstance(j, int) or not 1 <= j <= spec.k:
        raise ValidationError(f"block size must lie in 1..{spec.k}, got {j!r}")
    if weights.alpha >= 1.0:
        raise ValidationError("tridiagonal reduction requires alpha in [0, 1)")
    diag, off = _tridiag_entries(spec, weights, j)
    return SymTridiagonal(np.array(diag), np.array(off))


def corner_shifted_tridiagonal(
    spec: GeneralizedBetheTreeSpec, weights: AlphaParam, shift: float
) -> SymTridiagonal:
    """Full-depth level tridiagonal with ``shift`` added at the root corner.

    For a one-level spec this degenerates to the 1-by-1 matrix [shift]. Its
    characteristic polynomial is P_k - shift * P_(k-1) in CharPolySequence
    indices.
    """
    shift = float(shift)
    if not math.isfinite(shift):
        raise ValidationError("corner shift must be finite")
    if spec.k == 1:
        return SymTridiagonal(np.array([shift]), np.empty(0))
    diag, off = _tridiag_entries(spec, weights, spec.k)
    diag[-1] += shift
    return SymTridiagonal(np.array(diag), np.array(off))


def base_eigenvalues(
    base: Graph, weights: AlphaParam, tol: float = DEFAULT_SOLVE_TOL
) -> np.ndarray:
    """Eigenvalues of the base graph's combination matrix, descending."""
    if not base.is_connected():
        raise ValidationError("base graph must be connected")
    return dense_eigenvalues(build_a_alpha(base, weights), tol)[::-1].copy()


@dataclass(frozen=True)
class LevelBlock:
    """Shared leading block: eigenvalues repeated for every copy and level gap."""

    size: int
    eigenvalues: tuple[float, ...]
    multiplicity: int

    def to_jsonable(self) -> dict:
        return {
            "size": self.size,
            "eigenvalues": list(self.eigenvalues),
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class CornerBlock:
    """Corner-shifted full-depth block for one distinct base eigenvalue.

    ``base_indices`` lists the 1-based descending positions of the base
    eigenvalue(s) equal to ``shift``; the block's eigenvalues enter the merged
    spectrum with multiplicity ``len(base_indices)``.
    """

    base_indices: tuple[int, ...]
    shift: float
    eigenvalues: tuple[float, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.base_indices)

    def to_jsonable(self) -> dict:
        return {
            "base_indices": list(self.base_indices),
            "shift": self.shift,
            "eigenvalues": list(self.eigenvalues),
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class StructuredSpectrumReport:
    """Block-level account of a structured spectrum plus the merged multiset."""

    base_order: int
    alpha: float
    level_blocks: tuple[LevelBlock, ...]
    corner_blocks: tuple[CornerBlock, ...]
    merged: SpectrumMultiset
    spectral_radius: float

    @property
    def total_multiplicity(self) -> int:
        return self.merged.total_multiplicity

    def to_jsonable(self) -> dict:
        return {
            "base_order": self.base_order,
            "alpha": self.alpha,
            "level_blocks": [b.to_jsonable() for b in self.level_blocks],
            "corner_blocks": [b.to_jsonable() for b in self.corner_blocks],
            "spectrum": self.merged.to_jsonable(),
            "spectral_radius": self.spectral_radius,
        }


def composition_spectrum(
    base: Graph,
    attachment: RootedGraph,
    weights: AlphaParam,
    solve_tol: float = DEFAULT_SOLVE_TOL,
    merge_tol: float = DEFAULT_MERGE_TOL,
) -> SpectrumMultiset:
    """Spectrum of the composition via per-base-eigenvalue corner shifts.

    Works for any connected rooted attachment and any alpha in [0, 1]: each
    descending base eigenvalue is added to the root-corner entry of the
    attachment's combination matrix and the resulting dense matrix solved.
    """
    rhos = base_eigenvalues(base, weights, solve_tol)
    h = root_last(attachment)
    block = build_a_alpha(h.graph, weights)
    pairs: list[tuple[float, int]] = []
    for rho in rhos:
        shifted = block.copy()
        shifted[-1, -1] += rho
        pairs.extend((float(v), 1) for v in dense_eigenvalues(shifted, solve_tol))
    return merge_spectrum(pairs, merge_tol)


def _group_descending(
    rhos: np.ndarray, group_tol: float
) -> list[tuple[float, tuple[int, ...]]]:
    """Single-linkage clustering of descending base eigenvalues.

    Numerically repeated base eigenvalues must share one corner block, so
    values whose descending neighbors differ by at most group_tol collapse to
    their mean."""
    groups: list[tuple[float, tuple[int, ...]]] = []
    pos = 0
    n = rhos.shape[0]
    while pos < n:
        j = pos + 1
        while j < n and rhos[j - 1] - rhos[j] <= group_tol:
            j += 1
        members = rhos[pos:j]
        groups.append((float(members.mean()), tuple(range(pos + 1, j + 1))))
        pos = j
    return groups


def _assemble(
    base_order: int,
    spec: GeneralizedBetheTreeSpec,
    weights: AlphaParam,
    rho_groups: list[tuple[float, tuple[int, ...]]],
    solve_tol: float,
    merge_tol: float,
) -> StructuredSpectrumReport:
    counts = spec.counts
    pairs: list[tuple[float, int]] = []
    level_blocks = []
    for j in range(1, spec.k):
        mult = base_order * (counts[j - 1] - counts[j])
        eigs = tridiag_eigenvalues(tree_tridiagonal(spec, weights, j), solve_tol)
        level_blocks.append(LevelBlock(j, tuple(float(v) for v in eigs), mult))
        if mult > 0:
            pairs.extend((float(v), mult) for v in eigs)
    corner_blocks = []
    for shift, indices in rho_groups:
        eigs = tridiag_eigenvalues(
            corner_shifted_tridiagonal(spec, weights, shift), solve_tol
        )
        corner_blocks.append(CornerBlock(indices, shift, tuple(float(v) for v in eigs)))
        pairs.extend((float(v), len(indices)) for v in eigs)
    merged = merge_spectrum(pairs, merge_tol)
    expected = base_order * spec.total_vertices
    if merged.total_multiplicity != expected:
        raise NumericalError(
            f"block multiplicities sum to {merged.total_multiplicity}, "
            f"expected {expected}"
        )
    # the top cluster keeps its extreme member, not the weighted mean: the
    # spectral radius is the dominant corner block's top eigenvalue, and a
    # block eigenvalue within merge_tol of it must not drag the reported
    # maximum below that value
    top = max(value for value, _ in pairs)
    if merged.entries[-1][0] != top:
        merged = SpectrumMultiset(
            merged.entries[:-1] + ((top, merged.entries[-1][1]),), merge_tol
        )
    radius = max(corner_blocks[0].eigenvalues)
    return StructuredSpectrumReport(
        base_order,
        weights.alpha,
        tuple(level_blocks),
        tuple(corner_blocks),
        merged,
        float(radius),
    )


def structured_spectrum(
    base: Graph,
    spec: GeneralizedBetheTreeSpec,
    weights: AlphaParam,
    solve_tol: float = DEFAULT_SOLVE_TOL,
    merge_tol: float = DEFAULT_MERGE_TOL,
) -> StructuredSpectrumReport:
    """Blockwise spectrum of a base graph with one spec tree copy per vertex.

    Level block j carries multiplicity r * (counts[j-1] - counts[j]); each
    base eigenvalue distinct up to merge_tol contributes a corner-shifted
    block with the cluster size as multiplicity. The largest eigenvalue of
    the block for the largest base eigenvalue is the spectral radius of the
    whole composition.
    """
    if weights.alpha >= 1.0:
        raise ValidationError("structured spectrum requires alpha in [0, 1)")
    rhos = base_eigenvalues(base, weights, solve_tol)
    return _assemble(
        base.n_vertices,
        spec,
        weights,
        _group_descending(rhos, merge_tol),
        solve_tol,
        merge_tol,
    )


def _cycle_rho_groups(
    r: int, weights: AlphaParam
) -> list[tuple[float, tuple[int, ...]]]:
    alpha, beta = weights.alpha, weights.beta
    groups: list[tuple[float, tuple[int, ...]]] = []
    for t in range(r // 2 + 1):
        if t == 0:
            groups.append((2.0, (1,)))
        elif r % 2 == 0 and t == r // 2:
            groups.append((2.0 * alpha - 2.0 * beta, (r // 2 + 1,)))
        else:
            rho = 2.0 * alpha + 2.0 * beta * math.cos(2.0 * math.pi * t / r)
            groups.append((rho, (t + 1, r + 1 - t)))
    return groups


def cycle_structured_spectrum(
    r: int,
    spec: GeneralizedBetheTreeSpec,
    weights: AlphaParam,
    solve_tol: float = DEFAULT_SOLVE_TOL,
    merge_tol: float = DEFAULT_MERGE_TOL,
) -> StructuredSpectrumReport:
    """Structured spectrum over a cycle base using closed-form base eigenvalues.

    The base eigenvalues are 2 * alpha + 2 * beta * cos(2 * pi * t / r) for
    t = 0..r-1, grouped by the cosine symmetry; the largest is exactly 2 for
    every mixing weight, so the dominant corner shift is exactly 2.
    """
    if not isinstance(r, int) or r < 3:
        raise ValidationError(f"cycle length must be an integer >= 3, got {r!r}")
    if weights.alpha >= 1.0:
        raise ValidationError("structured spectrum requires alpha in [0, 1)")
    return _assemble(r, spec, weights, _cycle_rho_groups(r, weights), solve_tol, merge_tol)
