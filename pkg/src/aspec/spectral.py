"""Eigenvalue machinery: tridiagonal and dense solvers, spectra as multisets.

Two independent routes to a spectrum live here. Symmetric tridiagonal
matrices are solved by Sturm-count bisection (count of eigenvalues below a
shift, monotone in the shift), dense symmetric matrices by cyclic threshold
Jacobi sweeps. The dense route is the oracle the structured computations are
verified against; the two routes share no eigenvalue code.

Spectra are value/multiplicity multisets produced by single-linkage merging
of near-equal values; comparison expands both sides and pairs them in sorted
order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import BACKEND, kernels
from .errors import ValidationError

__all__ = [
    "BACKEND",
    "DEFAULT_SOLVE_TOL",
    "DEFAULT_MERGE_TOL",
    "DEFAULT_COMPARE_TOL",
    "SymTridiagonal",
    "SpectrumMultiset",
    "SpectrumComparison",
    "WeylReport",
    "sturm_count",
    "tridiag_eigenvalues",
    "dense_eigenvalues",
    "charpoly_value",
    "merge_spectrum",
    "spectrum_from_eigenvalues",
    "compare_spectra",
    "weyl_check",
]

DEFAULT_SOLVE_TOL = 1e-12
DEFAULT_MERGE_TOL = 1e-9
DEFAULT_COMPARE_TOL = 1e-8

_JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True, eq=False)
class SymTridiagonal:
    """Symmetric tridiagonal matrix stored as diagonal and codiagonal vectors."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self) -> None:
        d = np.asarray(self.diag, dtype=np.float64).copy()
        e = np.asarray(self.offdiag, dtype=np.float64).copy()
        if d.ndim != 1 or e.ndim != 1:
            raise ValidationError("diag and offdiag must be one-dimensional")
        if d.shape[0] < 1:
            raise ValidationError("matrix order must be at least 1")
        if e.shape[0] != d.shape[0] - 1:
            raise ValidationError(
                f"offdiag length must be order - 1, got {e.shape[0]} for order {d.shape[0]}"
            )
        if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
            raise ValidationError("entries must be finite")
        d.setflags(write=False)
        e.setflags(write=False)
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def order(self) -> int:
        return int(self.diag.shape[0])

    def to_dense(self) -> np.ndarray:
        m = np.diag(self.diag)
        if self.order > 1:
            m += np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)
        return m

    def gershgorin_interval(self) -> tuple[float, float]:
        """Padded disc-union interval strictly containing every eigenvalue."""
        radius = np.zeros(self.order)
        e = np.abs(self.offdiag)
        if self.order > 1:
            radius[:-1] += e
            radius[1:] += e
        lo = float(np.min(self.diag - radius))
        hi = float(np.max(self.diag + radius))
        pad = 1e-3 * (1.0 + (hi - lo) + max(abs(lo), abs(hi)))
        return lo - pad, hi + pad


def sturm_count(tridiag: SymTridiagonal, x: float) -> int:
    """Number of eigenvalues strictly below x (exact hits count as below)."""
    return int(kernels.sturm_count(tridiag.diag, tridiag.offdiag, float(x)))


def tridiag_eigenvalues(
    tridiag: SymTridiagonal, tol: float = DEFAULT_SOLVE_TOL
) -> np.ndarray:
    """All eigenvalues ascending, by bisection on the Sturm count."""
    if not tol > 0.0:
        raise ValidationError(f"tolerance must be positive, got {tol}")
    lo, hi = tridiag.gershgorin_interval()
    return kernels.bisect_eigenvalues(tridiag.diag, tridiag.offdiag, lo, hi, float(tol))


def dense_eigenvalues(matrix, tol: float = DEFAULT_SOLVE_TOL) -> np.ndarray:
    """All eigenvalues ascending of a dense symmetric matrix, by Jacobi sweeps."""
    if not tol > 0.0:
        raise ValidationError(f"tolerance must be positive, got {tol}")
    m = np.array(matrix, dtype=np.float64, order="C", copy=True)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise ValidationError("matrix order must be at least 1")
    if not np.array_equal(m, m.T):
        raise ValidationError("matrix is not symmetric")
    if not np.all(np.isfinite(m)):
        raise ValidationError("entries must be finite")
    return np.asarray(kernels.jacobi_eigenvalues(m, float(tol), _JACOBI_MAX_SWEEPS))


def charpoly_value(tridiag: SymTridiagonal, lam: float) -> float:
    """det(lam * I - T) via the three-term recursion on leading blocks."""
    lam = float(lam)
    d = tridiag.diag
    e = tridiag.offdiag
    p_prev = 1.0
    p = lam - d[0]
    for i in range(1, tridiag.order):
        p, p_prev = (lam - d[i]) * p - e[i - 1] * e[i - 1] * p_prev, p
    return p


@dataclass(frozen=True, eq=False)
class SpectrumMultiset:
    """Eigenvalues with integer multiplicities, ascending, gaps above merge_tol."""

    entries: tuple[tuple[float, int], ...]
    merge_tol: float

    def __post_init__(self) -> None:
        if not self.merge_tol > 0.0:
            raise ValidationError(f"merge tolerance must be positive, got {self.merge_tol}")
        prev = None
        for value, mult in self.entries:
            if not math.isfinite(value):
                raise ValidationError("spectrum values must be finite")
            if not isinstance(mult, int) or mult < 1:
                raise ValidationError(f"multiplicities must be positive integers, got {mult!r}")
            if prev is not None and not value - prev > self.merge_tol:
                raise ValidationError(
                    "entries must be ascending with gaps above the merge tolerance"
                )
            prev = value

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def max_value(self) -> float:
        if not self.entries:
            raise ValidationError("empty spectrum has no maximum")
        return self.entries[-1][0]

    def values(self) -> np.ndarray:
        return np.array([v for v, _ in self.entries])

    def multiplicities(self) -> np.ndarray:
        return np.array([m for _, m in self.entries], dtype=np.int64)

    def expand(self) -> np.ndarray:
        """Each value repeated by its multiplicity, ascending."""
        if not self.entries:
            return np.empty(0)
        return np.repeat(self.values(), self.multiplicities())

    def to_jsonable(self) -> list[list]:
        return [[value, mult] for value, mult in self.entries]


def merge_spectrum(pairs, merge_tol: float = DEFAULT_MERGE_TOL) -> SpectrumMultiset:
    """Single-linkage clustering of (value, multiplicity) pairs.

    Values whose sorted neighbors are within merge_tol collapse into one entry
    at their multiplicity-weighted mean; multiplicities add. Deterministic for
    a given input multiset.
    """
    if not merge_tol > 0.0:
        raise ValidationError(f"merge tolerance must be positive, got {merge_tol}")
    items: list[tuple[float, int]] = []
    for value, mult in pairs:
        value = float(value)
        mult = int(mult)
        if not math.isfinite(value):
            raise ValidationError("spectrum values must be finite")
        if mult < 1:
            raise ValidationError(f"multiplicities must be positive, got {mult}")
        items.append((value, mult))
    items.sort()
    entries: list[tuple[float, int]] = []
    i = 0
    while i < len(items):
        wsum = items[i][0] * items[i][1]
        msum = items[i][1]
        prev = items[i][0]
        j = i + 1
        while j < len(items) and items[j][0] - prev <= merge_tol:
            wsum += items[j][0] * items[j][1]
            msum += items[j][1]
            prev = items[j][0]
            j += 1
        entries.append((wsum / msum, msum))
        i = j
    return SpectrumMultiset(tuple(entries), merge_tol)


def spectrum_from_eigenvalues(values, merge_tol: float = DEFAULT_MERGE_TOL) -> SpectrumMultiset:
    """Merge a plain list of eigenvalues, each with multiplicity one."""
    return merge_spectrum(((float(v), 1) for v in np.asarray(values, dtype=np.float64)), merge_tol)


@dataclass(frozen=True)
class SpectrumComparison:
    """Result of pairing two spectra in sorted expanded order."""

    tol: float
    total_a: int
    total_b: int
    max_deviation: float
    passed: bool

    @property
    def structural_mismatch(self) -> bool:
        return self.total_a != self.total_b

    def to_jsonable(self) -> dict:
        return {
            "tol": self.tol,
            "total_a": self.total_a,
            "total_b": self.total_b,
            "max_deviation": self.max_deviation,
            "structural_mismatch": self.structural_mismatch,
            "passed": self.passed,
        }


def compare_spectra(
    a: SpectrumMultiset, b: SpectrumMultiset, tol: float = DEFAULT_COMPARE_TOL
) -> SpectrumComparison:
    """Greedy sorted pairing of the expanded spectra; fails on total mismatch."""
    if not tol > 0.0:
        raise ValidationError(f"tolerance must be positive, got {tol}")
    ta, tb = a.total_multiplicity, b.total_multiplicity
    if ta != tb:
        return SpectrumComparison(tol, ta, tb, float("nan"), False)
    ea, eb = a.expand(), b.expand()
    dev = float(np.max(np.abs(ea - eb))) if ta else 0.0
    return SpectrumComparison(tol, ta, tb, dev, dev <= tol)


@dataclass(frozen=True)
class WeylReport:
    """Two-sided eigenvalue-sum inequality check for a symmetric pair (A, B).

    For descending eigenvalues, every eigenvalue of A + B must lie between the
    matching eigenvalue of A shifted by the smallest and largest eigenvalues
    of B. min_slack is the worst margin over both sides; negative slack beyond
    the tolerance is a violation.
    """

    order: int
    tol: float
    min_slack: float
    first_violation: tuple[int, str] | None
    passed: bool

    def to_jsonable(self) -> dict:
        return {
            "order": self.order,
            "tol": self.tol,
            "min_slack": self.min_slack,
            "first_violation": list(self.first_violation) if self.first_violation else None,
            "passed": self.passed,
        }


def weyl_check(matrix_a, matrix_b, tol: float = 1e-9) -> WeylReport:
    """Check the additive eigenvalue bounds for A, B, and A + B."""
    if not tol > 0.0:
        raise ValidationError(f"tolerance must be positive, got {tol}")
    a = np.asarray(matrix_a, dtype=np.float64)
    b = np.asarray(matrix_b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValidationError(f"order mismatch: {a.shape} vs {b.shape}")
    eig_a = dense_eigenvalues(a)[::-1]
    eig_b = dense_eigenvalues(b)[::-1]
    eig_c = dense_eigenvalues(a + b)[::-1]
    n = eig_a.shape[0]
    lower = eig_a + eig_b[-1]
    upper = eig_a + eig_b[0]
    slack_lower = eig_c - lower
    slack_upper = upper - eig_c
    min_slack = float(min(slack_lower.min(), slack_upper.min()))
    first: tuple[int, str] | None = None
    for j in range(n):
        if slack_lower[j] < -tol:
            first = (j + 1, "lower")
            break
        if slack_upper[j] < -tol:
            first = (j + 1, "upper")
            break
    return WeylReport(n, tol, min_slack, first, first is None)
