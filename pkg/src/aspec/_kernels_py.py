"""Pure-numpy eigenvalue kernels.

Fallback twin of the compiled extension ``aspec._kernels`` with identical
semantics. ``jacobi_eigenvalues`` works in place on the array it is given;
callers pass a disposable copy.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import NumericalError

_SAFMIN = float(np.finfo(np.float64).tiny)


def _prep_tridiag(diag, offdiag):
    d = np.ascontiguousarray(diag, dtype=np.float64)
    e = np.ascontiguousarray(offdiag, dtype=np.float64)
    off2 = e * e
    pivmin = _SAFMIN * max(1.0, float(off2.max()) if off2.size else 0.0)
    return d, off2, pivmin


def sturm_count(diag, offdiag, x: float) -> int:
    """Eigenvalues of the symmetric tridiagonal matrix strictly below x.

    Pivot recursion on T - xI; a vanishing pivot is replaced by a tiny
    negative value, so an exact eigenvalue hit counts as below x.
    """
    d, off2, pivmin = _prep_tridiag(diag, offdiag)
    return _count(d, off2, pivmin, float(x))


def _count(d, off2, pivmin: float, x: float) -> int:
    count = 0
    q = 1.0
    for i in range(d.shape[0]):
        if i == 0:
            q = d[0] - x
        else:
            q = (d[i] - x) - off2[i - 1] / q
        if abs(q) <= pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def bisect_eigenvalues(diag, offdiag, lo: float, hi: float, tol: float) -> np.ndarray:
    """All eigenvalues ascending, each bisected to a bracket of width <= tol.

    [lo, hi] must strictly contain the spectrum (no eigenvalues counted at lo,
    all of them at hi).
    """
    d, off2, pivmin = _prep_tridiag(diag, offdiag)
    m = d.shape[0]
    out = np.empty(m)
    for t in range(1, m + 1):
        a, b = float(lo), float(hi)
        it = 0
        while b - a > tol and it < 300:
            mid = 0.5 * (a + b)
            if _count(d, off2, pivmin, mid) >= t:
                b = mid
            else:
                a = mid
            it += 1
        out[t - 1] = 0.5 * (a + b)
    return out


def jacobi_eigenvalues(a: np.ndarray, tol: float, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic threshold Jacobi sweeps.

    Rotates away off-diagonal entries in place until every one is below
    tol * frobenius(a) / n, which bounds the final off-diagonal Frobenius norm
    by tol * frobenius(a). Deterministic: fixed cyclic pivot order. Only the
    upper triangle is maintained once sweeping starts.
    """
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    frob0 = math.sqrt(float(np.sum(a * a)))
    if frob0 == 0.0:
        return np.zeros(n)
    small = tol * frob0 / n

    def rotate(xs, ys, s, tau):
        x = xs.copy()
        y = ys.copy()
        xs[...] = x - s * (y + tau * x)
        ys[...] = y + s * (x - tau * y)

    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= small:
                    continue
                rotated = True
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = (1.0 if theta >= 0.0 else -1.0) / (
                        abs(theta) + math.sqrt(1.0 + theta * theta)
                    )
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                tau = s / (1.0 + c)
                rotate(a[:p, p], a[:p, q], s, tau)
                rotate(a[p, p + 1 : q], a[p + 1 : q, q], s, tau)
                rotate(a[p, q + 1 :], a[q, q + 1 :], s, tau)
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
        if not rotated:
            return np.sort(a.diagonal().copy())
    raise NumericalError(f"jacobi sweep limit reached ({max_sweeps} sweeps, order {n})")
