# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled eigenvalue kernels.

Twin of ``aspec._kernels_py`` with identical semantics: cyclic threshold
Jacobi sweeps for dense symmetric matrices and Sturm-count bisection for
symmetric tridiagonal ones. ``jacobi_eigenvalues`` works in place on the
array it is given; callers pass a disposable copy.
"""
from libc.math cimport fabs, sqrt

import numpy as np

from aspec.errors import NumericalError

cdef double _SAFMIN = 2.2250738585072014e-308


cdef int _count(const double[::1] d, const double[::1] off2,
                double pivmin, double x) noexcept nogil:
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t i
    cdef int count = 0
    cdef double q = 1.0
    for i in range(n):
        if i == 0:
            q = d[0] - x
        else:
            q = (d[i] - x) - off2[i - 1] / q
        if fabs(q) <= pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def _prep(diag, offdiag):
    d = np.ascontiguousarray(diag, dtype=np.float64)
    e = np.ascontiguousarray(offdiag, dtype=np.float64)
    off2 = e * e
    pivmin = _SAFMIN * max(1.0, float(off2.max()) if off2.size else 0.0)
    return d, off2, pivmin


def sturm_count(diag, offdiag, double x):
    """Eigenvalues of the symmetric tridiagonal matrix strictly below x.

    Pivot recursion on T - xI; a vanishing pivot is replaced by a tiny
    negative value, so an exact eigenvalue hit counts as below x.
    """
    d, off2, pivmin = _prep(diag, offdiag)
    cdef const double[::1] dv = d
    cdef const double[::1] ov = off2
    return _count(dv, ov, pivmin, x)


def bisect_eigenvalues(diag, offdiag, double lo, double hi, double tol):
    """All eigenvalues ascending, each bisected to a bracket of width <= tol.

    [lo, hi] must strictly contain the spectrum (no eigenvalues counted at lo,
    all of them at hi).
    """
    d, off2, pivmin_ = _prep(diag, offdiag)
    cdef const double[::1] dv = d
    cdef const double[::1] ov = off2
    cdef double pivmin = pivmin_
    cdef Py_ssize_t m = dv.shape[0]
    out = np.empty(m)
    cdef double[::1] res = out
    cdef Py_ssize_t t
    cdef int it
    cdef double a, b, mid
    with nogil:
        for t in range(1, m + 1):
            a = lo
            b = hi
            it = 0
            while b - a > tol and it < 300:
                mid = 0.5 * (a + b)
                if _count(dv, ov, pivmin, mid) >= t:
                    b = mid
                else:
                    a = mid
                it += 1
            res[t - 1] = 0.5 * (a + b)
    return out


def jacobi_eigenvalues(double[:, ::1] a, double tol, int max_sweeps=100):
    """Eigenvalues of a symmetric matrix by cyclic threshold Jacobi sweeps.

    Rotates away off-diagonal entries in place until every one is below
    tol * frobenius(a) / n, which bounds the final off-diagonal Frobenius norm
    by tol * frobenius(a). Deterministic: fixed cyclic pivot order. Only the
    upper triangle is maintained once sweeping starts.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i
    cdef double frob0 = 0.0, small, apq, app, aqq, theta, t, c, s, tau, x, y
    cdef int sweep, converged = 0, rotated
    if n == 1:
        return np.array([a[0, 0]])
    for p in range(n):
        for q in range(n):
            frob0 += a[p, q] * a[p, q]
    frob0 = sqrt(frob0)
    if frob0 == 0.0:
        return np.zeros(n)
    small = tol * frob0 / n
    with nogil:
        for sweep in range(max_sweeps):
            rotated = 0
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if fabs(apq) <= small:
                        continue
                    rotated = 1
                    app = a[p, p]
                    aqq = a[q, q]
                    theta = (aqq - app) / (2.0 * apq)
                    if fabs(theta) > 1e150:
                        t = 0.5 / theta
                    else:
                        t = (1.0 if theta >= 0.0 else -1.0) / (fabs(theta) + sqrt(1.0 + theta * theta))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    tau = s / (1.0 + c)
                    for i in range(p):
                        x = a[i, p]
                        y = a[i, q]
                        a[i, p] = x - s * (y + tau * x)
                        a[i, q] = y + s * (x - tau * y)
                    for i in range(p + 1, q):
                        x = a[p, i]
                        y = a[i, q]
                        a[p, i] = x - s * (y + tau * x)
                        a[i, q] = y + s * (x - tau * y)
                    for i in range(q + 1, n):
                        x = a[p, i]
                        y = a[q, i]
                        a[p, i] = x - s * (y + tau * x)
                        a[q, i] = y + s * (x - tau * y)
                    a[p, p] = app - t * apq
                    a[q, q] = aqq + t * apq
                    a[p, q] = 0.0
            if rotated == 0:
                converged = 1
                break
    if not converged:
        raise NumericalError(f"jacobi sweep limit reached ({max_sweeps} sweeps, order {n})")
    out = np.empty(n)
    cdef double[::1] res = out
    for i in range(n):
        res[i] = a[i, i]
    return np.sort(out)
