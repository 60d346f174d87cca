"""Both kernel backends against numpy and against each other."""
import math

import numpy as np
import pytest

from aspec import _kernels_py
from aspec._backend import BACKEND
from aspec.errors import NumericalError

_PARAMS = [pytest.param(_kernels_py, id="python")]
try:
    from aspec import _kernels as _compiled
except ImportError:
    _compiled = None
    _PARAMS.append(
        pytest.param(None, id="compiled", marks=pytest.mark.skip(reason="extension not built"))
    )
else:
    _PARAMS.append(pytest.param(_compiled, id="compiled"))


@pytest.fixture(params=_PARAMS)
def kern(request):
    return request.param


def _random_tridiag(rng, n):
    return rng.standard_normal(n) * 3.0, rng.standard_normal(n - 1) * 2.0


def _bracket(diag, off):
    rad = np.zeros(len(diag))
    if len(diag) > 1:
        rad[:-1] += np.abs(off)
        rad[1:] += np.abs(off)
    return float((diag - rad).min()) - 1.0, float((diag + rad).max()) + 1.0


class TestSturm:
    def test_scalar(self, kern):
        d = np.array([5.0])
        e = np.empty(0)
        assert kern.sturm_count(d, e, 4.0) == 0
        assert kern.sturm_count(d, e, 6.0) == 1

    def test_exact_hit_counts_below(self, kern):
        d = np.array([1.0, 2.0, 3.0])
        e = np.zeros(2)
        assert kern.sturm_count(d, e, 2.0) == 2
        assert kern.sturm_count(d, e, 1.0) == 1
        assert kern.sturm_count(d, e, 3.0 + 1e-12) == 3

    def test_against_numpy(self, kern):
        rng = np.random.default_rng(5)
        for n in (2, 3, 7, 15):
            d, e = _random_tridiag(rng, n)
            t = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
            eig = np.linalg.eigvalsh(t)
            for x in np.linspace(eig[0] - 0.5, eig[-1] + 0.5, 9):
                assert kern.sturm_count(d, e, float(x)) == int((eig < x).sum())

    def test_monotone(self, kern):
        rng = np.random.default_rng(6)
        d, e = _random_tridiag(rng, 10)
        xs = np.linspace(-12, 12, 40)
        counts = [kern.sturm_count(d, e, float(x)) for x in xs]
        assert counts == sorted(counts)
        assert counts[0] == 0 and counts[-1] == 10


class TestBisect:
    def test_single(self, kern):
        got = kern.bisect_eigenvalues(np.array([3.5]), np.empty(0), 0.0, 7.0, 1e-12)
        assert got.shape == (1,)
        assert got[0] == pytest.approx(3.5, abs=1e-11)

    def test_path_adjacency_closed_form(self, kern):
        for n in (2, 5, 11):
            d = np.zeros(n)
            e = np.ones(n - 1)
            got = kern.bisect_eigenvalues(d, e, -3.0, 3.0, 1e-13)
            want = np.sort(2.0 * np.cos(np.arange(1, n + 1) * math.pi / (n + 1)))
            assert np.allclose(got, want, atol=1e-11)

    def test_against_numpy(self, kern):
        rng = np.random.default_rng(7)
        for n in (2, 6, 13, 24):
            d, e = _random_tridiag(rng, n)
            lo, hi = _bracket(d, e)
            got = kern.bisect_eigenvalues(d, e, lo, hi, 1e-12)
            t = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
            assert np.allclose(got, np.linalg.eigvalsh(t), atol=1e-10)

    def test_repeated_eigenvalues(self, kern):
        # two decoupled identical 2-blocks
        d = np.array([1.0, -1.0, 1.0, -1.0])
        e = np.array([2.0, 0.0, 2.0])
        got = kern.bisect_eigenvalues(d, e, -4.0, 4.0, 1e-13)
        s5 = math.sqrt(5.0)
        assert np.allclose(got, [-s5, -s5, s5, s5], atol=1e-11)

    def test_ascending(self, kern):
        rng = np.random.default_rng(8)
        d, e = _random_tridiag(rng, 17)
        lo, hi = _bracket(d, e)
        got = kern.bisect_eigenvalues(d, e, lo, hi, 1e-12)
        assert np.all(np.diff(got) >= 0.0)


class TestJacobi:
    def test_diagonal_input(self, kern):
        a = np.diag([3.0, -1.0, 2.0]).copy()
        got = kern.jacobi_eigenvalues(a, 1e-12)
        assert np.allclose(got, [-1.0, 2.0, 3.0], atol=1e-14)

    def test_known_2x2(self, kern):
        a = np.array([[0.0, 2.0], [2.0, 0.0]])
        got = kern.jacobi_eigenvalues(a.copy(), 1e-12)
        assert np.allclose(got, [-2.0, 2.0], atol=1e-12)

    def test_against_numpy(self, kern):
        rng = np.random.default_rng(9)
        for n in (1, 2, 3, 8, 20, 40):
            m = rng.standard_normal((n, n))
            a = (m + m.T) / 2.0
            got = kern.jacobi_eigenvalues(a.copy(), 1e-12)
            assert np.allclose(got, np.linalg.eigvalsh(a), atol=1e-10), n

    def test_sweep_budget_exhaustion(self, kern):
        a = np.array([[0.0, 1.0], [1.0, 0.0]])
        with pytest.raises(NumericalError):
            kern.jacobi_eigenvalues(a.copy(), 1e-12, 1)

    def test_mutates_in_place(self, kern):
        # in-place contract: callers hand over a scratch copy
        a = np.array([[1.0, 0.5], [0.5, 1.0]])
        kern.jacobi_eigenvalues(a, 1e-12)
        assert a[0, 1] == 0.0


class TestBackendAgreement:
    @pytest.mark.skipif(_compiled is None, reason="extension not built")
    def test_bisect_bitwise_identical(self):
        rng = np.random.default_rng(10)
        for n in (3, 9, 21):
            d, e = _random_tridiag(rng, n)
            lo, hi = _bracket(d, e)
            a = _kernels_py.bisect_eigenvalues(d, e, lo, hi, 1e-12)
            b = _compiled.bisect_eigenvalues(d, e, lo, hi, 1e-12)
            assert np.array_equal(a, b)

    @pytest.mark.skipif(_compiled is None, reason="extension not built")
    def test_sturm_identical(self):
        rng = np.random.default_rng(11)
        d, e = _random_tridiag(rng, 14)
        for x in np.linspace(-10, 10, 25):
            assert _kernels_py.sturm_count(d, e, float(x)) == _compiled.sturm_count(
                d, e, float(x)
            )

    @pytest.mark.skipif(_compiled is None, reason="extension not built")
    def test_jacobi_agree(self):
        rng = np.random.default_rng(12)
        for n in (2, 7, 25):
            m = rng.standard_normal((n, n))
            a = (m + m.T) / 2.0
            pa = _kernels_py.jacobi_eigenvalues(a.copy(), 1e-12)
            ca = _compiled.jacobi_eigenvalues(a.copy(), 1e-12)
            assert np.allclose(pa, ca, atol=1e-11)

    def test_backend_reported(self):
        assert BACKEND in ("compiled", "python")
