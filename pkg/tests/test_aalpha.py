"""Degree vectors and the weighted degree/adjacency combination matrix."""
from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aspec.aalpha import (
    AlphaParam,
    adjacency_matrix,
    build_a_alpha,
    degree_vector,
    signless_laplacian,
)
from aspec.errors import ValidationError
from aspec.graphs import (
    Graph,
    build_cycle,
    complete_graph,
    compose,
    random_connected_graph,
    random_rooted_graph,
    root_last,
)


class TestAlphaParam:
    def test_beta_complement(self):
        p = AlphaParam(0.3)
        assert p.beta == 0.7
        assert AlphaParam(0).alpha == 0.0
        assert AlphaParam(1).beta == 0.0

    def test_rejects_out_of_range(self):
        with pytest.raises(ValidationError):
            AlphaParam(-0.1)
        with pytest.raises(ValidationError):
            AlphaParam(1.0001)


class TestDegreeVector:
    def test_cycle(self):
        assert degree_vector(build_cycle(4)).tolist() == [2, 2, 2, 2]

    def test_star(self):
        g = Graph(4, ((1, 4), (2, 4), (3, 4)))
        assert degree_vector(g).tolist() == [1, 1, 1, 3]

    def test_specimen_max_degree(self, unicyclic26):
        deg = degree_vector(unicyclic26)
        assert deg.max() == 5
        assert deg[2] == 5


class TestCombinationMatrix:
    def test_alpha_zero_is_adjacency(self):
        g = build_cycle(5)
        assert np.array_equal(build_a_alpha(g, AlphaParam(0)), adjacency_matrix(g))

    def test_alpha_one_is_degree_diagonal(self):
        g = complete_graph(4)
        m = build_a_alpha(g, AlphaParam(1))
        assert np.array_equal(m, np.diag([3.0, 3.0, 3.0, 3.0]))

    def test_alpha_half_doubles_to_signless_laplacian(self):
        g = Graph(5, ((1, 2), (1, 3), (2, 3), (3, 4), (4, 5)))
        assert np.allclose(2.0 * build_a_alpha(g, AlphaParam(0.5)), signless_laplacian(g))

    @given(st.integers(1, 9), st.integers(0, 2**31 - 1), st.floats(0.0, 1.0))
    @settings(max_examples=60, deadline=None)
    def test_row_sums(self, n, seed, alpha):
        # every row sums to the vertex degree: alpha*d + (1-alpha)*d
        g = random_connected_graph(n, random.Random(seed))
        m = build_a_alpha(g, AlphaParam(alpha))
        assert np.allclose(m.sum(axis=1), degree_vector(g))
        assert np.array_equal(m, m.T)
        assert (m >= 0.0).all()

    def test_composition_block_structure(self):
        # copy blocks sit on the diagonal with the base degree added at the
        # root corner; base edges couple the root corners by beta
        rng = random.Random(4)
        base = build_cycle(3)
        h = root_last(random_rooted_graph(4, rng))
        p = AlphaParam(0.3)
        big = build_a_alpha(compose(base, h), p)
        block = build_a_alpha(h.graph, p)
        n = h.order
        base_deg = degree_vector(base)
        for i in range(3):
            sub = big[i * n : (i + 1) * n, i * n : (i + 1) * n].copy()
            expect = block.copy()
            expect[-1, -1] += p.alpha * base_deg[i]
            assert np.allclose(sub, expect)
        for i, j in ((0, 1), (0, 2), (1, 2)):
            sub = big[i * n : (i + 1) * n, j * n : (j + 1) * n]
            expect = np.zeros((n, n))
            expect[-1, -1] = p.beta
            assert np.allclose(sub, expect)
