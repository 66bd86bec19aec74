"""Tests for graph construction, bipartiteness, odd girth, and covers."""

from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpgraph.gp_core import (
    BipartiteGraphError,
    GPParams,
    GraphError,
    SimpleGraph,
    build_gp,
    generalized_prism,
    graph_to_dot,
    graph_to_json,
    graph_to_json_obj,
    inner,
    is_bipartite_gp,
    kronecker_cover,
    min_odd_cycle_witnesses,
    odd_girth,
    outer,
)

from conftest import assert_is_cycle, assert_valid_coloring, count_spokes, valid_pairs


def cycle_graph(m: int) -> SimpleGraph:
    return SimpleGraph(m, [(i, (i + 1) % m) for i in range(m)])


class TestParams:
    def test_valid_params_accepted(self):
        GPParams(5, 2)
        GPParams(3, 1)
        GPParams(100, 49)

    @pytest.mark.parametrize("n,k", [(4, 2), (6, 3), (5, 3), (3, 2), (2, 1), (5, 0), (7, -1)])
    def test_invalid_params_rejected(self, n, k):
        with pytest.raises(GraphError):
            GPParams(n, k)


class TestConstruction:
    @pytest.mark.parametrize("params", list(valid_pairs(12)))
    def test_counts_and_regularity(self, params):
        g = build_gp(params)
        assert g.num_vertices == 2 * params.n
        assert g.num_edges == 3 * params.n
        assert all(g.degree(v) == 3 for v in range(g.num_vertices))
        assert len(g.connected_components()) == 1

    def test_adjacency_structure(self, petersen_params):
        g = build_gp(petersen_params)
        n = petersen_params.n
        for i in range(n):
            assert g.has_edge(i, (i + 1) % n)            # outer rim
            assert g.has_edge(i, n + i)                  # spoke
            assert g.has_edge(n + i, n + (i + 2) % n)    # inner rim, step k=2
        assert not g.has_edge(n + 0, n + 1)

    def test_labels(self, petersen_params):
        g = build_gp(petersen_params)
        assert g.labels[0] == "u0"
        assert g.labels[4] == "u4"
        assert g.labels[5] == "v0"
        assert g.labels[9] == "v4"

    def test_vertex_id_helpers(self):
        assert outer(3).id(5) == 3
        assert inner(3).id(5) == 8
        assert outer(7).id(5) == 2  # indices reduce mod n
        assert outer(2).label(5) == "u2"
        assert inner(2).label(5) == "v2"


class TestBipartite:
    @pytest.mark.parametrize("params", list(valid_pairs(20)))
    def test_closed_form_matches_two_coloring(self, params):
        g = build_gp(params)
        expected = params.n % 2 == 0 and params.k % 2 == 1
        assert is_bipartite_gp(params) == expected
        assert g.is_bipartite() == expected
        coloring = g.two_coloring()
        if expected:
            assert coloring is not None
            assert_valid_coloring(g, coloring)
        else:
            assert coloring is None


class TestOddGirth:
    @pytest.mark.parametrize(
        "n,k,expected",
        [(5, 2, 5), (7, 2, 5), (10, 2, 5), (11, 2, 5), (13, 5, 7), (16, 6, 7), (15, 3, 5), (9, 3, 3)],
    )
    def test_known_values(self, n, k, expected):
        assert odd_girth(build_gp(GPParams(n, k))) == expected

    def test_bipartite_returns_none(self):
        assert odd_girth(build_gp(GPParams(8, 3))) is None
        assert odd_girth(cycle_graph(6)) is None

    @pytest.mark.parametrize("m", [3, 5, 7, 9, 11])
    def test_odd_cycles(self, m):
        assert odd_girth(cycle_graph(m)) == m

    @pytest.mark.parametrize("params", list(valid_pairs(14)))
    def test_matches_exhaustive_witnesses(self, params):
        g = build_gp(params)
        og = odd_girth(g)
        if is_bipartite_gp(params):
            assert og is None
            return
        witnesses = min_odd_cycle_witnesses(params)
        assert witnesses, "non-bipartite graph must have an odd cycle"
        assert all(len(w.vertices) == og for w in witnesses)


class TestMinOddCycleWitnesses:
    def test_witnesses_are_cycles_with_even_crossings(self):
        for params in valid_pairs(14):
            if is_bipartite_gp(params):
                continue
            g = build_gp(params)
            for w in min_odd_cycle_witnesses(params):
                assert_is_cycle(g, w.vertices)
                assert len(w.vertices) % 2 == 1
                assert w.spoke_count == count_spokes(params, w.vertices)
                assert w.spoke_count % 2 == 0

    def test_inner_rims_only(self):
        # all minimum odd cycles of G(15, 3) are the three inner 5-cycles
        witnesses = min_odd_cycle_witnesses(GPParams(15, 3))
        assert len(witnesses) == 3
        assert all(w.spoke_count == 0 for w in witnesses)
        assert all(len(w.vertices) == 5 for w in witnesses)
        assert all(min(w.vertices) >= 15 for w in witnesses)

    def test_spoked_witness_exists(self):
        witnesses = min_odd_cycle_witnesses(GPParams(10, 2))
        assert len(witnesses) == 12
        assert sorted({w.spoke_count for w in witnesses}) == [0, 2]

    def test_two_spokes_suffice_on_small_sweep(self):
        for params in valid_pairs(14):
            if is_bipartite_gp(params):
                continue
            counts = {w.spoke_count for w in min_odd_cycle_witnesses(params)}
            assert min(counts) in (0, 2)

    def test_bipartite_raises(self):
        with pytest.raises(BipartiteGraphError):
            min_odd_cycle_witnesses(GPParams(8, 3))

    def test_enumeration_bound_enforced(self):
        with pytest.raises(GraphError):
            min_odd_cycle_witnesses(GPParams(33, 2))
        # explicit override lifts the bound
        assert min_odd_cycle_witnesses(GPParams(33, 2), max_n=33)


class TestKroneckerCover:
    def test_cover_of_odd_cycle_is_double_cycle(self):
        kc = kronecker_cover(cycle_graph(5))
        assert kc.num_vertices == 10
        assert kc.num_edges == 10
        assert all(kc.degree(v) == 2 for v in range(10))
        assert len(kc.connected_components()) == 1
        assert kc.is_bipartite()

    def test_cover_of_bipartite_graph_splits(self):
        g = build_gp(GPParams(8, 3))
        kc = kronecker_cover(g)
        comps = kc.connected_components()
        assert len(comps) == 2
        assert sorted(len(c) for c in comps) == [16, 16]

    @pytest.mark.parametrize("params", list(valid_pairs(12)))
    def test_cover_is_always_bipartite_and_doubles(self, params):
        g = build_gp(params)
        kc = kronecker_cover(g)
        assert kc.num_vertices == 2 * g.num_vertices
        assert kc.num_edges == 2 * g.num_edges
        assert kc.is_bipartite()

    def test_cover_of_petersen_matches_desargues(self):
        from gpgraph.cayley import is_isomorphic

        kc = kronecker_cover(build_gp(GPParams(5, 2)))
        assert is_isomorphic(kc, build_gp(GPParams(10, 3))) is not None


class TestGeneralizedPrism:
    def test_counts(self):
        g = generalized_prism(5, 3)
        assert g.num_vertices == 20
        assert g.num_edges == 25

    def test_unit_length_is_circular_ladder(self):
        from gpgraph.cayley import is_isomorphic

        assert is_isomorphic(generalized_prism(6, 1), build_gp(GPParams(6, 1))) is not None

    def test_rims_and_paths(self):
        ell, m = 5, 3
        g = generalized_prism(ell, m)
        for i in range(ell):
            assert g.has_edge(i, (i + 1) % ell)
            assert g.has_edge(m * ell + i, m * ell + (i + 1) % ell)
            for j in range(m):
                assert g.has_edge(j * ell + i, (j + 1) * ell + i)

    def test_invalid_args(self):
        with pytest.raises(GraphError):
            generalized_prism(2, 1)
        with pytest.raises(GraphError):
            generalized_prism(5, 0)


class TestSerialization:
    def test_json_round_trip_fields(self, petersen_params):
        g = build_gp(petersen_params)
        obj = graph_to_json_obj(g)
        assert obj["n"] == 5 and obj["k"] == 2
        assert len(obj["vertices"]) == 10
        assert len(obj["edges"]) == 15
        parsed = json.loads(graph_to_json(g))
        assert parsed == obj

    def test_dot_output(self, petersen_params):
        g = build_gp(petersen_params)
        dot = graph_to_dot(g)
        assert dot.startswith("graph ")
        assert dot.rstrip().endswith("}")
        assert dot.count(" -- ") == 15
        assert "u0" in dot and "v4" in dot


class TestSimpleGraph:
    def test_rejects_bad_edges(self):
        with pytest.raises(GraphError):
            SimpleGraph(3, [(0, 3)])
        with pytest.raises(GraphError):
            SimpleGraph(3, [(1, 1)])

    def test_deduplicates_edges(self):
        g = SimpleGraph(3, [(0, 1), (1, 0), (0, 2)])
        assert g.num_edges == 2

    def test_bfs_distances(self):
        g = cycle_graph(6)
        assert g.bfs_distances(0) == [0, 1, 2, 3, 2, 1]

    def test_induced_subgraph(self):
        g = build_gp(GPParams(5, 2))
        sub, remap = g.induced_subgraph(range(5))
        assert sub.num_vertices == 5
        assert sub.num_edges == 5  # the outer rim
        assert remap == {i: i for i in range(5)}

    @given(st.integers(min_value=3, max_value=12), st.integers(min_value=0, max_value=11))
    @settings(max_examples=40)
    def test_neighbors_symmetric(self, m, v):
        g = cycle_graph(m)
        v = v % m
        for w in g.neighbors(v):
            assert v in g.neighbors(w)
