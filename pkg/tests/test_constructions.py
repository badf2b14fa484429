import itertools

import pytest

from conftest import brute_copies
from ramseykit.constructions import (amalgam, amalgam_packing_at,
                                     balanced_multipartite, derived_graph,
                                     find_amalgam,
                                     is_balanced_complete_multipartite,
                                     is_strongly_edge_transitive,
                                     kernel_subgraph, multipartite_classes,
                                     sum_hypergraph)
from ramseykit.errors import BudgetExceededError, CorrespondenceWarning
from ramseykit.graphs import (complete_graph, cycle_graph, degrees, graph,
                              hypergraph, is_linear, path_graph)


def bowtie():
    return graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


class TestEdgeTransitivity:
    def test_positive_families(self):
        from test_graphs import petersen
        for g in (complete_graph(3), complete_graph(5), cycle_graph(5),
                  cycle_graph(8), balanced_multipartite(3, 2), petersen()):
            assert is_strongly_edge_transitive(g)

    def test_negative_cases(self):
        assert not is_strongly_edge_transitive(path_graph(3))
        star = graph(4, [(0, 1), (0, 2), (0, 3)])
        assert not is_strongly_edge_transitive(star)
        assert not is_strongly_edge_transitive(bowtie())

    def test_vertex_cap(self):
        with pytest.raises(BudgetExceededError):
            is_strongly_edge_transitive(cycle_graph(11))


class TestAmalgam:
    def test_single_copy_is_the_template(self):
        a = amalgam(complete_graph(3), 1)
        assert a.graph.vertex_count == 3
        assert len(a.graph.edges) == 3

    def test_counts(self):
        for template, m in [(complete_graph(3), 3), (cycle_graph(5), 2),
                            (complete_graph(4), 4)]:
            v, e = template.vertex_count, len(template.edges)
            a = amalgam(template, m)
            assert a.graph.vertex_count == m * (v - 2) + 2
            assert len(a.graph.edges) == m * (e - 1) + 1
            assert a.copy_count == m
            assert a.kernel in a.graph.edges

    def test_copies_share_only_the_kernel(self):
        a = amalgam(cycle_graph(4), 3)
        images = [set(emb.images) for emb in a.copies]
        for s, t in itertools.combinations(images, 2):
            assert s & t == set(a.kernel)

    def test_unverifiable_template_warns(self):
        with pytest.warns(UserWarning):
            amalgam(cycle_graph(11), 2)


def brute_packing_at(host, template, edge):
    """Max family of copies through edge, pairwise disjoint off it."""
    outside = []
    for verts, edge_set in brute_copies(host, template):
        if frozenset(edge) <= verts and edge in edge_set:
            outside.append(verts - frozenset(edge))
    best = 0
    for size in range(len(outside), 0, -1):
        for combo in itertools.combinations(outside, size):
            if all(a.isdisjoint(b)
                   for a, b in itertools.combinations(combo, 2)):
                best = size
                break
        if best:
            break
    return best


class TestPacking:
    def test_matches_brute_maximum(self):
        from ramseykit.generators import random_graph
        cases = [
            (complete_graph(5), complete_graph(3)),
            (complete_graph(6), complete_graph(3)),
            (bowtie(), complete_graph(3)),
            (complete_graph(5), cycle_graph(4)),
        ]
        for seed in range(6):
            cases.append((random_graph(7, 0.55, seed=seed), complete_graph(3)))
        for host, template in cases:
            for edge in sorted(host.edges):
                got = amalgam_packing_at(host, template, edge)
                assert len(got) == brute_packing_at(host, template, edge)
                for emb in got:
                    assert set(edge) <= set(emb.images)

    def test_find_amalgam(self):
        found = find_amalgam(complete_graph(5), complete_graph(3), 3)
        assert found is not None
        edge, packing = found
        assert edge == (0, 1)
        assert len(packing) == 3
        assert find_amalgam(complete_graph(5), complete_graph(3), 4) is None
        assert find_amalgam(bowtie(), complete_graph(3), 2) is None

    def test_kernel_subgraph(self):
        a = amalgam(complete_graph(3), 3)
        kernel = kernel_subgraph(a.graph, complete_graph(3), 3)
        assert kernel.edges == frozenset({a.kernel})
        full = kernel_subgraph(complete_graph(5), complete_graph(3), 3)
        assert len(full.edges) == 10
        empty = kernel_subgraph(cycle_graph(5), complete_graph(3), 1)
        assert not empty.edges


class TestSumHypergraph:
    def test_frozen_counts(self):
        assert len(sum_hypergraph(48).edges) == 361
        assert len(sum_hypergraph(112).edges) == 2035

    def test_is_linear_and_offset(self):
        S = sum_hypergraph(48)
        assert is_linear(S)
        assert S.offset == 1
        assert S.vertex_count == 48

    def test_membership_spot_checks(self):
        S = sum_hypergraph(48)
        # 1-based (1, 2, 45) and (15, 16, 17) sum to 48,
        # (31, 32, 33) sums to 96
        assert (0, 1, 44) in S.edges
        assert (14, 15, 16) in S.edges
        assert (30, 31, 32) in S.edges
        assert (0, 1, 2) not in S.edges

    def test_matches_direct_scan(self):
        S = sum_hypergraph(48)
        expected = {
            (x - 1, y - 1, z - 1)
            for x, y, z in itertools.combinations(range(1, 49), 3)
            if x + y + z in (48, 96)
        }
        assert set(S.edges) == expected

    def test_rejections(self):
        for bad in (8, 15, 24, 47, 50):
            with pytest.raises(ValueError):
                sum_hypergraph(bad)


class TestDerivedGraph:
    def test_drops_middle_vertex(self):
        h = hypergraph(6, 3, [(0, 2, 4), (1, 3, 5)])
        d = derived_graph(h)
        assert d.edges == frozenset({(0, 4), (1, 5)})
        assert d.vertex_count == 6

    def test_one_to_one_for_linear_input(self):
        S = sum_hypergraph(48)
        d = derived_graph(S)
        assert len(d.edges) == len(S.edges)

    def test_collision_warns(self):
        h = hypergraph(5, 3, [(0, 1, 4), (0, 2, 4)])
        with pytest.warns(CorrespondenceWarning):
            d = derived_graph(h)
        assert d.edges == frozenset({(0, 4)})

    def test_frozen_min_degree(self):
        d = derived_graph(sum_hypergraph(48))
        assert min(degrees(d)) == 7

    def test_uniformity_guard(self):
        with pytest.raises(ValueError):
            derived_graph(hypergraph(5, 4, [(0, 1, 2, 3)]))


class TestMultipartite:
    def test_builder(self):
        g = balanced_multipartite(3, 2)
        assert g.vertex_count == 6
        assert len(g.edges) == 12
        assert multipartite_classes(g) is not None

    def test_recognition(self):
        assert is_balanced_complete_multipartite(balanced_multipartite(2, 2))
        assert is_balanced_complete_multipartite(complete_graph(4))
        assert not is_balanced_complete_multipartite(cycle_graph(5))
        assert not is_balanced_complete_multipartite(bowtie())
        assert not is_balanced_complete_multipartite(path_graph(4))

    def test_classes_of_c4(self):
        classes = multipartite_classes(cycle_graph(4))
        assert classes is not None
        assert sorted(map(sorted, classes)) == [[0, 2], [1, 3]]

    def test_unbalanced_complete_multipartite_rejected(self):
        # complete bipartite with parts 1 and 2: complete multipartite
        # but not balanced
        g = graph(3, [(0, 2), (1, 2)])
        assert not is_balanced_complete_multipartite(g)

    def test_builder_rejections(self):
        with pytest.raises(ValueError):
            balanced_multipartite(2, 1)
        with pytest.raises(ValueError):
            balanced_multipartite(1, 3)
