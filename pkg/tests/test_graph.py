"""
增强幂图构造、图运算与同构判定
"""

import random

import pytest

from epglab.core.errors import ParameterError
from epglab.core.graph import (
    SimpleGraph,
    complete,
    copies,
    dihedral_decomposition,
    disjoint_union,
    edgeless,
    enhanced_power_graph,
    enhanced_power_graph_bruteforce,
    is_isomorphic,
    join,
    power_graph,
    quaternion_decomposition,
    quaternion_decomposition_as_printed,
    sd_neighborhood_oracle,
    semidihedral_decomposition,
)
from epglab.core.group import make_dihedral, make_generalized_quaternion, make_semidihedral


def relabel(g: SimpleGraph, permutation) -> SimpleGraph:
    return SimpleGraph.from_edges(g.vcount, [(permutation[u], permutation[v]) for u, v in g.edges()])


def assert_mapping_preserves_edges(g1: SimpleGraph, g2: SimpleGraph, mapping) -> None:
    assert sorted(mapping) == list(range(g1.vcount))
    for u in range(g1.vcount):
        for v in range(g1.vcount):
            assert g1.has_edge(u, v) == g2.has_edge(mapping[u], mapping[v])


class TestEnhancedPowerGraph:
    def test_sd16_edge_count(self, sd16_graph):
        assert sd16_graph.vcount == 16
        assert sd16_graph.edge_count == 42
        assert sd16_graph.vlabels[0] == "e"

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_sd_edge_count_formula(self, n):
        # K_{4n} 加上 2n 条悬挂边, 再加 n 个 K_4 中的 5 条新边
        g = enhanced_power_graph(make_semidihedral(n))
        assert g.edge_count == 4 * n * (4 * n - 1) // 2 + 2 * n + 5 * n

    @pytest.mark.parametrize(
        "group",
        [make_semidihedral(2), make_semidihedral(3), make_generalized_quaternion(3), make_dihedral(5)],
        ids=lambda group: group.name,
    )
    def test_matches_definition(self, group):
        assert enhanced_power_graph(group) == enhanced_power_graph_bruteforce(group)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_neighborhood_lemma(self, n):
        g = enhanced_power_graph(make_semidihedral(n))
        for v in range(g.vcount):
            assert g.closed_neighborhood(v) == sd_neighborhood_oracle(n, v)

    def test_identity_is_universal(self, sd16_graph):
        assert sd16_graph.degree(0) == 15

    def test_power_graph_is_subgraph(self):
        group = make_generalized_quaternion(3)
        assert power_graph(group).is_subgraph_of(enhanced_power_graph(group))

    @pytest.mark.parametrize("n", [2, 4])
    def test_power_graph_equal_for_two_power(self, n):
        group = make_generalized_quaternion(n)
        assert power_graph(group) == enhanced_power_graph(group)

    def test_power_graph_differs_for_q12(self):
        group = make_generalized_quaternion(3)
        assert power_graph(group) != enhanced_power_graph(group)

    def test_oracle_rejects_out_of_range(self):
        with pytest.raises(ParameterError):
            sd_neighborhood_oracle(2, 16)


class TestGraphOperations:
    def test_complete_and_edgeless(self):
        assert complete(5).edge_count == 10
        assert edgeless(4).edge_count == 0
        assert complete(0).vcount == 0

    def test_join_of_star(self):
        star = join(complete(1), edgeless(3))
        assert star.degrees() == [3, 1, 1, 1]

    @pytest.mark.parametrize("g1, g2", [
        (complete(3), edgeless(4)),
        (edgeless(2), edgeless(5)),
        (copies(complete(2), 3), complete(4)),
        (disjoint_union(complete(3), edgeless(2)), join(complete(1), copies(complete(2), 2))),
        (complete(0), complete(3)),
    ])
    def test_join_edge_count(self, g1, g2):
        joined = join(g1, g2)
        assert joined.vcount == g1.vcount + g2.vcount
        assert joined.edge_count == g1.edge_count + g2.edge_count + g1.vcount * g2.vcount
        assert disjoint_union(g1, g2).edge_count == g1.edge_count + g2.edge_count

    def test_disjoint_union_and_copies(self):
        g = copies(complete(2), 3)
        assert g.vcount == 6
        assert g.edge_count == 3
        assert len(g.components()) == 3
        assert disjoint_union(complete(3), complete(2)).edge_count == 4

    def test_induced_subgraph_keeps_labels(self, sd16_graph):
        sub = sd16_graph.induced_subgraph([0, 8, 9])
        assert sub.vlabels == ("e", "b", "ab")
        assert sub.edges() == [(0, 1), (0, 2)]

    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(ParameterError):
            SimpleGraph(2, (0b10, 0))

    def test_rejects_loop(self):
        with pytest.raises(ParameterError):
            SimpleGraph.from_edges(2, [(1, 1)])

    def test_to_dot(self, sd16_graph):
        dot = sd16_graph.to_dot()
        assert dot.startswith("graph epg {")
        assert sum(" -- " in line for line in dot.splitlines()) == 42
        assert '  8 [label="b"];' in dot

    def test_adjacency_dict(self, d6):
        data = enhanced_power_graph(d6).to_adjacency_dict()
        assert data["labels"][0] == "e"
        assert data["adjacency"][3] == [0]


class TestDecompositions:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_quaternion(self, n):
        g = enhanced_power_graph(make_generalized_quaternion(n))
        target = quaternion_decomposition(n)
        mapping = is_isomorphic(g, target)
        assert mapping is not None
        assert_mapping_preserves_edges(g, target, mapping)

    def test_printed_quaternion_form_has_wrong_order(self):
        assert quaternion_decomposition_as_printed(3).vcount == 9
        assert make_generalized_quaternion(3).order == 12

    @pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 8])
    def test_dihedral(self, m):
        g = enhanced_power_graph(make_dihedral(m))
        assert is_isomorphic(g, dihedral_decomposition(m)) is not None

    @pytest.mark.parametrize("n", [2, 3])
    def test_semidihedral(self, n):
        g = enhanced_power_graph(make_semidihedral(n))
        assert is_isomorphic(g, semidihedral_decomposition(n)) is not None


class TestIsomorphism:
    def test_random_relabel(self, sd16_graph):
        rng = random.Random(7)
        permutation = list(range(16))
        rng.shuffle(permutation)
        shuffled = relabel(sd16_graph, permutation)
        mapping = is_isomorphic(sd16_graph, shuffled)
        assert mapping is not None
        assert_mapping_preserves_edges(sd16_graph, shuffled, mapping)

    def test_hexagon_is_not_two_triangles(self):
        hexagon = SimpleGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        triangles = disjoint_union(complete(3), complete(3))
        assert is_isomorphic(hexagon, triangles) is None

    def test_different_edge_counts(self):
        assert is_isomorphic(complete(4), edgeless(4)) is None
