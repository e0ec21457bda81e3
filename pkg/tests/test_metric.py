"""
测地距离、离心率、闭包、边界与内部
"""

import pytest

from epglab.core.errors import DisconnectedGraphError, ParameterError
from epglab.core.graph import SimpleGraph, complete, edgeless, enhanced_power_graph
from epglab.core.group import make_dihedral, make_generalized_quaternion, make_semidihedral
from epglab.core.metric import (
    DistanceKind,
    all_pairs_geodesic,
    boundary_interior,
    center,
    center_vertices,
    closure,
    diameter,
    distance_degree_sequence,
    eccentric_subgraph,
    eccentric_vertices,
    eccentricities,
    is_closed,
    is_complete_vertex,
    is_eccentric_graph,
    radius,
)


def path(k: int) -> SimpleGraph:
    return SimpleGraph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


class TestGeodesic:
    def test_sd16_eccentricities(self, sd16_geodesic):
        ecc = eccentricities(sd16_geodesic)
        assert ecc[0] == 1
        assert set(ecc[1:]) == {2}
        assert radius(sd16_geodesic) == 1
        assert diameter(sd16_geodesic) == 2

    def test_dds(self, sd16_geodesic):
        assert distance_degree_sequence(sd16_geodesic, 0) == [1, 15]
        assert distance_degree_sequence(sd16_geodesic, 8) == [1, 1, 14]
        # a^4 是 <a> 与所有 4 阶子群的公共点
        assert distance_degree_sequence(sd16_geodesic, 4) == [1, 11, 4]

    def test_path(self):
        dist = all_pairs_geodesic(path(4))
        assert dist.kind is DistanceKind.GEODESIC
        assert dist.row(0) == (0, 1, 2, 3)
        assert center_vertices(dist) == [1, 2]

    def test_disconnected(self):
        dist = all_pairs_geodesic(edgeless(2))
        assert not dist.is_connected()
        assert dist.distance(0, 1) is None
        with pytest.raises(DisconnectedGraphError):
            eccentricities(dist)

    def test_csv_blank_for_unreachable(self):
        assert all_pairs_geodesic(edgeless(2)).to_csv() == "geodesic,0,1\n0,0,\n1,,0\n"

    def test_csv_uses_labels(self, sd16_geodesic):
        lines = sd16_geodesic.to_csv().splitlines()
        assert len(lines) == 17
        assert lines[0].split(",")[:3] == ["geodesic", "e", "a"]
        assert lines[1] == "e," + ",".join(["0"] + ["1"] * 15)


class TestEccentric:
    def test_sd16_eccentric_subgraph(self, sd16_graph, sd16_geodesic):
        assert eccentric_vertices(sd16_geodesic) == list(range(1, 16))
        sub = eccentric_subgraph(sd16_graph, sd16_geodesic)
        assert sub.vcount == 15
        assert "e" not in sub.vlabels

    def test_sd16_center(self, sd16_graph):
        c = center(sd16_graph)
        assert c.vcount == 1
        assert c.vlabels == ("e",)

    @pytest.mark.parametrize("n", [2, 3])
    def test_quaternion_eccentric_is_everything(self, n):
        g = enhanced_power_graph(make_generalized_quaternion(n))
        assert eccentric_vertices(all_pairs_geodesic(g)) == list(range(g.vcount))

    def test_eccentric_graph(self, sd16_graph):
        assert not is_eccentric_graph(sd16_graph)
        assert is_eccentric_graph(complete(3))


class TestClosure:
    @pytest.mark.parametrize(
        "group",
        [make_semidihedral(2), make_semidihedral(3), make_generalized_quaternion(3), make_dihedral(4)],
        ids=lambda group: group.name,
    )
    def test_epg_is_closed(self, group):
        g = enhanced_power_graph(group)
        assert is_closed(g)
        assert closure(g) == g
        assert closure(g, vertex_order=list(reversed(range(g.vcount)))) == g

    def test_adds_missing_edge(self):
        almost = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert not is_closed(almost)
        closed = closure(almost)
        assert closed.edge_count == 6
        assert is_closed(closed)

    @pytest.mark.parametrize("order", [[0, 0, 1], [0, 1], [0, 1, 3]])
    def test_rejects_bad_order(self, order):
        with pytest.raises(ParameterError, match="permutation"):
            closure(path(3), vertex_order=order)


class TestBoundaryInterior:
    def test_sd16(self, sd16_graph, sd16_geodesic):
        report = boundary_interior(sd16_graph, sd16_geodesic)
        assert report.interior_vertices == frozenset({0})
        assert report.boundary == frozenset(range(1, 16))
        assert report.interior.vcount == 1
        assert report.complete_vertices == frozenset(range(16)) - {0, 4}
        assert report.universal_boundary == report.complete_vertices

    def test_path(self):
        report = boundary_interior(path(3))
        assert report.boundary == frozenset({0, 2})
        assert report.interior_vertices == frozenset({1})
        assert report.complete_vertices == frozenset({0, 2})

    def test_complete_vertex(self, sd16_graph):
        assert is_complete_vertex(sd16_graph, 9)
        assert not is_complete_vertex(sd16_graph, 4)
        assert not is_complete_vertex(sd16_graph, 0)

    def test_requires_connected(self):
        with pytest.raises(DisconnectedGraphError):
            boundary_interior(edgeless(3))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_semidihedral_distant_structure(n):
    g = enhanced_power_graph(make_semidihedral(n))
    dist = all_pairs_geodesic(g)
    order = 8 * n
    report = boundary_interior(g, dist)
    assert report.interior_vertices == frozenset({0})
    assert frozenset(range(order)) - report.complete_vertices == frozenset({0, 2 * n})
    assert eccentric_vertices(dist) == list(range(1, order))
    assert closure(g) == g
