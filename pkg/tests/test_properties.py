"""
随机稀疏连通图上的性质测试, 以 networkx 为参照
"""

from itertools import combinations
import random

import networkx as nx
import numpy as np
import pytest

from epglab.core.detour import all_pairs_detour, detour_row
from epglab.core.graph import SimpleGraph, is_isomorphic
from epglab.core.metric import all_pairs_geodesic, closure, eccentricities, is_closed
from epglab.core.resolving import is_resolving, metric_dimension, resolving_counts
from epglab.core.spectra import laplacian_charpoly, spanning_tree_count

SEEDS = list(range(50))


def random_connected(seed: int, max_vertices: int = 14):
    """随机生成树再加少量边"""
    rng = random.Random(seed)
    n = rng.randint(4, max_vertices)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for _ in range(rng.randint(0, n)):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    g = SimpleGraph.from_edges(n, sorted(edges))
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(edges)
    return g, nxg


def shuffled(g: SimpleGraph, seed: int) -> SimpleGraph:
    permutation = list(range(g.vcount))
    random.Random(seed).shuffle(permutation)
    return SimpleGraph.from_edges(g.vcount, [(permutation[u], permutation[v]) for u, v in g.edges()])


@pytest.mark.parametrize("seed", SEEDS)
def test_geodesic_matches_networkx(seed):
    g, nxg = random_connected(seed)
    dist = all_pairs_geodesic(g)
    lengths = dict(nx.all_pairs_shortest_path_length(nxg))
    for u in range(g.vcount):
        for v in range(g.vcount):
            assert dist.distance(u, v) == lengths[u][v]
    expected = nx.eccentricity(nxg)
    assert eccentricities(dist) == [expected[v] for v in range(g.vcount)]


@pytest.mark.parametrize("seed", SEEDS)
def test_detour_engines_agree(seed):
    g, _ = random_connected(seed, max_vertices=12)
    for source in range(g.vcount):
        assert detour_row(g, source, engine="dp") == detour_row(g, source, engine="bnb")


@pytest.mark.parametrize("seed", SEEDS)
def test_detour_at_least_geodesic(seed):
    g, nxg = random_connected(seed)
    detour = all_pairs_detour(g, engine="bnb", workers=1)
    geodesic = all_pairs_geodesic(g)
    for u in range(g.vcount):
        for v in range(g.vcount):
            assert detour.distance(u, v) >= geodesic.distance(u, v)
            assert detour.distance(u, v) <= g.vcount - 1
    if nx.is_tree(nxg):
        assert detour.entries == geodesic.entries


@pytest.mark.parametrize("seed", SEEDS)
def test_closure_is_idempotent_and_order_free(seed):
    g, _ = random_connected(seed)
    closed = closure(g)
    assert is_closed(closed)
    assert closure(closed) == closed
    assert g.is_subgraph_of(closed)
    order = list(range(g.vcount))
    random.Random(seed).shuffle(order)
    assert closure(g, vertex_order=order) == closed


@pytest.mark.parametrize("seed", SEEDS)
def test_isomorphism_matches_networkx(seed):
    g, nxg = random_connected(seed, max_vertices=10)
    twin = shuffled(g, seed + 1000)
    mapping = is_isomorphic(g, twin)
    assert mapping is not None
    for u, v in g.edges():
        assert twin.has_edge(mapping[u], mapping[v])

    other, other_nx = random_connected(seed + 1, max_vertices=10)
    found = is_isomorphic(g, other) is not None
    assert found == nx.is_isomorphic(nxg, other_nx)


@pytest.mark.parametrize("seed", SEEDS)
def test_spanning_trees_match_matrix_tree(seed):
    g, nxg = random_connected(seed)
    adjacency = nx.to_numpy_array(nxg, nodelist=list(range(g.vcount)))
    laplacian = np.diag(adjacency.sum(axis=1)) - adjacency
    expected = int(round(np.linalg.det(laplacian[1:, 1:])))
    assert spanning_tree_count(g) == expected


@pytest.mark.parametrize("seed", SEEDS[:25])
def test_charpoly_matches_numpy(seed):
    g, nxg = random_connected(seed, max_vertices=10)
    adjacency = nx.to_numpy_array(nxg, nodelist=list(range(g.vcount)))
    laplacian = np.diag(adjacency.sum(axis=1)) - adjacency
    expected = [int(round(c)) for c in reversed(np.poly(laplacian))]
    assert list(laplacian_charpoly(g).coefficients) == expected


def brute_force_dimension(g: SimpleGraph) -> int:
    dist = all_pairs_geodesic(g)
    for size in range(g.vcount + 1):
        if any(is_resolving(g, subset, dist) for subset in combinations(range(g.vcount), size)):
            return size
    return g.vcount


@pytest.mark.parametrize("seed", SEEDS[:20])
def test_metric_dimension_matches_brute_force(seed):
    g, _ = random_connected(seed, max_vertices=9)
    dim, witness = metric_dimension(g)
    assert dim == brute_force_dimension(g)
    assert is_resolving(g, witness)


@pytest.mark.parametrize("seed", SEEDS[:20])
def test_twin_pruning_keeps_counts(seed):
    g, _ = random_connected(seed, max_vertices=10)
    pruned = resolving_counts(g, prune_twins=True, workers=1)
    full = resolving_counts(g, prune_twins=False, workers=1)
    assert pruned.counts == full.counts
    assert pruned.dim == metric_dimension(g)[0]
