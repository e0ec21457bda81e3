"""
孪生类、度量维数与可解析多项式
"""

import pytest

from epglab.core.errors import CapacityError, DisconnectedGraphError
from epglab.core.graph import SimpleGraph, complete, edgeless, enhanced_power_graph
from epglab.core.group import make_semidihedral
from epglab.core.metric import all_pairs_geodesic
from epglab.core.resolving import (
    TwinKind,
    is_resolving,
    metric_dimension,
    resolver_masks,
    resolving_counts,
    sd_metric_basis_witness,
    sd_printed_selection_counts,
    sd_resolving_coverage,
    sd_resolving_polynomial_closed_form,
    sd_resolving_polynomial_product_form,
    sd_selection_counts,
    twin_classes,
    twin_lower_bound,
)

SD16_COUNTS = {10: 96, 11: 328, 12: 436, 13: 286, 14: 97, 15: 16, 16: 1}


def path(k: int) -> SimpleGraph:
    return SimpleGraph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> SimpleGraph:
    return SimpleGraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


class TestTwins:
    def test_sd16_classes(self, sd16_graph):
        classes = twin_classes(sd16_graph)
        assert [c.members for c in classes] == [
            (0,), (1, 2, 3, 5, 6, 7), (4,), (8, 10, 12, 14), (9, 13), (11, 15),
        ]
        kinds = [c.kind for c in classes]
        assert kinds == [
            TwinKind.SINGLETON, TwinKind.TRUE, TwinKind.SINGLETON,
            TwinKind.FALSE, TwinKind.TRUE, TwinKind.TRUE,
        ]
        assert twin_lower_bound(classes) == 10

    def test_to_dict(self, sd16_graph):
        assert twin_classes(sd16_graph)[3].to_dict() == {"members": [8, 10, 12, 14], "kind": "false"}


class TestDimension:
    def test_sd16(self, sd16_graph, sd16_geodesic):
        dim, witness = metric_dimension(sd16_graph, sd16_geodesic)
        assert dim == 10
        assert len(witness) == 10
        assert is_resolving(sd16_graph, witness, sd16_geodesic)

    @pytest.mark.parametrize("n", [2, 3])
    def test_explicit_basis(self, n):
        g = enhanced_power_graph(make_semidihedral(n))
        basis = sd_metric_basis_witness(n)
        assert len(basis) == 7 * n - 4
        assert is_resolving(g, basis)
        assert twin_lower_bound(twin_classes(g)) == 7 * n - 4

    def test_small_graphs(self):
        assert metric_dimension(path(5))[0] == 1
        assert metric_dimension(complete(4))[0] == 3
        assert metric_dimension(cycle(6))[0] == 2

    def test_budget(self):
        with pytest.raises(CapacityError) as info:
            metric_dimension(cycle(5), budget=1)
        assert info.value.cap_name == "dimension_budget"

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            metric_dimension(edgeless(3))

    def test_resolver_masks_are_minimal(self):
        masks = resolver_masks(all_pairs_geodesic(path(3)))
        assert all(not (a & b == a and a != b) for a in masks for b in masks)
        assert is_resolving(path(3), [0])
        assert not is_resolving(path(3), [1])


class TestCounts:
    @pytest.mark.parametrize("prune", [True, False])
    def test_sd16(self, sd16_graph, sd16_geodesic, prune):
        report = resolving_counts(sd16_graph, prune_twins=prune, dist=sd16_geodesic, workers=1)
        assert report.dim == 10
        assert report.counts == SD16_COUNTS
        assert report.total == 1260
        assert report.tested == (7 * 5 * 3 * 3 * 2 * 2 if prune else 1 << 16)

    def test_parallel_matches_serial(self, sd16_graph):
        assert resolving_counts(sd16_graph, workers=2).counts == SD16_COUNTS

    def test_path(self):
        report = resolving_counts(path(3))
        assert report.counts == {1: 2, 2: 3, 3: 1}
        assert report.polynomial.coefficients == (0, 2, 3, 1)

    def test_report_dict(self, sd16_graph):
        data = resolving_counts(sd16_graph).to_dict()
        assert data["dim"] == 10
        assert data["r"][0] == [10, "96"]
        assert data["r"][-1] == [16, "1"]
        assert data["polynomial"][:10] == ["0"] * 10

    def test_cap(self, sd16_graph):
        with pytest.raises(CapacityError) as info:
            resolving_counts(sd16_graph, cap=8)
        assert info.value.cap_name == "enum_cap"

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            resolving_counts(edgeless(2))


class TestClosedForms:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_selection_counts(self, n):
        assert sd_selection_counts(n) == sd_printed_selection_counts(n)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_piecewise_matches_product(self, n):
        assert sd_resolving_polynomial_closed_form(n) == sd_resolving_polynomial_product_form(n)

    def test_sd16_polynomial(self):
        poly = sd_resolving_polynomial_product_form(2)
        assert {i: poly.coefficient(i) for i in range(10, 17)} == SD16_COUNTS
        assert poly.evaluate(1) == 1260

    def test_coverage_n2_overlaps(self):
        coverage = sd_resolving_coverage(2)
        assert coverage.overlaps == [13]
        assert coverage.conflicts == []
        assert coverage.gaps == []
        assert not coverage.is_partition
        assert coverage.branch_values[1][13] == coverage.branch_values[3][13] == 286
        notes = coverage.diagnostics()
        assert any("index 13" in note for note in notes)
        assert any("branch 2" in note and "empty" in note for note in notes)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_coverage_is_partition(self, n):
        assert sd_resolving_coverage(n).is_partition
