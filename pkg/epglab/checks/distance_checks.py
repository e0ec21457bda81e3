"""
距离类校验: 邻域、最长路矩阵、dds、内部、闭包、离心子图
"""

from typing import Any, Dict, List, Sequence

from ..core.detour import (
    detour_profile,
    sd_detour_matrix_closed_form,
    sd_detour_profile_closed_form,
)
from ..core.graph import enhanced_power_graph_bruteforce, sd_neighborhood_oracle
from ..core.group import GroupFamily
from ..core.metric import (
    boundary_interior,
    center_vertices,
    closure,
    eccentric_vertices,
    is_closed,
)
from .base_check import BaseCheck, CheckContext, CheckOutcome

SD_ONLY = frozenset({GroupFamily.SEMIDIHEDRAL})
FAMILIES = frozenset({GroupFamily.SEMIDIHEDRAL, GroupFamily.QUATERNION, GroupFamily.DIHEDRAL})


def matrix_mismatches(expected: Sequence[Sequence[Any]], computed: Sequence[Sequence[Any]],
                      labels: Sequence[str]) -> List[str]:
    """逐项对比 (只看上三角)"""
    found = []
    for u in range(len(expected)):
        for v in range(u, len(expected)):
            if expected[u][v] != computed[u][v]:
                found.append(
                    f"({labels[u]}, {labels[v]}): expected {expected[u][v]}, computed {computed[u][v]}"
                )
    return found


def label_set(labels: Sequence[str], vertices) -> str:
    return "{" + ", ".join(labels[v] for v in sorted(vertices)) + "}"


class NeighborhoodCheck(BaseCheck):
    """N[v] 与邻域引理五种情形一致"""

    name = "nbd"
    description = "closed neighbourhoods of EPG(SD_8n) against the five-case lemma"
    families = SD_ONLY

    def expected(self, context: CheckContext) -> List[List[int]]:
        return [sorted(sd_neighborhood_oracle(context.n, v)) for v in range(context.group.order)]

    def render(self, value: Any) -> str:
        return f"{len(value)} closed neighbourhoods, sizes {[len(row) for row in value]}"

    def process(self, context: CheckContext) -> CheckOutcome:
        g = context.graph
        expected = self.expected(context)
        computed = [sorted(g.closed_neighborhood(v)) for v in range(g.vcount)]
        mismatches = [
            f"N[{g.vlabels[v]}]: expected {label_set(g.vlabels, expected[v])}, "
            f"computed {label_set(g.vlabels, computed[v])}"
            for v in range(g.vcount)
            if expected[v] != computed[v]
        ]
        if enhanced_power_graph_bruteforce(context.group) != g:
            mismatches.append("maximal-cyclic construction differs from the scan over all <z>")
        return CheckOutcome(expected, computed, mismatches=mismatches)


class DetourCheck(BaseCheck):
    """最长路矩阵逐项对比"""

    name = "detour"
    description = "all-pairs detour distances against the case table"
    families = SD_ONLY

    def expected(self, context: CheckContext) -> List[List[int]]:
        return sd_detour_matrix_closed_form(context.n)

    def render(self, value: Any) -> str:
        flat = [d for row in value for d in row]
        return f"{len(value)}x{len(value)} matrix, max {max(flat)}"

    def process(self, context: CheckContext) -> CheckOutcome:
        expected = self.expected(context)
        computed = [list(row) for row in context.detour().entries]
        return CheckOutcome(
            expected, computed,
            mismatches=matrix_mismatches(expected, computed, context.graph.vlabels),
        )


class DetourDegreeCheck(BaseCheck):
    """detour 离心率、detour 度、dds、D(Γ) 与 D_av"""

    name = "dds"
    description = "detour eccentricity, degree, dds sequences, D and D_av"
    families = SD_ONLY

    def expected(self, context: CheckContext) -> Dict[str, Any]:
        return sd_detour_profile_closed_form(context.n, context.group.labels).to_dict()

    def render(self, value: Any) -> str:
        return (
            f"rad_D={value['radius']} diam_D={value['diameter']} "
            f"D_av={value['average_degree']}"
        )

    def process(self, context: CheckContext) -> CheckOutcome:
        expected = self.expected(context)
        computed = detour_profile(context.graph, dist=context.detour()).to_dict()
        mismatches = [
            f"{key}: expected {expected[key]}, computed {computed[key]}"
            for key in ("radius", "diameter", "degree_sequence", "average_degree")
            if expected[key] != computed[key]
        ]
        for want, got in zip(expected["vertices"], computed["vertices"]):
            if want != got:
                mismatches.append(f"vertex {want['label']}: expected {want}, computed {got}")
        return CheckOutcome(expected, computed, mismatches=mismatches)


class InteriorCheck(BaseCheck):
    """内部、边界与完全顶点"""

    name = "interior"
    description = "boundary, interior and complete vertices"
    families = SD_ONLY

    def expected(self, context: CheckContext) -> Dict[str, List[int]]:
        n = context.n
        order = context.group.order
        central = 2 * n
        return {
            "interior": [0],
            "boundary": list(range(1, order)),
            "complete": [v for v in range(order) if v not in (0, central)],
        }

    def render(self, value: Any) -> str:
        return f"interior {value['interior']}, {len(value['complete'])} complete vertices"

    def process(self, context: CheckContext) -> CheckOutcome:
        g = context.graph
        report = boundary_interior(g, context.geodesic())
        computed = {
            "interior": sorted(report.interior_vertices),
            "boundary": sorted(report.boundary),
            "complete": sorted(report.complete_vertices),
        }
        non_complete = sorted(set(range(g.vcount)) - report.complete_vertices)
        warnings = [
            f"non-complete vertices {label_set(g.vlabels, non_complete)} form the printed "
            f"Int = K_2; {g.vlabels[2 * context.n]} is a boundary vertex of every a^(2i)b, "
            f"so the interior by definition is K_1 on {{e}}"
        ]
        return CheckOutcome(self.expected(context), computed, warnings=warnings)


class ClosureCheck(BaseCheck):
    """Cl(Γ) = Γ, 两种扫描顺序得到同一个不动点"""

    name = "closure"
    description = "closure is a fixed point and order-independent"
    families = FAMILIES

    def expected(self, context: CheckContext) -> Dict[str, Any]:
        # 三个群族的增强幂图都是闭图
        return {"closed": True, "added_edges": 0}

    def process(self, context: CheckContext) -> CheckOutcome:
        g = context.graph
        forward = closure(g)
        backward = closure(g, vertex_order=list(reversed(range(g.vcount))))
        mismatches = []
        if forward != backward:
            mismatches.append("closure depends on the scan order")
        computed = {
            "closed": is_closed(g) and forward == g,
            "added_edges": forward.edge_count - g.edge_count,
        }
        return CheckOutcome(self.expected(context), computed, mismatches=mismatches)


class EccentricCheck(BaseCheck):
    """离心子图 = V \\ {e}, 中心 = {e}"""

    name = "eccentric"
    description = "eccentric subgraph and center"
    families = SD_ONLY

    def expected(self, context: CheckContext) -> Dict[str, List[int]]:
        return {"eccentric": list(range(1, context.group.order)), "center": [0]}

    def render(self, value: Any) -> str:
        return f"{len(value['eccentric'])} eccentric vertices, center {value['center']}"

    def process(self, context: CheckContext) -> CheckOutcome:
        dist = context.geodesic()
        computed = {"eccentric": eccentric_vertices(dist), "center": center_vertices(dist)}
        return CheckOutcome(self.expected(context), computed)
