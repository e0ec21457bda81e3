"""
距离模块 - 测地距离矩阵、离心率、中心、闭包、边界与内部
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple
import logging

import pandas as pd

from .errors import ConsistencyError, DisconnectedGraphError, ParameterError
from .graph import SimpleGraph, iter_bits

logger = logging.getLogger(__name__)


class DistanceKind(Enum):
    """距离类型"""
    GEODESIC = "geodesic"
    DETOUR = "detour"


@dataclass(frozen=True)
class DistanceMatrix:
    """entries[u][v] 为距离, 不可达为 None"""
    kind: DistanceKind
    entries: Tuple[Tuple[Optional[int], ...], ...]
    labels: Tuple[str, ...] = ()

    @property
    def vcount(self) -> int:
        return len(self.entries)

    def distance(self, u: int, v: int) -> Optional[int]:
        return self.entries[u][v]

    def row(self, u: int) -> Tuple[Optional[int], ...]:
        return self.entries[u]

    def is_connected(self) -> bool:
        return all(d is not None for row in self.entries for d in row)

    def require_connected(self, operation: str) -> None:
        if not self.is_connected():
            raise DisconnectedGraphError(operation)

    def to_frame(self) -> pd.DataFrame:
        labels = list(self.labels) or [str(v) for v in range(self.vcount)]
        frame = pd.DataFrame(
            [list(row) for row in self.entries], index=labels, columns=labels, dtype=object
        )
        frame.index.name = self.kind.value
        return frame

    def to_csv(self) -> str:
        """首行为顶点标签, 不可达写作空字段"""
        return self.to_frame().to_csv(na_rep="", lineterminator="\n")


def all_pairs_geodesic(g: SimpleGraph) -> DistanceMatrix:
    """逐源 BFS (位集按层扩展)"""
    rows = []
    for source in range(g.vcount):
        row: List[Optional[int]] = [None] * g.vcount
        row[source] = 0
        reached = frontier = 1 << source
        depth = 0
        while frontier:
            depth += 1
            grow = 0
            for v in iter_bits(frontier):
                grow |= g.adjacency[v]
            frontier = grow & ~reached
            reached |= frontier
            for v in iter_bits(frontier):
                row[v] = depth
        rows.append(tuple(row))
    return DistanceMatrix(DistanceKind.GEODESIC, tuple(rows), g.vlabels)


# ---------------------------------------------------------------------------
# 离心率相关
# ---------------------------------------------------------------------------

def eccentricities(dist: DistanceMatrix) -> List[int]:
    dist.require_connected(f"{dist.kind.value} eccentricity")
    return [max(row) if row else 0 for row in dist.entries]


def radius(dist: DistanceMatrix) -> int:
    return min(eccentricities(dist))


def diameter(dist: DistanceMatrix) -> int:
    return max(eccentricities(dist))


def distance_degree_sequence(dist: DistanceMatrix, v: int) -> List[int]:
    """dds(v): 第 i 项是与 v 距离为 i 的顶点数, 长度 ecc(v)+1"""
    dist.require_connected("distance degree sequence")
    row = dist.row(v)
    counts = [0] * (max(row) + 1)
    for d in row:
        counts[d] += 1
    return counts


def center_vertices(dist: DistanceMatrix) -> List[int]:
    ecc = eccentricities(dist)
    low = min(ecc)
    return [v for v, e in enumerate(ecc) if e == low]


def eccentric_vertices(dist: DistanceMatrix) -> List[int]:
    """对某个 u 满足 d(u, v) = ecc(u) 的顶点 v"""
    ecc = eccentricities(dist)
    found: Set[int] = set()
    for u, row in enumerate(dist.entries):
        found.update(v for v, d in enumerate(row) if d == ecc[u] and v != u)
    return sorted(found)


def center(g: SimpleGraph, dist: Optional[DistanceMatrix] = None) -> SimpleGraph:
    dist = dist or all_pairs_geodesic(g)
    return g.induced_subgraph(center_vertices(dist))


def eccentric_subgraph(g: SimpleGraph, dist: Optional[DistanceMatrix] = None) -> SimpleGraph:
    dist = dist or all_pairs_geodesic(g)
    return g.induced_subgraph(eccentric_vertices(dist))


def is_eccentric_graph(g: SimpleGraph) -> bool:
    """每个顶点都是某个顶点的离心点"""
    return len(eccentric_vertices(all_pairs_geodesic(g))) == g.vcount


# ---------------------------------------------------------------------------
# 闭包
# ---------------------------------------------------------------------------

def closure(g: SimpleGraph, vertex_order: Optional[Sequence[int]] = None) -> SimpleGraph:
    """
    反复连接度数和 >= |V| 的非邻接点对直到不动点

    点对按 vertex_order 中位置的字典序扫描, 每加一条边就从头开始
    """
    n = g.vcount
    order = list(vertex_order) if vertex_order is not None else list(range(n))
    if sorted(order) != list(range(n)):
        raise ParameterError("vertex_order must be a permutation of the vertices")
    rows = list(g.adjacency)
    added = 0
    changed = True
    while changed:
        changed = False
        for p, u in enumerate(order):
            for v in order[p + 1:]:
                if rows[u] >> v & 1:
                    continue
                if rows[u].bit_count() + rows[v].bit_count() >= n:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                    added += 1
                    changed = True
                    break
            if changed:
                break
    if added:
        logger.debug("closure added %d edges", added)
    return SimpleGraph(n, tuple(rows), g.vlabels)


def is_closed(g: SimpleGraph) -> bool:
    n = g.vcount
    degrees = g.degrees()
    return not any(
        degrees[u] + degrees[v] >= n
        for u in range(n)
        for v in range(u + 1, n)
        if not g.has_edge(u, v)
    )


# ---------------------------------------------------------------------------
# 边界 / 内部 / 完全顶点
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryReport:
    boundary: FrozenSet[int]
    boundary_subgraph: SimpleGraph
    interior_vertices: FrozenSet[int]
    interior: SimpleGraph
    complete_vertices: FrozenSet[int]
    # 是所有其它顶点的边界点的顶点
    universal_boundary: FrozenSet[int] = field(default_factory=frozenset)


def _is_boundary_of(g: SimpleGraph, dist: DistanceMatrix, u: int, v: int) -> bool:
    reach = dist.distance(u, v)
    return all(dist.distance(u, w) <= reach for w in iter_bits(g.adjacency[v]))


def _is_interior_by_betweenness(dist: DistanceMatrix, v: int) -> bool:
    """对每个 u != v, 存在 w 使 v 位于 u-w 测地线上"""
    n = dist.vcount
    for u in range(n):
        if u == v:
            continue
        duv = dist.distance(u, v)
        if not any(
            w != v and duv + dist.distance(v, w) == dist.distance(u, w)
            for w in range(n)
        ):
            return False
    return True


def is_complete_vertex(g: SimpleGraph, v: int) -> bool:
    """N(v) 诱导完全图"""
    members = g.adjacency[v]
    return all(
        (g.adjacency[w] | 1 << w) & members == members for w in iter_bits(members)
    )


def boundary_interior(g: SimpleGraph, dist: Optional[DistanceMatrix] = None) -> BoundaryReport:
    """
    计算边界点、内部点与完全顶点, 并做两组互相独立的一致性校验:
    内部点 = 非边界点; 完全顶点 = 所有其它顶点的边界点
    """
    dist = dist or all_pairs_geodesic(g)
    dist.require_connected("boundary/interior")
    n = g.vcount

    boundary_of = [
        {u for u in range(n) if u != v and _is_boundary_of(g, dist, u, v)} for v in range(n)
    ]
    boundary = frozenset(v for v in range(n) if boundary_of[v])
    interior = frozenset(v for v in range(n) if _is_interior_by_betweenness(dist, v))
    if interior != frozenset(range(n)) - boundary:
        raise ConsistencyError(
            f"interior {sorted(interior)} is not the complement of boundary {sorted(boundary)}"
        )

    complete_vertices = frozenset(v for v in range(n) if is_complete_vertex(g, v))
    universal_boundary = frozenset(v for v in range(n) if len(boundary_of[v]) == n - 1)
    if n > 1 and complete_vertices != universal_boundary:
        raise ConsistencyError(
            f"complete vertices {sorted(complete_vertices)} differ from "
            f"boundary-of-all vertices {sorted(universal_boundary)}"
        )

    return BoundaryReport(
        boundary=boundary,
        boundary_subgraph=g.induced_subgraph(boundary),
        interior_vertices=interior,
        interior=g.induced_subgraph(interior),
        complete_vertices=complete_vertices,
        universal_boundary=universal_boundary,
    )
