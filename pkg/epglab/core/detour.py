"""
最长路 (detour) 距离模块

两种精确引擎:
- SubsetDPEngine: 按 (已访问集合, 端点) 分层的子集动态规划, 适用于小图
- BranchAndBoundEngine: 带孪生类对称剪枝和可达集上界的 DFS, 适用于稍大的图
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple
import logging
import time

from config.settings import settings

from .errors import CapacityError, ConsistencyError, ParameterError
from .graph import SimpleGraph, iter_bits
from .group import GroupFamily, SDElementKind, sd_element_kind, sd_partner, validate_family_parameter
from .metric import DistanceKind, DistanceMatrix, distance_degree_sequence
from .resolving import twin_classes
from .workers import ordered_map

logger = logging.getLogger(__name__)


class DetourEngine(ABC):
    """单源最长简单路引擎"""

    name = "abstract"

    @abstractmethod
    def row(self, g: SimpleGraph, source: int) -> List[Optional[int]]:
        """返回 source 到每个顶点的最长简单路长度, 不可达为 None"""


class SubsetDPEngine(DetourEngine):
    """layers[mask] = 以 mask 为顶点集、从 source 出发的路径的所有可能终点"""

    name = "subset-dp"

    def row(self, g: SimpleGraph, source: int) -> List[Optional[int]]:
        best: List[Optional[int]] = [None] * g.vcount
        best[source] = 0
        layer: Dict[int, int] = {1 << source: 1 << source}
        length = 0
        while layer:
            length += 1
            grown: Dict[int, int] = {}
            for mask, ends in layer.items():
                step = 0
                for u in iter_bits(ends):
                    step |= g.adjacency[u]
                step &= ~mask
                for v in iter_bits(step):
                    bit = 1 << v
                    key = mask | bit
                    grown[key] = grown.get(key, 0) | bit
            for ends in grown.values():
                for v in iter_bits(ends):
                    best[v] = length
            layer = grown
        return best


class BranchAndBoundEngine(DetourEngine):
    """
    深度优先枚举规范路径

    同一孪生类 (源点除外) 中的顶点可互换, 只向类中下标最小的未访问顶点延伸,
    结束后在类内取最大值; 若剩余可达顶点都已有不小于上界的记录则剪枝
    """

    name = "branch-and-bound"

    def row(self, g: SimpleGraph, source: int) -> List[Optional[int]]:
        n = g.vcount
        class_of = [0] * n
        for index, twin_class in enumerate(twin_classes(g)):
            for v in twin_class.members:
                class_of[v] = index
        class_of[source] = n  # 源点单独成类
        class_best: Dict[int, int] = {c: -1 for c in class_of}
        adjacency = g.adjacency
        nodes = 0

        def reachable(frontier: int, visited: int) -> int:
            reached = frontier
            while frontier:
                grow = 0
                for v in iter_bits(frontier):
                    grow |= adjacency[v]
                frontier = grow & ~visited & ~reached
                reached |= frontier
            return reached

        def extend(u: int, visited: int, length: int) -> None:
            nonlocal nodes
            nodes += 1
            c = class_of[u]
            if length > class_best[c]:
                class_best[c] = length
            free = adjacency[u] & ~visited
            if not free:
                return
            reach = reachable(free, visited)
            bound = length + reach.bit_count()
            if all(class_best[class_of[t]] >= bound for t in iter_bits(reach)):
                return
            tried = set()
            for v in iter_bits(free):
                if class_of[v] in tried:
                    continue
                tried.add(class_of[v])
                extend(v, visited | 1 << v, length + 1)

        extend(source, 1 << source, 0)
        logger.debug("branch-and-bound source %d: %d nodes", source, nodes)
        return [class_best[class_of[v]] if class_best[class_of[v]] >= 0 else None for v in range(n)]


class DetourEngineFactory:
    """最长路引擎工厂"""

    ENGINES = {
        "dp": SubsetDPEngine,
        "bnb": BranchAndBoundEngine,
    }

    @staticmethod
    def select(g: SimpleGraph, dp_limit: Optional[int] = None) -> str:
        """按顶点数选择引擎名"""
        limit = dp_limit if dp_limit is not None else settings.detour_dp_limit
        return "dp" if g.vcount <= limit else "bnb"

    @staticmethod
    def create(g: SimpleGraph, engine: Optional[str] = None,
               dp_limit: Optional[int] = None) -> DetourEngine:
        if engine is None:
            engine = DetourEngineFactory.select(g, dp_limit)
        engine_cls = DetourEngineFactory.ENGINES.get(engine.lower())
        if engine_cls is None:
            raise ParameterError(f"不支持的最长路引擎: {engine}")
        return engine_cls()


def _check_cap(g: SimpleGraph, cap: Optional[int], what: str) -> None:
    cap = cap if cap is not None else settings.detour_cap
    if g.vcount > cap:
        raise CapacityError(what, g.vcount, cap, "detour_cap")


def _row_task(task: Tuple[SimpleGraph, int, Optional[str]]) -> List[Optional[int]]:
    g, source, engine = task
    return DetourEngineFactory.create(g, engine).row(g, source)


def detour_row(g: SimpleGraph, source: int, cap: Optional[int] = None,
               engine: Optional[str] = None) -> List[Optional[int]]:
    """单源最长路距离"""
    if not 0 <= source < g.vcount:
        raise ParameterError(f"source {source} out of range")
    _check_cap(g, cap, "detour row")
    return DetourEngineFactory.create(g, engine).row(g, source)


def all_pairs_detour(g: SimpleGraph, cap: Optional[int] = None,
                     engine: Optional[str] = None,
                     workers: Optional[int] = None) -> DistanceMatrix:
    """所有点对的最长简单路长度, 按源点并行"""
    _check_cap(g, cap, "all-pairs detour")
    started = time.perf_counter()
    rows = ordered_map(_row_task, [(g, s, engine) for s in range(g.vcount)], workers)
    for u in range(g.vcount):
        for v in range(u):
            if rows[u][v] != rows[v][u]:
                raise ConsistencyError(f"detour matrix not symmetric at ({u}, {v})")
    logger.debug("all-pairs detour on %d vertices in %.2fs", g.vcount, time.perf_counter() - started)
    return DistanceMatrix(DistanceKind.DETOUR, tuple(tuple(r) for r in rows), g.vlabels)


# ---------------------------------------------------------------------------
# 统计量
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DetourProfile:
    """逐顶点的 detour 离心率、detour 度、dds 以及图级统计"""
    eccentricity: Tuple[int, ...]
    degree: Tuple[int, ...]
    dds: Tuple[Tuple[int, ...], ...]
    radius: int
    diameter: int
    degree_sequence: Tuple[int, ...]
    average_degree: Fraction
    labels: Tuple[str, ...] = ()

    @property
    def average_text(self) -> str:
        return f"{self.average_degree.numerator}/{self.average_degree.denominator}"

    def to_dict(self) -> Dict[str, object]:
        labels = list(self.labels) or [str(v) for v in range(len(self.dds))]
        return {
            "radius": self.radius,
            "diameter": self.diameter,
            "degree_sequence": list(self.degree_sequence),
            "average_degree": self.average_text,
            "vertices": [
                {
                    "label": labels[v],
                    "eccentricity": self.eccentricity[v],
                    "degree": self.degree[v],
                    "dds": list(self.dds[v]),
                }
                for v in range(len(self.dds))
            ],
        }


def profile_from_dds(dds_rows: Sequence[Sequence[int]],
                     labels: Sequence[str] = ()) -> DetourProfile:
    """由每个顶点的 dds 序列汇总出 DetourProfile"""
    dds = tuple(tuple(row) for row in dds_rows)
    vcount = len(dds)
    for v, row in enumerate(dds):
        if row[0] != 1 or sum(row) != vcount:
            raise ConsistencyError(f"dds of vertex {v} is not a distribution over {vcount} vertices")
    eccentricity = tuple(len(row) - 1 for row in dds)
    degree = tuple(row[-1] for row in dds)
    return DetourProfile(
        eccentricity=eccentricity,
        degree=degree,
        dds=dds,
        radius=min(eccentricity),
        diameter=max(eccentricity),
        degree_sequence=tuple(sorted(degree, reverse=True)),
        average_degree=Fraction(sum(degree), vcount),
        labels=tuple(labels),
    )


def detour_profile(g: SimpleGraph, cap: Optional[int] = None,
                   dist: Optional[DistanceMatrix] = None,
                   workers: Optional[int] = None) -> DetourProfile:
    dist = dist or all_pairs_detour(g, cap=cap, workers=workers)
    dist.require_connected("detour profile")
    rows = [distance_degree_sequence(dist, v) for v in range(g.vcount)]
    return profile_from_dds(rows, g.vlabels)


# ---------------------------------------------------------------------------
# SD_{8n} 的闭式
# ---------------------------------------------------------------------------

_E = SDElementKind.IDENTITY
_Z = SDElementKind.CENTRAL
_A = SDElementKind.ROTATION
_L = SDElementKind.INVOLUTION
_X = SDElementKind.ORDER_FOUR


def sd_detour_closed_form(n: int, u: int, v: int) -> int:
    """EPG(SD_{8n}) 中 u, v 之间的最长路长度 (逐情形)"""
    validate_family_parameter(GroupFamily.SEMIDIHEDRAL, n)
    if u == v:
        return 0
    ku, kv = sd_element_kind(n, u), sd_element_kind(n, v)
    pair = {ku, kv}
    if ku == kv == _X:
        return 4 * n + 1 if sd_partner(n, u) == v else 4 * n + 3
    table = {
        frozenset({_E, _A}): 4 * n + 1,
        frozenset({_E, _Z}): 4 * n - 1,
        frozenset({_E, _X}): 4 * n + 1,
        frozenset({_E, _L}): 1,
        frozenset({_Z, _A}): 4 * n + 1,
        frozenset({_Z, _X}): 4 * n + 1,
        frozenset({_Z, _L}): 4 * n,
        frozenset({_A}): 4 * n + 1,
        frozenset({_A, _X}): 4 * n + 3,
        frozenset({_A, _L}): 4 * n + 2,
        frozenset({_X, _L}): 4 * n + 2,
        frozenset({_L}): 2,
    }
    value = table.get(frozenset(pair))
    if value is None:
        raise ConsistencyError(f"no detour case for kinds {ku.value}, {kv.value}")
    return value


def sd_dds_closed_form(n: int, v: int) -> List[int]:
    """EPG(SD_{8n}) 中顶点 v 的 dds_D 序列 (含中间的 0)"""
    validate_family_parameter(GroupFamily.SEMIDIHEDRAL, n)
    kind = sd_element_kind(n, v)
    if kind == _E:
        return [1, 2 * n] + [0] * (4 * n - 3) + [1, 0, 6 * n - 2]
    if kind == _Z:
        return [1] + [0] * (4 * n - 2) + [1, 2 * n, 6 * n - 2]
    if kind == _A:
        return [1] + [0] * (4 * n) + [4 * n - 1, 2 * n, 2 * n]
    if kind == _L:
        return [1, 1, 2 * n - 1] + [0] * (4 * n - 3) + [1, 0, 6 * n - 2]
    return [1] + [0] * (4 * n) + [3, 2 * n, 6 * n - 4]


def sd_detour_matrix_closed_form(n: int) -> List[List[int]]:
    order = 8 * n
    return [[sd_detour_closed_form(n, u, v) for v in range(order)] for u in range(order)]


def sd_detour_profile_closed_form(n: int, labels: Sequence[str] = ()) -> DetourProfile:
    return profile_from_dds([sd_dds_closed_form(n, v) for v in range(8 * n)], labels)


def sd_average_detour_degree(n: int) -> Fraction:
    """D_av = (8n^2 - n - 1) / (2n)"""
    validate_family_parameter(GroupFamily.SEMIDIHEDRAL, n)
    return Fraction(8 * n * n - n - 1, 2 * n)
