"""
图构造模块 - 增强幂图、幂图、图运算 (join / 不交并) 与同构判定
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple
import logging

from .errors import ParameterError
from .group import (
    FiniteGroup,
    GroupFamily,
    cyclic_subgroup,
    cyclic_subgroups,
    maximal_cyclic_subgroups,
    validate_family_parameter,
)

logger = logging.getLogger(__name__)


def iter_bits(bits: int) -> Iterator[int]:
    """按升序遍历位集中的下标"""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def mask_of(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


@dataclass(frozen=True)
class SimpleGraph:
    """无向简单图, adjacency[i] 是顶点 i 的邻接位集"""
    vcount: int
    adjacency: Tuple[int, ...]
    vlabels: Tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.adjacency) != self.vcount:
            raise ParameterError(
                f"adjacency has {len(self.adjacency)} rows for {self.vcount} vertices"
            )
        if not self.vlabels:
            object.__setattr__(self, "vlabels", tuple(str(i) for i in range(self.vcount)))
        full = (1 << self.vcount) - 1
        for v, bits in enumerate(self.adjacency):
            if bits & ~full:
                raise ParameterError(f"vertex {v} has a neighbour outside the vertex set")
            if bits >> v & 1:
                raise ParameterError(f"vertex {v} has a loop")
            for w in iter_bits(bits):
                if not self.adjacency[w] >> v & 1:
                    raise ParameterError(f"adjacency is not symmetric at ({v}, {w})")

    @classmethod
    def from_edges(cls, vcount: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> "SimpleGraph":
        rows = [0] * vcount
        for u, v in edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(vcount, tuple(rows), tuple(labels) if labels else ())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> List[int]:
        return [bits.bit_count() for bits in self.adjacency]

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adjacency[v]))

    def closed_neighborhood(self, v: int) -> FrozenSet[int]:
        return frozenset(iter_bits(self.adjacency[v] | 1 << v))

    def edges(self) -> List[Tuple[int, int]]:
        """边 (i, j), i < j, 按字典序"""
        return [
            (u, v)
            for u in range(self.vcount)
            for v in iter_bits(self.adjacency[u] >> (u + 1) << (u + 1))
        ]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def induced_subgraph(self, vertices: Iterable[int]) -> "SimpleGraph":
        """诱导子图, 顶点按原下标升序重新编号, 保留标签"""
        kept = sorted(set(vertices))
        position = {v: k for k, v in enumerate(kept)}
        rows = []
        for v in kept:
            bits = 0
            for w in iter_bits(self.adjacency[v]):
                if w in position:
                    bits |= 1 << position[w]
            rows.append(bits)
        return SimpleGraph(len(kept), tuple(rows), tuple(self.vlabels[v] for v in kept))

    def components(self) -> List[List[int]]:
        seen = 0
        parts = []
        for start in range(self.vcount):
            if seen >> start & 1:
                continue
            reached = frontier = 1 << start
            while frontier:
                grow = 0
                for v in iter_bits(frontier):
                    grow |= self.adjacency[v]
                frontier = grow & ~reached
                reached |= frontier
            seen |= reached
            parts.append(list(iter_bits(reached)))
        return parts

    def is_connected(self) -> bool:
        return self.vcount <= 1 or len(self.components()) == 1

    def is_subgraph_of(self, other: "SimpleGraph") -> bool:
        """同一顶点集上的边集包含关系"""
        return self.vcount == other.vcount and all(
            mine & ~theirs == 0 for mine, theirs in zip(self.adjacency, other.adjacency)
        )

    def to_dot(self, name: str = "epg") -> str:
        lines = [f"graph {name} {{"]
        for v, label in enumerate(self.vlabels):
            escaped = label.replace('"', '\\"')
            lines.append(f'  {v} [label="{escaped}"];')
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_adjacency_dict(self) -> Dict[str, list]:
        return {
            "labels": list(self.vlabels),
            "adjacency": [self.neighbors(v) for v in range(self.vcount)],
        }


# ---------------------------------------------------------------------------
# 群 -> 图
# ---------------------------------------------------------------------------

def enhanced_power_graph(group: FiniteGroup) -> SimpleGraph:
    """增强幂图: x ~ y 当且仅当某个极大循环子群同时包含 x 和 y"""
    maximal = maximal_cyclic_subgroups(group)
    membership = [0] * group.order
    for k, subgroup in enumerate(maximal):
        for x in subgroup.members:
            membership[x] |= 1 << k
    rows = []
    for x in range(group.order):
        bits = 0
        for y in range(group.order):
            if y != x and membership[x] & membership[y]:
                bits |= 1 << y
        rows.append(bits)
    logger.debug("EPG(%s): %d maximal cyclic subgroups", group.name, len(maximal))
    return SimpleGraph(group.order, tuple(rows), group.labels)


def enhanced_power_graph_bruteforce(group: FiniteGroup) -> SimpleGraph:
    """按定义扫描所有 <z>, 用于交叉验证"""
    rows = [0] * group.order
    for subgroup in cyclic_subgroups(group):
        bits = subgroup.mask
        for x in subgroup.members:
            rows[x] |= bits
    rows = [bits & ~(1 << x) for x, bits in enumerate(rows)]
    return SimpleGraph(group.order, tuple(rows), group.labels)


def power_graph(group: FiniteGroup) -> SimpleGraph:
    """幂图: x ~ y 当且仅当其中一个是另一个的正整数次幂"""
    powers = [cyclic_subgroup(group, x).mask for x in range(group.order)]
    rows = []
    for x in range(group.order):
        bits = powers[x]
        for y in range(group.order):
            if powers[y] >> x & 1:
                bits |= 1 << y
        rows.append(bits & ~(1 << x))
    return SimpleGraph(group.order, tuple(rows), group.labels)


def sd_neighborhood_oracle(n: int, v: int) -> FrozenSet[int]:
    """EPG(SD_{8n}) 的闭邻域, 按邻域引理的五种情形给出"""
    validate_family_parameter(GroupFamily.SEMIDIHEDRAL, n)
    m = 4 * n
    if not 0 <= v < 2 * m:
        raise ParameterError(f"vertex {v} out of range for SD_{8 * n}")
    rotations = set(range(m))
    if v == 0:
        return frozenset(range(2 * m))
    if v == 2 * n:
        return frozenset(rotations | {m + i for i in range(1, m, 2)})
    if v < m:
        return frozenset(rotations)
    i = v - m
    if i % 2:
        return frozenset({0, 2 * n, v, m + (i + 2 * n) % m})
    return frozenset({0, v})


# ---------------------------------------------------------------------------
# 图运算
# ---------------------------------------------------------------------------

def complete(k: int) -> SimpleGraph:
    if k < 0:
        raise ParameterError(f"vertex count must be >= 0, got {k}")
    full = (1 << k) - 1
    return SimpleGraph(k, tuple(full & ~(1 << v) for v in range(k)))


def edgeless(k: int) -> SimpleGraph:
    if k < 0:
        raise ParameterError(f"vertex count must be >= 0, got {k}")
    return SimpleGraph(k, (0,) * k)


def _combine(g1: SimpleGraph, g2: SimpleGraph, cross: bool) -> SimpleGraph:
    shift = g1.vcount
    left_all = (1 << g1.vcount) - 1
    right_all = ((1 << g2.vcount) - 1) << shift
    rows = [bits | (right_all if cross else 0) for bits in g1.adjacency]
    rows += [(bits << shift) | (left_all if cross else 0) for bits in g2.adjacency]
    return SimpleGraph(g1.vcount + g2.vcount, tuple(rows), g1.vlabels + g2.vlabels)


def disjoint_union(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    return _combine(g1, g2, cross=False)


def join(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    """g1 ∨ g2: 不交并再连接所有跨边"""
    return _combine(g1, g2, cross=True)


def copies(g: SimpleGraph, k: int) -> SimpleGraph:
    """k 个 g 的不交并, 如 nK_2"""
    result = edgeless(0)
    for _ in range(k):
        result = disjoint_union(result, g)
    return result


def quaternion_decomposition(n: int) -> SimpleGraph:
    """K_2 ∨ (K_{2n-2} ∪ nK_2), 阶为 4n"""
    validate_family_parameter(GroupFamily.QUATERNION, n)
    return join(complete(2), disjoint_union(complete(2 * n - 2), copies(complete(2), n)))


def quaternion_decomposition_as_printed(n: int) -> SimpleGraph:
    """文献中印刷的 K_2 ∨ (K_{n-2} ∪ nK_2), 阶为 3n"""
    validate_family_parameter(GroupFamily.QUATERNION, n)
    return join(complete(2), disjoint_union(complete(n - 2), copies(complete(2), n)))


def dihedral_decomposition(m: int) -> SimpleGraph:
    """K_1 ∨ (K_{m-1} ∪ \\overline{K}_m)"""
    validate_family_parameter(GroupFamily.DIHEDRAL, m)
    return join(complete(1), disjoint_union(complete(m - 1), edgeless(m)))


def semidihedral_decomposition(n: int) -> SimpleGraph:
    """K_1 ∨ (\\overline{K}_{2n} ∪ (K_1 ∨ (K_{4n-2} ∪ nK_2)))"""
    validate_family_parameter(GroupFamily.SEMIDIHEDRAL, n)
    inner = join(complete(1), disjoint_union(complete(4 * n - 2), copies(complete(2), n)))
    return join(complete(1), disjoint_union(edgeless(2 * n), inner))


# ---------------------------------------------------------------------------
# 同构判定
# ---------------------------------------------------------------------------

def _signature(g: SimpleGraph, v: int, degrees: List[int]) -> Tuple[int, Tuple[int, ...]]:
    return degrees[v], tuple(sorted(degrees[w] for w in iter_bits(g.adjacency[v])))


def is_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> Optional[List[int]]:
    """
    回溯搜索同构映射 mapping[v1] = v2, 不存在时返回 None

    候选按度数和邻居度数多重集剪枝; 仅适用于小图 (<= 64 个顶点)
    """
    n = g1.vcount
    if n != g2.vcount or g1.edge_count != g2.edge_count:
        return None
    deg1, deg2 = g1.degrees(), g2.degrees()
    if sorted(deg1) != sorted(deg2):
        return None

    sig2 = [_signature(g2, v, deg2) for v in range(n)]
    candidates = []
    for u in range(n):
        signature = _signature(g1, u, deg1)
        options = [v for v in range(n) if sig2[v] == signature]
        if not options:
            return None
        candidates.append(options)

    # 搜索顺序: 优先与已排序顶点相连最多的, 再按候选数和下标
    order: List[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        u = min(
            remaining,
            key=lambda x: (-(g1.adjacency[x] & placed).bit_count(), len(candidates[x]), x),
        )
        order.append(u)
        placed |= 1 << u
        remaining.remove(u)

    mapping = [-1] * n
    image_used = 0

    def extend(depth: int) -> bool:
        nonlocal image_used
        if depth == n:
            return True
        u = order[depth]
        mapped_neighbors = [w for w in iter_bits(g1.adjacency[u]) if mapping[w] >= 0]
        mapped_count = len(mapped_neighbors)
        for v in candidates[u]:
            if image_used >> v & 1:
                continue
            if any(not g2.adjacency[v] >> mapping[w] & 1 for w in mapped_neighbors):
                continue
            # 像中已映射的邻居数必须相同, 否则存在多余的边
            if (g2.adjacency[v] & image_used).bit_count() != mapped_count:
                continue
            mapping[u] = v
            image_used |= 1 << v
            if extend(depth + 1):
                return True
            mapping[u] = -1
            image_used &= ~(1 << v)
        return False

    if extend(0):
        return mapping
    return None
