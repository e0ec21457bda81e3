"""
可解析集模块 - 孪生类、可解析集判定、度量维数、可解析多项式
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple
import logging

from config.settings import settings

from .errors import CapacityError, ConsistencyError, DisconnectedGraphError
from .graph import SimpleGraph, iter_bits, mask_of
from .group import GroupFamily, validate_family_parameter
from .metric import DistanceMatrix, all_pairs_geodesic
from .polynomial import IntPolynomial
from .workers import ordered_map, resolve_workers, split_range

logger = logging.getLogger(__name__)


class TwinKind(Enum):
    TRUE = "true"        # N[u] = N[v]
    FALSE = "false"      # N(u) = N(v)
    SINGLETON = "singleton"


@dataclass(frozen=True)
class TwinClass:
    members: Tuple[int, ...]
    kind: TwinKind

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    def to_dict(self) -> Dict[str, object]:
        return {"members": list(self.members), "kind": self.kind.value}


def twin_classes(g: SimpleGraph) -> List[TwinClass]:
    """
    把顶点划分成极大孪生类, 按最小成员排序

    一个顶点不可能同时有真孪生和假孪生, 所以两种分组不会冲突
    """
    by_closed: Dict[int, List[int]] = {}
    by_open: Dict[int, List[int]] = {}
    for v in range(g.vcount):
        by_closed.setdefault(g.adjacency[v] | 1 << v, []).append(v)
        by_open.setdefault(g.adjacency[v], []).append(v)

    assigned = set()
    classes: List[TwinClass] = []
    for groups, kind in ((by_closed, TwinKind.TRUE), (by_open, TwinKind.FALSE)):
        for members in groups.values():
            if len(members) > 1:
                if assigned.intersection(members):
                    raise ConsistencyError(f"vertex set {members} has both true and false twins")
                assigned.update(members)
                classes.append(TwinClass(tuple(members), kind))
    for v in range(g.vcount):
        if v not in assigned:
            classes.append(TwinClass((v,), TwinKind.SINGLETON))
    return sorted(classes, key=lambda c: c.members[0])


def twin_lower_bound(classes: Iterable[TwinClass]) -> int:
    """任何可解析集至少包含每个孪生类的 |class| - 1 个顶点"""
    return sum(c.size - 1 for c in classes)


def is_resolving(g: SimpleGraph, vertices: Iterable[int],
                 dist: Optional[DistanceMatrix] = None) -> bool:
    """到 S 的距离向量两两不同"""
    dist = dist or all_pairs_geodesic(g)
    chosen = sorted(set(vertices))
    fingerprints = {tuple(dist.distance(v, s) for s in chosen) for v in range(g.vcount)}
    return len(fingerprints) == g.vcount


def resolver_masks(dist: DistanceMatrix) -> List[int]:
    """
    对每对 (u, v), 能区分它们的顶点集合的位集; 去重并去掉超集

    S 可解析 当且仅当 S 与每个位集都相交
    """
    n = dist.vcount
    masks = set()
    for u in range(n):
        row_u = dist.row(u)
        for v in range(u + 1, n):
            row_v = dist.row(v)
            masks.add(mask_of(s for s in range(n) if row_u[s] != row_v[s]))
    minimal: List[int] = []
    for mask in sorted(masks, key=lambda m: (m.bit_count(), m)):
        if not any(kept & mask == kept for kept in minimal):
            minimal.append(mask)
    return minimal


def twin_respecting_masks(classes: Sequence[TwinClass]) -> Iterator[int]:
    """每个孪生类要么全选, 要么恰好少选一个"""
    options = []
    for c in classes:
        full = c.mask
        options.append([full] + [full & ~(1 << v) for v in c.members])
    for choice in product(*options):
        mask = 0
        for part in choice:
            mask |= part
        yield mask


# ---------------------------------------------------------------------------
# 度量维数
# ---------------------------------------------------------------------------

def _subsets_of_size(classes: Sequence[TwinClass], size: int) -> Iterator[Tuple[int, ...]]:
    """满足孪生下界且大小为 size 的子集, 顺序确定"""
    low_rest = [sum(c.size - 1 for c in classes[k:]) for k in range(len(classes) + 1)]
    high_rest = [sum(c.size for c in classes[k:]) for k in range(len(classes) + 1)]

    def walk(k: int, left: int, chosen: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if k == len(classes):
            if left == 0:
                yield chosen
            return
        c = classes[k]
        for take in (c.size - 1, c.size):
            remaining = left - take
            if not low_rest[k + 1] <= remaining <= high_rest[k + 1]:
                continue
            for picked in combinations(c.members, take):
                yield from walk(k + 1, remaining, chosen + picked)

    yield from walk(0, size, ())


def metric_dimension(g: SimpleGraph, dist: Optional[DistanceMatrix] = None,
                     budget: Optional[int] = None) -> Tuple[int, Tuple[int, ...]]:
    """按大小递增搜索最小可解析集, 从孪生下界开始"""
    dist = dist or all_pairs_geodesic(g)
    if not dist.is_connected():
        raise DisconnectedGraphError("metric dimension")
    budget = budget if budget is not None else settings.dimension_budget
    classes = twin_classes(g)
    lower = twin_lower_bound(classes)
    targets = resolver_masks(dist)
    tested = 0
    for size in range(lower, g.vcount + 1):
        for subset in _subsets_of_size(classes, size):
            tested += 1
            if tested > budget:
                raise CapacityError("metric dimension search", tested, budget, "dimension_budget")
            mask = mask_of(subset)
            if all(mask & t for t in targets):
                logger.debug("dimension %d found after %d candidates", size, tested)
                return size, tuple(sorted(subset))
    raise ConsistencyError("the whole vertex set should always be resolving")


# ---------------------------------------------------------------------------
# 可解析集计数
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResolvingReport:
    """counts[i] = r_i, i 从 dim 到 vcount"""
    dim: int
    counts: Dict[int, int]
    polynomial: IntPolynomial
    twin_classes: Tuple[TwinClass, ...]
    tested: int = 0

    @property
    def sequence(self) -> List[Tuple[int, int]]:
        return sorted(self.counts.items())

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> Dict[str, object]:
        return {
            "dim": self.dim,
            "r": [[i, str(r)] for i, r in self.sequence],
            "polynomial": self.polynomial.to_strings(),
            "twin_classes": [c.to_dict() for c in self.twin_classes],
        }


def _count_chunk(task: Tuple[Tuple[int, ...], int, Sequence[int]]) -> List[int]:
    targets, vcount, masks = task
    counts = [0] * (vcount + 1)
    for mask in masks:
        for t in targets:
            if not mask & t:
                break
        else:
            counts[mask.bit_count()] += 1
    return counts


def resolving_counts(g: SimpleGraph, cap: Optional[int] = None, prune_twins: bool = True,
                     dist: Optional[DistanceMatrix] = None,
                     workers: Optional[int] = None) -> ResolvingReport:
    """
    穷举子集统计 r_i

    prune_twins=True 时只检查满足孪生下界的子集 (其余子集必然不可解析);
    False 时逐个检查全部 2^V 个子集
    """
    cap = cap if cap is not None else settings.enum_cap
    if g.vcount > cap:
        raise CapacityError("resolving enumeration", g.vcount, cap, "enum_cap")
    dist = dist or all_pairs_geodesic(g)
    if not dist.is_connected():
        raise DisconnectedGraphError("resolving enumeration")

    classes = twin_classes(g)
    targets = tuple(resolver_masks(dist))
    if prune_twins:
        masks: Sequence[int] = list(twin_respecting_masks(classes))
    else:
        masks = range(1 << g.vcount)

    parts = resolve_workers(workers)
    chunks = [masks[r.start:r.stop] for r in split_range(len(masks), parts * 4 if parts > 1 else 1)]
    partial = ordered_map(_count_chunk, [(targets, g.vcount, chunk) for chunk in chunks], workers)
    totals = [sum(column) for column in zip(*partial)] if partial else [0] * (g.vcount + 1)

    dim = next(i for i, r in enumerate(totals) if r)
    counts = {i: totals[i] for i in range(dim, g.vcount + 1)}
    missing = [i for i, r in counts.items() if r == 0]
    if missing:
        raise ConsistencyError(f"resolving sets of sizes {missing} missing above dimension {dim}")

    polynomial = IntPolynomial(totals)
    logger.debug("resolving enumeration: %d masks tested, dim=%d", len(masks), dim)
    return ResolvingReport(dim, counts, polynomial, tuple(classes), len(masks))


# ---------------------------------------------------------------------------
# SD_{8n} 的闭式
# ---------------------------------------------------------------------------

def sd_metric_basis_witness(n: int) -> Tuple[int, ...]:
    """{a^{2i}b : 1 <= i <= 2n-1} ∪ (<a> \\ {e, a, a^{2n}}) ∪ {a^{2i+1}b : 0 <= i <= n-1}"""
    validate_family_parameter(GroupFamily.SEMIDIHEDRAL, n)
    m = 4 * n
    involutions = [m + 2 * i for i in range(1, 2 * n)]
    rotations = [j for j in range(m) if j not in (0, 1, 2 * n)]
    order_four = [m + 2 * i + 1 for i in range(n)]
    return tuple(sorted(involutions + rotations + order_four))


def sd_selection_counts(n: int) -> Tuple[int, ...]:
    """
    k_t: 从 T = SD_{8n} \\ ∪H_l 中选出 6n - t 个元素且满足孪生下界的方式数, t = 0..4
    """
    validate_family_parameter(GroupFamily.SEMIDIHEDRAL, n)
    factors = [IntPolynomial((1, 4 * n - 2)), IntPolynomial((1, 1)) ** 2, IntPolynomial((1, 2 * n))]
    result = IntPolynomial.constant(1)
    for f in factors:
        result = result * f
    return tuple(result.coefficient(t) for t in range(5))


def sd_printed_selection_counts(n: int) -> Tuple[int, ...]:
    return (1, 6 * n, 8 * n * n + 8 * n - 3, 16 * n * n - 2 * n - 2, 8 * n * n - 4 * n)


def _pair_term(n: int, extra: int, k: int) -> int:
    """C(n, extra) 2^{n-extra} k; 越界的组合数记为 0"""
    if extra < 0 or extra > n:
        return 0
    return comb(n, extra) * 2 ** (n - extra) * k


@dataclass
class ResolvingFormulaCoverage:
    """分段公式在 [7n-4, 8n-2] 上的覆盖诊断"""
    n: int
    branch_ranges: Dict[int, Tuple[int, int]]
    branch_values: Dict[int, Dict[int, int]] = field(default_factory=dict)
    values: Dict[int, int] = field(default_factory=dict)
    gaps: List[int] = field(default_factory=list)
    overlaps: List[int] = field(default_factory=list)
    conflicts: List[int] = field(default_factory=list)

    @property
    def is_partition(self) -> bool:
        return not self.gaps and not self.overlaps

    def diagnostics(self) -> List[str]:
        notes = []
        for i in self.overlaps:
            covering = sorted(b for b, vals in self.branch_values.items() if i in vals)
            agreed = "agree" if i not in self.conflicts else "disagree"
            notes.append(f"index {i} covered by branches {covering} which {agreed}")
        for i in self.gaps:
            notes.append(f"index {i} covered by no branch")
        for b, (low, high) in self.branch_ranges.items():
            if low > high:
                notes.append(f"branch {b} range [{low}, {high}] is empty")
        return notes


def sd_resolving_coverage(n: int) -> ResolvingFormulaCoverage:
    """逐段按印刷的下标范围求值, 记录空段、重叠与冲突"""
    validate_family_parameter(GroupFamily.SEMIDIHEDRAL, n)
    k = sd_printed_selection_counts(n)
    ranges = {
        1: (7 * n - 4, 7 * n - 1),
        2: (7 * n, 8 * n - 4),
        3: (8 * n - 3, 8 * n - 2),
    }

    def branch_one(i: int) -> int:
        return sum(_pair_term(n, j, k[7 * n + j - i]) for j in range(i - (7 * n - 4) + 1))

    def branch_two(i: int) -> int:
        return sum(_pair_term(n, i - 7 * n + j, k[j]) for j in range(5))

    def branch_three(i: int) -> int:
        return sum(_pair_term(n, n + j - (8 * n - i), k[j]) for j in range(8 * n - i + 1))

    formulas = {1: branch_one, 2: branch_two, 3: branch_three}
    coverage = ResolvingFormulaCoverage(n, ranges)
    for b, (low, high) in ranges.items():
        coverage.branch_values[b] = {i: formulas[b](i) for i in range(low, high + 1)}

    for i in range(7 * n - 4, 8 * n - 1):
        found = [vals[i] for b, vals in sorted(coverage.branch_values.items()) if i in vals]
        if not found:
            coverage.gaps.append(i)
            continue
        if len(found) > 1:
            coverage.overlaps.append(i)
            if len(set(found)) > 1:
                coverage.conflicts.append(i)
        coverage.values[i] = found[0]
    return coverage


def sd_resolving_polynomial_closed_form(n: int) -> IntPolynomial:
    """x^{8n} + 8n x^{8n-1} + Σ r_i x^i, r_i 取自覆盖该下标的第一段公式"""
    coverage = sd_resolving_coverage(n)
    coefficients = [0] * (8 * n + 1)
    for i, value in coverage.values.items():
        coefficients[i] = value
    coefficients[8 * n - 1] = 8 * n
    coefficients[8 * n] = 1
    return IntPolynomial(coefficients)


def sd_resolving_polynomial_product_form(n: int) -> IntPolynomial:
    """
    按孪生类逐类选取:
    (x^{4n-2} + (4n-2)x^{4n-3}) (x^{2n} + 2n x^{2n-1}) (x^2 + 2x)^n (1 + x)^2
    """
    validate_family_parameter(GroupFamily.SEMIDIHEDRAL, n)
    rotations = IntPolynomial.monomial(4 * n - 2) + IntPolynomial.monomial(4 * n - 3, 4 * n - 2)
    involutions = IntPolynomial.monomial(2 * n) + IntPolynomial.monomial(2 * n - 1, 2 * n)
    pairs = IntPolynomial((0, 2, 1)) ** n
    singles = IntPolynomial((1, 1)) ** 2
    return rotations * involutions * pairs * singles
