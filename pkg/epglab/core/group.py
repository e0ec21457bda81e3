"""
有限群模块 - 半二面体群、广义四元数群、二面体群以及自定义 Cayley 表
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple
import logging

import numpy as np

from .errors import (
    AssociativityError,
    IdentityError,
    InverseError,
    LatinSquareError,
    MalformedTableError,
    ParameterError,
)

logger = logging.getLogger(__name__)


class GroupFamily(Enum):
    """群族"""
    SEMIDIHEDRAL = "sd"
    QUATERNION = "q"
    DIHEDRAL = "d"
    CUSTOM = "custom"


# 每个群族参数 n 的最小值
FAMILY_MINIMUM = {
    GroupFamily.SEMIDIHEDRAL: 2,
    GroupFamily.QUATERNION: 2,
    GroupFamily.DIHEDRAL: 3,
}


class SDElementKind(Enum):
    """SD_{8n} 中元素的五种类型"""
    IDENTITY = "identity"        # e
    CENTRAL = "central"          # a^{2n}
    ROTATION = "rotation"        # a^i, i not in {0, 2n}
    INVOLUTION = "involution"    # a^{2i}b
    ORDER_FOUR = "order_four"    # a^{2i+1}b


@dataclass(frozen=True)
class FiniteGroup:
    """有限群: 乘法表 table[x][y] = x·y"""
    order: int
    table: Tuple[Tuple[int, ...], ...]
    identity: int = 0
    labels: Tuple[str, ...] = ()
    family: GroupFamily = GroupFamily.CUSTOM
    parameter: Optional[int] = None

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.order)))

    @property
    def name(self) -> str:
        if self.family is GroupFamily.SEMIDIHEDRAL:
            return f"SD_{self.order}"
        if self.family is GroupFamily.QUATERNION:
            return f"Q_{self.order}"
        if self.family is GroupFamily.DIHEDRAL:
            return f"D_{self.order}"
        return f"custom_{self.order}"

    def multiply(self, x: int, y: int) -> int:
        return self.table[x][y]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse(x), -k)
        result = self.identity
        for _ in range(k):
            result = self.table[result][x]
        return result

    def inverse(self, x: int) -> int:
        return self.table[x].index(self.identity)

    def is_abelian(self) -> bool:
        return all(
            self.table[x][y] == self.table[y][x]
            for x in range(self.order)
            for y in range(x + 1, self.order)
        )

    def center(self) -> FrozenSet[int]:
        return frozenset(
            x for x in range(self.order)
            if all(self.table[x][y] == self.table[y][x] for y in range(self.order))
        )

    def check_element(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise ParameterError(f"element index {x} out of range for {self.name}")


@dataclass(frozen=True)
class CyclicSubgroup:
    """循环子群 <generator>"""
    generator: int
    members: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def mask(self) -> int:
        bits = 0
        for x in self.members:
            bits |= 1 << x
        return bits

    def __contains__(self, x: int) -> bool:
        return x in self.members


def validate_family_parameter(family: GroupFamily, n: int) -> int:
    """检查群族参数范围"""
    minimum = FAMILY_MINIMUM.get(family)
    if minimum is None:
        raise ParameterError(f"family {family.value} has no integer parameter")
    if isinstance(n, bool) or not isinstance(n, int):
        raise ParameterError(f"{family.value}: parameter must be an integer, got {n!r}")
    if n < minimum:
        raise ParameterError(f"{family.value}: parameter n={n} must be >= {minimum}")
    return n


def _word(i: int, with_b: bool) -> str:
    if i == 0:
        return "b" if with_b else "e"
    base = "a" if i == 1 else f"a^{i}"
    return base + ("b" if with_b else "")


def _metacyclic_group(m: int, twist: int, b_square: int,
                      family: GroupFamily, parameter: int) -> FiniteGroup:
    """
    构造 <a, b> 型群, 元素顺序为 a^0..a^{m-1}, a^0b..a^{m-1}b

    (a^i b^s)(a^j b^t) = a^{i + twist^s * j + s*t*b_square} b^{s xor t}
    """
    order = 2 * m
    rows = []
    for x in range(order):
        i, s = x % m, x // m
        row = []
        for y in range(order):
            j, t = y % m, y // m
            exponent = i + (twist * j if s else j) + (b_square if s and t else 0)
            row.append(exponent % m + m * (s ^ t))
        rows.append(tuple(row))
    labels = tuple(_word(x % m, x >= m) for x in range(order))
    return FiniteGroup(
        order=order,
        table=tuple(rows),
        identity=0,
        labels=labels,
        family=family,
        parameter=parameter,
    )


def make_semidihedral(n: int) -> FiniteGroup:
    """SD_{8n} = <a, b : a^{4n} = b^2 = e, ba = a^{2n-1}b>"""
    validate_family_parameter(GroupFamily.SEMIDIHEDRAL, n)
    return _metacyclic_group(4 * n, 2 * n - 1, 0, GroupFamily.SEMIDIHEDRAL, n)


def make_generalized_quaternion(n: int) -> FiniteGroup:
    """Q_{4n} = <a, b : a^{2n} = e, b^2 = a^n, bab^{-1} = a^{-1}>"""
    validate_family_parameter(GroupFamily.QUATERNION, n)
    return _metacyclic_group(2 * n, -1, n, GroupFamily.QUATERNION, n)


def make_dihedral(n: int) -> FiniteGroup:
    """D_{2n} = <a, b : a^n = b^2 = e, bab = a^{-1}>"""
    validate_family_parameter(GroupFamily.DIHEDRAL, n)
    return _metacyclic_group(n, -1, 0, GroupFamily.DIHEDRAL, n)


def build_family_group(family: GroupFamily, n: int) -> FiniteGroup:
    builders = {
        GroupFamily.SEMIDIHEDRAL: make_semidihedral,
        GroupFamily.QUATERNION: make_generalized_quaternion,
        GroupFamily.DIHEDRAL: make_dihedral,
    }
    if family not in builders:
        raise ParameterError(f"no parameterised constructor for family {family.value}")
    return builders[family](n)


def validate_cayley_table(rows: Sequence[Sequence[int]],
                          labels: Optional[Sequence[str]] = None) -> FiniteGroup:
    """校验乘法表 (拉丁方、单位元、逆元、结合律) 并构造自定义群"""
    table = np.asarray(rows, dtype=np.int64)
    m = table.shape[0]
    if table.ndim != 2 or table.shape != (m, m):
        raise MalformedTableError(f"table must be square, got shape {table.shape}")
    if table.min() < 0 or table.max() >= m:
        raise MalformedTableError(f"entries must lie in 0..{m - 1}")

    expected = np.arange(m)
    for axis_name, matrix in (("row", table), ("column", table.T)):
        is_permutation = (np.sort(matrix, axis=1) == expected).all(axis=1)
        if not is_permutation.all():
            index = int(np.argmin(is_permutation))
            values, counts = np.unique(matrix[index], return_counts=True)
            raise LatinSquareError(axis_name, index, int(values[counts > 1][0]))

    bad = np.flatnonzero((table[0] != expected) | (table[:, 0] != expected))
    if bad.size:
        raise IdentityError(int(bad[0]))

    right_inverse = np.argmax(table == 0, axis=1)
    two_sided = table[right_inverse, expected] == 0
    if not two_sided.all():
        raise InverseError(int(np.argmin(two_sided)))

    # left[x, y, z] = (xy)z, right[x, y, z] = x(yz)
    left = table[table]
    right = table[:, table]
    mismatch = np.argwhere(left != right)
    if mismatch.size:
        raise AssociativityError(tuple(int(v) for v in mismatch[0]))

    return FiniteGroup(
        order=m,
        table=tuple(tuple(int(v) for v in row) for row in table),
        identity=0,
        labels=tuple(labels) if labels else (),
        family=GroupFamily.CUSTOM,
    )


def load_cayley_table(text: str) -> FiniteGroup:
    """解析 Cayley 表文本: 第一行为阶 m, 之后 m 行每行 m 个从 0 开始的下标"""
    lines = [line.strip() for line in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise MalformedTableError("empty table text")

    try:
        m = int(lines[0])
    except ValueError:
        raise MalformedTableError(f"expected the group order, got {lines[0]!r}", line=1)
    if m < 1:
        raise MalformedTableError(f"group order must be positive, got {m}", line=1)
    if len(lines) < m + 1:
        raise MalformedTableError(f"expected {m} table rows, found {len(lines) - 1}")
    if len(lines) > m + 1:
        raise MalformedTableError("trailing garbage after the table", line=m + 2)

    rows: List[List[int]] = []
    for r in range(m):
        tokens = lines[r + 1].split()
        if len(tokens) != m:
            raise MalformedTableError(
                f"row {r} has {len(tokens)} entries, expected {m}", line=r + 2
            )
        try:
            values = [int(token) for token in tokens]
        except ValueError:
            raise MalformedTableError(f"row {r} contains a non-integer entry", line=r + 2)
        for value in values:
            if not 0 <= value < m:
                raise MalformedTableError(
                    f"row {r} entry {value} out of range 0..{m - 1}", line=r + 2
                )
        rows.append(values)

    group = validate_cayley_table(rows)
    logger.debug("loaded custom group of order %d", m)
    return group


def render_cayley_table(group: FiniteGroup) -> str:
    lines = [str(group.order)]
    lines.extend(" ".join(str(v) for v in row) for row in group.table)
    return "\n".join(lines) + "\n"


def element_order(group: FiniteGroup, x: int) -> int:
    """元素的阶: 最小的 k >= 1 使 x^k = e"""
    group.check_element(x)
    k, current = 1, x
    while current != group.identity:
        current = group.table[current][x]
        k += 1
    return k


def cyclic_subgroup(group: FiniteGroup, x: int) -> CyclicSubgroup:
    group.check_element(x)
    members = {group.identity}
    current = x
    while current != group.identity:
        members.add(current)
        current = group.table[current][x]
    return CyclicSubgroup(generator=x, members=tuple(sorted(members)))


def cyclic_subgroups(group: FiniteGroup) -> List[CyclicSubgroup]:
    """所有不同的循环子群, 生成元取最小下标"""
    by_members: Dict[Tuple[int, ...], CyclicSubgroup] = {}
    for x in range(group.order):
        subgroup = cyclic_subgroup(group, x)
        by_members.setdefault(subgroup.members, subgroup)
    return list(by_members.values())


def maximal_cyclic_subgroups(group: FiniteGroup) -> List[CyclicSubgroup]:
    """极大循环子群 (不被其他循环子群真包含)"""
    subgroups = cyclic_subgroups(group)
    member_sets = [frozenset(s.members) for s in subgroups]
    maximal = [
        subgroup for subgroup, members in zip(subgroups, member_sets)
        if not any(members < other for other in member_sets)
    ]
    maximal.sort(key=lambda s: (-s.order, s.members))
    return maximal


def sd_element_kind(n: int, x: int) -> SDElementKind:
    """按 SD_{8n} 的元素下标约定分类"""
    validate_family_parameter(GroupFamily.SEMIDIHEDRAL, n)
    m = 4 * n
    if not 0 <= x < 2 * m:
        raise ParameterError(f"element index {x} out of range for SD_{8 * n}")
    if x < m:
        if x == 0:
            return SDElementKind.IDENTITY
        return SDElementKind.CENTRAL if x == 2 * n else SDElementKind.ROTATION
    return SDElementKind.INVOLUTION if (x - m) % 2 == 0 else SDElementKind.ORDER_FOUR


def sd_partner(n: int, x: int) -> int:
    """a^{2i+1}b -> a^{2n+2i+1}b, 即同一个 4 阶循环子群中的另一个生成元"""
    if sd_element_kind(n, x) is not SDElementKind.ORDER_FOUR:
        raise ParameterError(f"element {x} is not of the form a^(2i+1)b")
    m = 4 * n
    return m + (x - m + 2 * n) % m
