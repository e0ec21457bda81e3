"""
谱模块 - Laplacian 特征多项式、整数特征值、生成树计数 (全部精确整数运算)
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple
import logging

import numpy as np

from config.settings import settings

from .errors import CapacityError, ConsistencyError, ParameterError
from .graph import SimpleGraph, iter_bits
from .group import GroupFamily, validate_family_parameter
from .polynomial import IntPolynomial, roots_as_dict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectrumSummary:
    """整数特征值 (升序, 带重数) 加上未分解的剩余因子"""
    roots: Tuple[Tuple[int, int], ...]
    residual: IntPolynomial = IntPolynomial((1,))

    @classmethod
    def from_mapping(cls, roots: Dict[int, int],
                     residual: Optional[IntPolynomial] = None) -> "SpectrumSummary":
        kept = tuple(sorted((value, mult) for value, mult in roots.items() if mult > 0))
        return cls(kept, residual if residual is not None else IntPolynomial((1,)))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.roots) + max(self.residual.degree, 0)

    @property
    def is_fully_factored(self) -> bool:
        return self.residual.degree == 0

    def as_dict(self) -> Dict[int, int]:
        return dict(self.roots)

    def multiplicity(self, value: int) -> int:
        return self.as_dict().get(value, 0)

    def trace(self) -> int:
        """特征值之和, 剩余因子的根之和由 Vieta 公式给出"""
        total = sum(value * mult for value, mult in self.roots)
        if self.residual.degree > 0:
            total -= self.residual.coefficient(self.residual.degree - 1)
        return total

    def to_polynomial(self) -> IntPolynomial:
        return IntPolynomial.from_roots(self.as_dict()) * self.residual

    def to_dict(self) -> Dict[str, object]:
        return {
            "spectrum": [[value, mult] for value, mult in self.roots],
            "residual": self.residual.to_strings(),
        }


# ---------------------------------------------------------------------------
# 矩阵运算
# ---------------------------------------------------------------------------

def laplacian_matrix(g: SimpleGraph) -> np.ndarray:
    """L = D - A, dtype=object 以保持任意精度整数"""
    matrix = np.zeros((g.vcount, g.vcount), dtype=object)
    for v in range(g.vcount):
        matrix[v, v] = g.degree(v)
        for w in iter_bits(g.adjacency[v]):
            matrix[v, w] = -1
    return matrix


def faddeev_leverrier(matrix: np.ndarray) -> IntPolynomial:
    """
    det(xI - A) 的系数

    M_1 = I; c_{n-k} = -tr(A M_k) / k; M_{k+1} = A M_k + c_{n-k} I
    整数矩阵时除法都是整除
    """
    n = matrix.shape[0]
    identity = np.identity(n, dtype=int).astype(object)
    coefficients = [0] * (n + 1)
    coefficients[n] = 1
    current = identity
    for k in range(1, n + 1):
        product = matrix.dot(current)
        trace = int(np.trace(product))
        quotient, remainder = divmod(-trace, k)
        if remainder:
            raise ConsistencyError(f"Faddeev-LeVerrier step {k}: trace {trace} not divisible")
        coefficients[n - k] = quotient
        current = product + quotient * identity
    return IntPolynomial(coefficients)


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """无分数的 Bareiss 消元, 全程整数"""
    m = [list(map(int, row)) for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            # 找非零主元, 找不到则行列式为 0
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) // previous
            m[i][k] = 0
        previous = pivot
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# 图的谱
# ---------------------------------------------------------------------------

def _check_cap(g: SimpleGraph, cap: Optional[int]) -> None:
    cap = cap if cap is not None else settings.charpoly_cap
    if g.vcount > cap:
        raise CapacityError("laplacian characteristic polynomial", g.vcount, cap, "charpoly_cap")


def laplacian_charpoly(g: SimpleGraph, cap: Optional[int] = None) -> IntPolynomial:
    _check_cap(g, cap)
    return faddeev_leverrier(laplacian_matrix(g))


def _divisors_up_to(value: int, bound: int) -> List[int]:
    value = abs(value)
    return [d for d in range(1, min(value, bound) + 1) if value % d == 0]


def integer_roots(poly: IntPolynomial, bound: int) -> Tuple[Dict[int, int], IntPolynomial]:
    """
    在 [0, bound] 中找整数根: 先去掉 x^k 因子, 再对常数项的因子逐个做综合除法

    返回 (根 -> 重数, 剩余多项式)
    """
    roots: Dict[int, int] = {}
    zeros = poly.trailing_zeros()
    if zeros:
        roots[0] = zeros
    rest = poly.shift_down(zeros)
    for candidate in _divisors_up_to(rest.coefficient(0), bound):
        while rest.degree > 0:
            quotient, remainder = rest.synthetic_division(candidate)
            if remainder:
                break
            roots[candidate] = roots.get(candidate, 0) + 1
            rest = quotient
    return roots, rest


def integer_spectrum(g: SimpleGraph, cap: Optional[int] = None,
                     charpoly: Optional[IntPolynomial] = None) -> SpectrumSummary:
    """Laplacian 特征值都在 [0, |V|] 内"""
    charpoly = charpoly or laplacian_charpoly(g, cap)
    roots, residual = integer_roots(charpoly, g.vcount)
    summary = SpectrumSummary.from_mapping(roots, residual)
    if summary.degree != g.vcount:
        raise ConsistencyError(f"spectrum degree {summary.degree} != vertex count {g.vcount}")
    if not summary.is_fully_factored:
        logger.info("spectrum has a residual factor of degree %d", residual.degree)
    return summary


def spanning_tree_count(g: SimpleGraph, spectrum: Optional[SpectrumSummary] = None) -> int:
    """
    Kirchhoff: 删去第 0 行第 0 列后的 Laplacian 行列式

    给出整数谱时与 (非零特征值之积) / |V| 交叉校验
    """
    if not g.is_connected():
        logger.warning("spanning tree count requested for a disconnected graph; returning 0")
        return 0
    minor = laplacian_matrix(g)[1:, 1:].tolist()
    count = bareiss_determinant(minor)
    if spectrum is not None and spectrum.is_fully_factored:
        product = 1
        for value, mult in spectrum.roots:
            if value:
                product *= value ** mult
        if product != count * g.vcount:
            raise ConsistencyError(
                f"Kirchhoff determinant {count} disagrees with eigenvalue product {product}/{g.vcount}"
            )
    return count


# ---------------------------------------------------------------------------
# 三个群族的闭式
# ---------------------------------------------------------------------------

def closed_form_spectrum(family: GroupFamily, n: int) -> SpectrumSummary:
    """重合的特征值合并 (如 Q_{4n} 在 2n = 4 时)"""
    validate_family_parameter(family, n)
    if family == GroupFamily.SEMIDIHEDRAL:
        pairs = [(0, 1), (1, 2 * n), (2, n), (4, n), (4 * n, 4 * n - 3), (6 * n, 1), (8 * n, 1)]
    elif family == GroupFamily.QUATERNION:
        pairs = [(0, 1), (2, n), (4, n), (2 * n, 2 * n - 3), (4 * n, 2)]
    elif family == GroupFamily.DIHEDRAL:
        pairs = [(0, 1), (1, n), (n, n - 2), (2 * n, 1)]
    else:
        raise ParameterError(f"no closed-form spectrum for family {family.value}")
    return SpectrumSummary.from_mapping(roots_as_dict(pairs))


def closed_form_charpoly(family: GroupFamily, n: int) -> IntPolynomial:
    return closed_form_spectrum(family, n).to_polynomial()


def closed_form_spanning_trees(family: GroupFamily, n: int) -> int:
    validate_family_parameter(family, n)
    if family == GroupFamily.SEMIDIHEDRAL:
        return 2 ** (11 * n - 5) * 3 * n ** (4 * n - 2)
    if family == GroupFamily.QUATERNION:
        return 2 ** (5 * n - 1) * n ** (2 * n - 2)
    if family == GroupFamily.DIHEDRAL:
        return n ** (n - 2)
    raise ParameterError(f"no closed-form spanning tree count for family {family.value}")
