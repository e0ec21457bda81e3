"""
整系数多项式 (任意精度), 系数按升幂排列
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple


def _normalize(coefficients: Iterable[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coefficients]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class IntPolynomial:
    """coefficients[k] 是 x^k 的系数; 零多项式为空元组"""
    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _normalize(self.coefficients))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (c,))

    @classmethod
    def from_roots(cls, roots: Mapping[int, int]) -> "IntPolynomial":
        """∏ (x - λ)^m, 按特征值升序相乘"""
        result = cls.constant(1)
        for value in sorted(roots):
            factor = cls((-value, 1))
            for _ in range(roots[value]):
                result = result * factor
        return result

    @property
    def degree(self) -> int:
        """零多项式的次数记为 -1"""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self.coefficient(k) + other.coefficient(k) for k in range(size))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return IntPolynomial(product)

    def __pow__(self, exponent: int) -> "IntPolynomial":
        result = IntPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, x: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def trailing_zeros(self) -> int:
        """x^k 因子的个数"""
        count = 0
        for c in self.coefficients:
            if c:
                break
            count += 1
        return count

    def shift_down(self, k: int) -> "IntPolynomial":
        """除以 x^k (调用方保证整除)"""
        return IntPolynomial(self.coefficients[k:])

    def synthetic_division(self, root: int) -> Tuple["IntPolynomial", int]:
        """除以 (x - root), 返回 (商, 余数)"""
        if self.degree < 1:
            return IntPolynomial(), self.coefficient(0)
        quotient: List[int] = []
        carry = 0
        for c in reversed(self.coefficients):
            carry = carry * root + c
            quotient.append(carry)
        remainder = quotient.pop()
        return IntPolynomial(reversed(quotient)), remainder

    def to_strings(self) -> List[str]:
        return [str(c) for c in self.coefficients]

    def render(self, variable: str = "x") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = variable if k == 1 else f"{variable}^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.render()


def roots_as_dict(pairs: Iterable[Tuple[int, int]]) -> Dict[int, int]:
    """合并重复的特征值"""
    merged: Dict[int, int] = {}
    for value, multiplicity in pairs:
        merged[value] = merged.get(value, 0) + multiplicity
    return merged
