"""
异常定义
"""

from typing import Optional, Tuple


class EpglabError(Exception):
    """epglab 所有错误的基类"""


class ParameterError(EpglabError, ValueError):
    """群族参数越界、顶点下标无效或群描述格式错误"""


class UsageError(EpglabError):
    """命令行参数组合无效"""


class TableValidationError(EpglabError, ValueError):
    """Cayley 表校验失败"""


class MalformedTableError(TableValidationError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class LatinSquareError(TableValidationError):
    def __init__(self, axis: str, index: int, value: int):
        self.axis = axis
        self.index = index
        self.value = value
        super().__init__(
            f"table is not a Latin square: {axis} {index} repeats element {value}"
        )


class IdentityError(TableValidationError):
    def __init__(self, row: int):
        self.row = row
        super().__init__(
            f"element 0 is not a two-sided identity (row/column {row} disagrees)"
        )


class InverseError(TableValidationError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class AssociativityError(TableValidationError):
    def __init__(self, triple: Tuple[int, int, int]):
        self.triple = triple
        x, y, z = triple
        super().__init__(f"associativity fails for triple ({x}, {y}, {z})")


class CapacityError(EpglabError):
    """精确搜索的规模超过配置的上限"""

    def __init__(self, what: str, size: int, cap: int, cap_name: str):
        self.what = what
        self.size = size
        self.cap = cap
        self.cap_name = cap_name
        super().__init__(f"{what}: size {size} exceeds {cap_name}={cap}")


class DisconnectedGraphError(EpglabError, ValueError):
    def __init__(self, operation: str):
        self.operation = operation
        super().__init__(f"{operation} requires a connected graph")


class ConsistencyError(EpglabError):
    """两种独立计算的结果不一致"""
