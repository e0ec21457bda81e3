"""
进程池并行 - 按输入顺序返回结果
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar
import logging

from config.settings import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: Optional[int]) -> int:
    """None 表示使用 EPGLAB_THREADS"""
    return max(1, workers if workers is not None else settings.threads)


def ordered_map(func: Callable[[T], R], items: Sequence[T],
                workers: Optional[int] = None) -> List[R]:
    """
    并行执行 func(item), 结果顺序与 items 一致

    func 必须是可 pickle 的模块级函数; 单进程时直接串行执行
    """
    count = resolve_workers(workers)
    if count == 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.debug("fan out %d items over %d processes", len(items), count)
    with ProcessPoolExecutor(max_workers=min(count, len(items))) as pool:
        return list(pool.map(func, items))


def split_range(total: int, parts: int) -> List[range]:
    """把 [0, total) 切成不相交的连续区间"""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    ranges = []
    start = 0
    for k in range(parts):
        end = start + step + (1 if k < extra else 0)
        ranges.append(range(start, end))
        start = end
    return ranges
