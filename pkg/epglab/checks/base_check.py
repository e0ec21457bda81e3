"""
校验单元基类 - 每个单元把闭式结果与暴力计算结果对比
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, FrozenSet, List, Optional
import asyncio
import logging
import threading
import time

from config.settings import Settings, settings as default_settings

from ..core.detour import DetourEngineFactory, all_pairs_detour
from ..core.errors import CapacityError, EpglabError
from ..core.graph import SimpleGraph, enhanced_power_graph
from ..core.group import FiniteGroup, GroupFamily
from ..core.metric import DistanceMatrix, all_pairs_geodesic
from ..core.polynomial import IntPolynomial
from ..core.spectra import SpectrumSummary, integer_spectrum, laplacian_charpoly


class CheckStatus(Enum):
    """校验状态"""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass
class VerifyVerdict:
    """一个校验单元的结论"""
    check: str
    status: CheckStatus
    expected: str = ""
    computed: str = ""
    reason: Optional[str] = None
    notes: List[str] = field(default_factory=list)
    mismatches: List[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "status": self.status.value,
            "expected": self.expected,
            "computed": self.computed,
            "reason": self.reason,
            "notes": self.notes,
            "mismatches": self.mismatches,
        }


@dataclass
class CheckOutcome:
    """process() 的返回值: 原始值用于比较, 文本用于展示"""
    expected: Any
    computed: Any = None
    expected_text: str = ""
    computed_text: str = ""
    mismatches: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    # 与印刷结论不一致或交叉校验未运行, 以 WARNING 记录
    warnings: List[str] = field(default_factory=list)
    # 非空时该校验记为 skipped
    skip_reason: Optional[str] = None


class CheckContext:
    """
    一次 verify 运行的共享上下文

    增强幂图、距离矩阵、特征多项式等昂贵中间量按需计算,
    每个键一把锁, 并发的校验单元不会重复计算
    """

    def __init__(self, group: FiniteGroup, config: Optional[Settings] = None,
                 oracle_only: bool = False):
        self.group = group
        self.config = config or default_settings
        self.oracle_only = oracle_only
        self._artifacts: Dict[str, Any] = {}
        self._locks: Dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    @property
    def graph(self) -> SimpleGraph:
        return self.artifact("graph", lambda: enhanced_power_graph(self.group))

    @property
    def family(self) -> GroupFamily:
        return self.group.family

    @property
    def n(self) -> Optional[int]:
        return self.group.parameter

    def artifact(self, key: str, factory: Callable[[], Any]) -> Any:
        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            if key not in self._artifacts:
                self._artifacts[key] = factory()
            return self._artifacts[key]

    def geodesic(self) -> DistanceMatrix:
        return self.artifact("geodesic", lambda: all_pairs_geodesic(self.graph))

    def detour(self) -> DistanceMatrix:
        return self.artifact(
            "detour",
            lambda: all_pairs_detour(
                self.graph,
                cap=self.config.detour_cap,
                engine=DetourEngineFactory.select(self.graph, self.config.detour_dp_limit),
                workers=self.config.threads,
            ),
        )

    def charpoly(self) -> IntPolynomial:
        return self.artifact(
            "charpoly", lambda: laplacian_charpoly(self.graph, cap=self.config.charpoly_cap)
        )

    def spectrum(self) -> SpectrumSummary:
        return self.artifact("spectrum", lambda: integer_spectrum(self.graph, charpoly=self.charpoly()))


class BaseCheck(ABC):
    """校验单元基类"""

    name = "abstract"
    description = ""
    families: FrozenSet[GroupFamily] = frozenset()

    def __init__(self):
        self.logger = logging.getLogger(f"Check.{self.name}")

    def supports(self, family: GroupFamily) -> bool:
        return family in self.families

    @abstractmethod
    def expected(self, context: CheckContext) -> Any:
        """闭式结果"""

    @abstractmethod
    def process(self, context: CheckContext) -> CheckOutcome:
        """暴力计算并与闭式结果对比 - 子类必须实现"""

    def render(self, value: Any) -> str:
        return str(value)

    def oracle(self, context: CheckContext) -> VerifyVerdict:
        """只输出闭式结果, 不做暴力计算"""
        return VerifyVerdict(
            check=self.name,
            status=CheckStatus.SKIPPED,
            expected=self.render(self.expected(context)),
            reason="oracle-only: brute force not run",
        )

    def evaluate(self, context: CheckContext) -> VerifyVerdict:
        """同步执行, CapacityError 记为 skipped, 其它 EpglabError 记为 fail"""
        started = time.perf_counter()
        try:
            if context.oracle_only:
                return self.oracle(context)
            outcome = self.process(context)
        except CapacityError as e:
            self.logger.info("skipped: %s", e)
            return VerifyVerdict(self.name, CheckStatus.SKIPPED, reason=f"capacity: {e}")
        except EpglabError as e:
            self.logger.error("Check %s failed: %s", self.name, e)
            return VerifyVerdict(self.name, CheckStatus.FAIL, reason=str(e))

        if outcome.skip_reason:
            return VerifyVerdict(
                self.name, CheckStatus.SKIPPED, reason=outcome.skip_reason,
                notes=outcome.warnings + outcome.notes,
            )

        failed = bool(outcome.mismatches) or outcome.expected != outcome.computed
        if failed and not outcome.mismatches:
            outcome.mismatches.append("expected and computed values differ")
        verdict = VerifyVerdict(
            check=self.name,
            status=CheckStatus.FAIL if failed else CheckStatus.PASS,
            expected=outcome.expected_text or self.render(outcome.expected),
            computed=outcome.computed_text or self.render(outcome.computed),
            notes=outcome.warnings + outcome.notes,
            mismatches=outcome.mismatches[:20],
            seconds=time.perf_counter() - started,
        )
        for note in outcome.warnings:
            self.logger.warning("%s: %s", self.name, note)
        for note in outcome.notes:
            self.logger.info("%s: %s", self.name, note)
        return verdict

    async def run(self, context: CheckContext,
                  semaphore: Optional[asyncio.Semaphore] = None) -> VerifyVerdict:
        """在线程中执行, semaphore 限制并发"""
        if semaphore is None:
            return await asyncio.to_thread(self.evaluate, context)
        async with semaphore:
            return await asyncio.to_thread(self.evaluate, context)
