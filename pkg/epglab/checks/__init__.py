"""
校验单元注册表
"""

from typing import Dict, Iterable, List, Optional, Type

from ..core.errors import UsageError
from ..core.group import GroupFamily
from .base_check import BaseCheck, CheckContext, CheckOutcome, CheckStatus, VerifyVerdict
from .distance_checks import (
    ClosureCheck,
    DetourCheck,
    DetourDegreeCheck,
    EccentricCheck,
    InteriorCheck,
    NeighborhoodCheck,
)
from .resolving_checks import DimensionCheck, ResolvingCheck
from .spectral_checks import DecompositionCheck, SpectrumCheck, TreesCheck

CHECKS: Dict[str, Type[BaseCheck]] = {
    cls.name: cls
    for cls in (
        NeighborhoodCheck,
        DetourCheck,
        DetourDegreeCheck,
        InteriorCheck,
        ClosureCheck,
        EccentricCheck,
        DimensionCheck,
        ResolvingCheck,
        SpectrumCheck,
        TreesCheck,
        DecompositionCheck,
    )
}


def select_checks(family: GroupFamily, names: Optional[Iterable[str]] = None) -> List[BaseCheck]:
    """names 为空表示该群族支持的全部校验; 按名字排序"""
    if not names:
        return [cls() for name, cls in sorted(CHECKS.items()) if family in cls.families]
    selected = []
    for name in sorted(set(names)):
        cls = CHECKS.get(name)
        if cls is None:
            raise UsageError(f"unknown check {name!r}; choose from {', '.join(sorted(CHECKS))}")
        if family not in cls.families:
            raise UsageError(f"check {name!r} has no closed form for family {family.value}")
        selected.append(cls())
    return selected


__all__ = [
    "BaseCheck", "CheckContext", "CheckOutcome", "CheckStatus", "VerifyVerdict",
    "CHECKS", "select_checks",
    "NeighborhoodCheck", "DetourCheck", "DetourDegreeCheck", "InteriorCheck", "ClosureCheck",
    "EccentricCheck", "DimensionCheck", "ResolvingCheck", "SpectrumCheck", "TreesCheck",
    "DecompositionCheck",
]
