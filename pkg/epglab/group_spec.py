"""
群描述字符串解析: "sd:N" | "q:N" | "d:N" | "file:PATH"
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .core.errors import ParameterError
from .core.group import (
    FiniteGroup,
    GroupFamily,
    build_family_group,
    load_cayley_table,
    validate_family_parameter,
)


@dataclass(frozen=True)
class GroupSpec:
    family: GroupFamily
    parameter: Optional[int] = None
    path: Optional[Path] = None

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        head, sep, tail = text.strip().partition(":")
        if not sep or not tail:
            raise ParameterError(f"group spec must look like sd:N, q:N, d:N or file:PATH, got {text!r}")
        key = head.lower()
        if key == "file":
            path = Path(tail)
            if not path.is_file():
                raise ParameterError(f"group table file not readable: {tail}")
            return cls(GroupFamily.CUSTOM, path=path)
        try:
            family = GroupFamily(key)
        except ValueError:
            raise ParameterError(f"unknown group family {head!r}") from None
        if family == GroupFamily.CUSTOM:
            raise ParameterError("custom groups are given as file:PATH")
        try:
            n = int(tail)
        except ValueError:
            raise ParameterError(f"{head}: parameter must be an integer, got {tail!r}") from None
        validate_family_parameter(family, n)
        return cls(family, parameter=n)

    def build(self) -> FiniteGroup:
        if self.family == GroupFamily.CUSTOM:
            return load_cayley_table(self.path.read_text(encoding="utf-8"))
        return build_family_group(self.family, self.parameter)

    def __str__(self) -> str:
        if self.family == GroupFamily.CUSTOM:
            return f"file:{self.path}"
        return f"{self.family.value}:{self.parameter}"
