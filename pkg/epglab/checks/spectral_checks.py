"""
谱与结构校验: Laplacian 谱、生成树数、join 分解
"""

from typing import Any, Dict, List, Optional

from ..core.errors import CapacityError
from ..core.graph import (
    SimpleGraph,
    dihedral_decomposition,
    is_isomorphic,
    power_graph,
    quaternion_decomposition,
    quaternion_decomposition_as_printed,
    semidihedral_decomposition,
)
from ..core.group import GroupFamily
from ..core.spectra import (
    SpectrumSummary,
    closed_form_charpoly,
    closed_form_spanning_trees,
    closed_form_spectrum,
    spanning_tree_count,
)
from .base_check import BaseCheck, CheckContext, CheckOutcome
from .distance_checks import FAMILIES

ALL_FAMILIES = FAMILIES | {GroupFamily.CUSTOM}


def render_spectrum(pairs: List[List[int]]) -> str:
    return "{" + ", ".join(f"{value}:{mult}" for value, mult in pairs) + "}"


class SpectrumCheck(BaseCheck):
    """
    SD/Q/D: 特征多项式与闭式分解逐系数相等;
    自定义群: 只做迹恒等式 Σλ·m = 2|E| 与次数校验
    """

    name = "spectrum"
    description = "Laplacian characteristic polynomial and integer spectrum"
    families = ALL_FAMILIES

    def expected(self, context: CheckContext) -> Any:
        if context.family == GroupFamily.CUSTOM:
            g = context.graph
            return {"trace": 2 * g.edge_count, "degree": g.vcount}
        return closed_form_spectrum(context.family, context.n).to_dict()["spectrum"]

    def render(self, value: Any) -> str:
        if isinstance(value, dict):
            return f"trace {value['trace']}, degree {value['degree']}"
        return render_spectrum(value)

    def process(self, context: CheckContext) -> CheckOutcome:
        g = context.graph
        spectrum = context.spectrum()
        mismatches = []
        if spectrum.trace() != 2 * g.edge_count:
            mismatches.append(f"trace identity: eigenvalue sum {spectrum.trace()} != 2|E| = {2 * g.edge_count}")
        notes = []
        warnings = []
        if not spectrum.is_fully_factored:
            warnings.append(f"residual factor of degree {spectrum.residual.degree}: {spectrum.residual}")

        if context.family == GroupFamily.CUSTOM:
            computed = {"trace": spectrum.trace(), "degree": spectrum.degree}
            notes.append(f"spectrum {render_spectrum(spectrum.to_dict()['spectrum'])}")
            return CheckOutcome(
                self.expected(context), computed, mismatches=mismatches, notes=notes, warnings=warnings
            )

        charpoly = context.charpoly()
        if charpoly != closed_form_charpoly(context.family, context.n):
            mismatches.append(f"characteristic polynomial differs from the factored form: {charpoly}")
        return CheckOutcome(
            self.expected(context),
            spectrum.to_dict()["spectrum"],
            mismatches=mismatches,
            warnings=warnings,
        )


class TreesCheck(BaseCheck):
    """Kirchhoff 行列式与闭式 / 特征值乘积"""

    name = "trees"
    description = "spanning tree count"
    families = ALL_FAMILIES

    def expected(self, context: CheckContext) -> Optional[int]:
        if context.family == GroupFamily.CUSTOM:
            return self._eigenvalue_count(context.spectrum(), context.graph.vcount)
        return closed_form_spanning_trees(context.family, context.n)

    @staticmethod
    def _eigenvalue_count(spectrum: SpectrumSummary, vcount: int) -> Optional[int]:
        if not spectrum.is_fully_factored:
            return None
        product = 1
        for value, mult in spectrum.roots:
            if value:
                product *= value ** mult
        return product // vcount

    def process(self, context: CheckContext) -> CheckOutcome:
        g = context.graph
        warnings = []
        try:
            spectrum: Optional[SpectrumSummary] = context.spectrum()
        except CapacityError as e:
            spectrum = None
            warnings.append(f"eigenvalue cross-check not run ({e})")
        if context.family == GroupFamily.CUSTOM and (spectrum is None or not spectrum.is_fully_factored):
            return CheckOutcome(None, skip_reason="no integer spectrum to compare against", warnings=warnings)
        computed = spanning_tree_count(g, spectrum=spectrum)
        return CheckOutcome(self.expected(context), computed, warnings=warnings)


def decomposition_formula(family: GroupFamily, n: int) -> str:
    if family == GroupFamily.SEMIDIHEDRAL:
        return f"K_1 ∨ (K̄_{2 * n} ∪ (K_1 ∨ (K_{4 * n - 2} ∪ {n}K_2)))"
    if family == GroupFamily.QUATERNION:
        return f"K_2 ∨ (K_{2 * n - 2} ∪ {n}K_2)"
    return f"K_1 ∨ (K_{n - 1} ∪ K̄_{n})"


def decomposition_graph(family: GroupFamily, n: int) -> SimpleGraph:
    builders = {
        GroupFamily.SEMIDIHEDRAL: semidihedral_decomposition,
        GroupFamily.QUATERNION: quaternion_decomposition,
        GroupFamily.DIHEDRAL: dihedral_decomposition,
    }
    return builders[family](n)


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


class DecompositionCheck(BaseCheck):
    """增强幂图与 join/不交并分解同构; Q_{4n} 在 n = 2^k 时幂图与增强幂图相同"""

    name = "decomposition"
    description = "join decomposition isomorphism"
    families = FAMILIES

    def expected(self, context: CheckContext) -> Dict[str, Any]:
        value: Dict[str, Any] = {"formula": decomposition_formula(context.family, context.n), "isomorphic": True}
        if context.family == GroupFamily.QUATERNION and is_power_of_two(context.n):
            value["power_graph_equal"] = True
        return value

    def render(self, value: Any) -> str:
        return ", ".join(f"{k}={v}" for k, v in sorted(value.items()))

    def process(self, context: CheckContext) -> CheckOutcome:
        g = context.graph
        cap = context.config.iso_cap
        if g.vcount > cap:
            raise CapacityError("isomorphism search", g.vcount, cap, "iso_cap")
        n = context.n
        target = decomposition_graph(context.family, n)
        mapping = is_isomorphic(g, target)
        computed: Dict[str, Any] = {
            "formula": decomposition_formula(context.family, n),
            "isomorphic": mapping is not None,
        }
        notes = []
        warnings = []
        if context.family == GroupFamily.QUATERNION:
            printed = quaternion_decomposition_as_printed(n)
            warnings.append(
                f"printed form K_2 ∨ (K_{n - 2} ∪ {n}K_2) has {printed.vcount} vertices, "
                f"the group has {g.vcount}; checked against K_{2 * n - 2} instead"
            )
            pg = power_graph(context.group)
            if is_power_of_two(n):
                computed["power_graph_equal"] = pg == g
            else:
                notes.append(f"power graph has {g.edge_count - pg.edge_count} fewer edges (n is not a power of 2)")
        return CheckOutcome(self.expected(context), computed, notes=notes, warnings=warnings)
