"""
可解析集校验: 度量维数与可解析多项式
"""

from typing import Any, Dict, List

from ..core.resolving import (
    is_resolving,
    metric_dimension,
    resolving_counts,
    sd_metric_basis_witness,
    sd_resolving_coverage,
    sd_resolving_polynomial_closed_form,
    twin_classes,
    twin_lower_bound,
)
from .base_check import BaseCheck, CheckContext, CheckOutcome
from .distance_checks import SD_ONLY


class DimensionCheck(BaseCheck):
    """dim = 7n - 4, 显式给出的集合可解析, 孪生下界取等"""

    name = "dimension"
    description = "metric dimension, explicit basis and twin lower bound"
    families = SD_ONLY

    def expected(self, context: CheckContext) -> Dict[str, Any]:
        n = context.n
        return {"dim": 7 * n - 4, "twin_lower_bound": 7 * n - 4, "witness_resolving": True}

    def process(self, context: CheckContext) -> CheckOutcome:
        g = context.graph
        dist = context.geodesic()
        dim, witness = metric_dimension(g, dist=dist, budget=context.config.dimension_budget)
        basis = sd_metric_basis_witness(context.n)
        computed = {
            "dim": dim,
            "twin_lower_bound": twin_lower_bound(twin_classes(g)),
            "witness_resolving": len(basis) == dim and is_resolving(g, basis, dist),
        }
        notes = [f"search witness: {[g.vlabels[v] for v in witness]}"]
        return CheckOutcome(self.expected(context), computed, notes=notes)


class ResolvingCheck(BaseCheck):
    """穷举全部 2^V 个子集, 与分段公式逐系数对比"""

    name = "resolving"
    description = "resolving polynomial by exhaustive enumeration"
    families = SD_ONLY

    def expected(self, context: CheckContext) -> List[int]:
        return list(sd_resolving_polynomial_closed_form(context.n).coefficients)

    def render(self, value: Any) -> str:
        return "r = " + ", ".join(f"{i}:{c}" for i, c in enumerate(value) if c)

    def process(self, context: CheckContext) -> CheckOutcome:
        g = context.graph
        report = resolving_counts(
            g,
            cap=context.config.enum_cap,
            prune_twins=False,
            dist=context.geodesic(),
            workers=context.config.threads,
        )
        expected = self.expected(context)
        computed = list(report.polynomial.coefficients)
        size = max(len(expected), len(computed))
        mismatches = [
            f"r_{i}: formula {expected[i] if i < len(expected) else 0}, "
            f"enumeration {computed[i] if i < len(computed) else 0}"
            for i in range(size)
            if (expected[i] if i < len(expected) else 0) != (computed[i] if i < len(computed) else 0)
        ]
        warnings = sd_resolving_coverage(context.n).diagnostics()
        notes = [f"{report.tested} subsets tested, total resolving sets {report.total}"]
        return CheckOutcome(expected, computed, mismatches=mismatches, notes=notes, warnings=warnings)
