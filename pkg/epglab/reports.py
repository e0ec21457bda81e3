"""
报告输出 - JSON (pydantic 模型, 键排序) / CSV (pandas) / DOT
"""

from typing import Dict, List, Optional, Sequence, Tuple
import json

from pydantic import BaseModel

from config.settings import Settings, settings as default_settings

from .checks.base_check import VerifyVerdict
from .core.detour import DetourEngineFactory, all_pairs_detour, detour_profile
from .core.errors import UsageError
from .core.graph import enhanced_power_graph
from .core.group import FiniteGroup
from .core.metric import (
    all_pairs_geodesic,
    boundary_interior,
    center_vertices,
    distance_degree_sequence,
    eccentric_vertices,
    eccentricities,
    is_closed,
)
from .core.resolving import resolving_counts
from .core.spectra import integer_spectrum, laplacian_charpoly, spanning_tree_count

REPORT_FORMATS: Dict[str, Tuple[str, ...]] = {
    "graph": ("json", "dot"),
    "distant": ("json", "csv"),
    "detour": ("json", "csv"),
    "resolving": ("json",),
    "spectrum": ("json",),
}


# 响应模型
class GraphReport(BaseModel):
    group: str
    order: int
    edge_count: int
    labels: List[str]
    adjacency: List[List[int]]


class DistantReport(BaseModel):
    group: str
    eccentricities: List[int]
    radius: int
    diameter: int
    center: List[int]
    eccentric: List[int]
    boundary: List[int]
    interior: List[int]
    complete: List[int]
    closed: bool
    dds: List[List[int]]


class DetourVertex(BaseModel):
    label: str
    eccentricity: int
    degree: int
    dds: List[int]


class DetourReport(BaseModel):
    group: str
    radius: int
    diameter: int
    degree_sequence: List[int]
    average_degree: str
    vertices: List[DetourVertex]


class TwinClassModel(BaseModel):
    members: List[int]
    kind: str


class ResolvingReportModel(BaseModel):
    group: str
    dim: int
    r: List[Tuple[int, str]]
    polynomial: List[str]
    twin_classes: List[TwinClassModel]


class SpectrumReport(BaseModel):
    group: str
    charpoly: List[str]
    spectrum: List[Tuple[int, int]]
    residual: List[str]
    trees: str


class VerdictModel(BaseModel):
    check: str
    status: str
    expected: str
    computed: str
    reason: Optional[str] = None
    notes: List[str] = []
    mismatches: List[str] = []


class VerifyReport(BaseModel):
    group: str
    verdicts: List[VerdictModel]


def dump_json(model: BaseModel) -> str:
    return json.dumps(model.model_dump(), sort_keys=True, indent=2) + "\n"


def verify_report(group: FiniteGroup, verdicts: Sequence[VerifyVerdict]) -> str:
    return dump_json(VerifyReport(group=group.name, verdicts=[VerdictModel(**v.to_dict()) for v in verdicts]))


def render_report(group: FiniteGroup, what: str, fmt: str,
                  config: Optional[Settings] = None) -> str:
    """生成确定性的报告文本; 报告类型与格式不匹配时抛 UsageError"""
    config = config or default_settings
    formats = REPORT_FORMATS.get(what)
    if formats is None:
        raise UsageError(f"unknown report {what!r}; choose from {', '.join(sorted(REPORT_FORMATS))}")
    if fmt not in formats:
        raise UsageError(f"report {what!r} supports formats {', '.join(formats)}, not {fmt!r}")

    g = enhanced_power_graph(group)
    if what == "graph":
        if fmt == "dot":
            return g.to_dot()
        data = g.to_adjacency_dict()
        return dump_json(GraphReport(group=group.name, order=g.vcount, edge_count=g.edge_count, **data))

    if what == "distant":
        dist = all_pairs_geodesic(g)
        if fmt == "csv":
            return dist.to_csv()
        ecc = eccentricities(dist)
        boundary = boundary_interior(g, dist)
        return dump_json(DistantReport(
            group=group.name,
            eccentricities=ecc,
            radius=min(ecc),
            diameter=max(ecc),
            center=center_vertices(dist),
            eccentric=eccentric_vertices(dist),
            boundary=sorted(boundary.boundary),
            interior=sorted(boundary.interior_vertices),
            complete=sorted(boundary.complete_vertices),
            closed=is_closed(g),
            dds=[distance_degree_sequence(dist, v) for v in range(g.vcount)],
        ))

    if what == "detour":
        engine = DetourEngineFactory.select(g, config.detour_dp_limit)
        dist = all_pairs_detour(g, cap=config.detour_cap, engine=engine, workers=config.threads)
        if fmt == "csv":
            return dist.to_csv()
        profile = detour_profile(g, dist=dist).to_dict()
        return dump_json(DetourReport(group=group.name, **profile))

    if what == "resolving":
        report = resolving_counts(g, cap=config.enum_cap, workers=config.threads).to_dict()
        return dump_json(ResolvingReportModel(group=group.name, **report))

    charpoly = laplacian_charpoly(g, cap=config.charpoly_cap)
    spectrum = integer_spectrum(g, charpoly=charpoly)
    trees = spanning_tree_count(g, spectrum=spectrum)
    return dump_json(SpectrumReport(
        group=group.name,
        charpoly=charpoly.to_strings(),
        trees=str(trees),
        **spectrum.to_dict(),
    ))
