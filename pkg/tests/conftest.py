"""
共享的测试夹具
"""

from pathlib import Path

import pytest

from epglab.core.graph import enhanced_power_graph
from epglab.core.group import make_dihedral, make_generalized_quaternion, make_semidihedral
from epglab.core.metric import all_pairs_geodesic

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def sd16():
    return make_semidihedral(2)


@pytest.fixture(scope="session")
def sd16_graph(sd16):
    return enhanced_power_graph(sd16)


@pytest.fixture(scope="session")
def sd16_geodesic(sd16_graph):
    return all_pairs_geodesic(sd16_graph)


@pytest.fixture(scope="session")
def q8():
    return make_generalized_quaternion(2)


@pytest.fixture(scope="session")
def d6():
    return make_dihedral(3)


@pytest.fixture
def table_file(tmp_path):
    """把文本写进临时文件, 返回路径"""

    def write(text: str, name: str = "table.txt") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
