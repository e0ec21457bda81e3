"""
多项式、配置与并行工具
"""

import pytest
from pydantic import ValidationError

from config.settings import Settings
from epglab.core.polynomial import IntPolynomial, roots_as_dict
from epglab.core.workers import ordered_map, split_range


def square(x: int) -> int:
    return x * x


class TestIntPolynomial:
    def test_normalizes_high_zeros(self):
        assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
        assert IntPolynomial((0, 0)).is_zero()
        assert IntPolynomial().degree == -1

    def test_arithmetic(self):
        p = IntPolynomial((1, 1))
        assert p * p == IntPolynomial((1, 2, 1))
        assert p ** 3 == IntPolynomial((1, 3, 3, 1))
        assert (p - p).is_zero()
        assert p + IntPolynomial.monomial(2, 5) == IntPolynomial((1, 1, 5))

    def test_from_roots_and_division(self):
        poly = IntPolynomial.from_roots({2: 2, 0: 1})
        assert poly == IntPolynomial((0, 4, -4, 1))
        assert poly.trailing_zeros() == 1
        quotient, remainder = poly.shift_down(1).synthetic_division(2)
        assert quotient == IntPolynomial((-2, 1))
        assert remainder == 0
        assert IntPolynomial((1, 0, 1)).synthetic_division(1) == (IntPolynomial((1, 1)), 2)

    def test_render(self):
        assert str(IntPolynomial((0, -4, 0, 1))) == "x^3 - 4x"
        assert IntPolynomial((-1,)).render() == "-1"
        assert IntPolynomial().render() == "0"
        assert IntPolynomial((3, 1)).to_strings() == ["3", "1"]

    def test_big_coefficients_stay_exact(self):
        value = IntPolynomial((0, 1)) ** 3
        assert (value * IntPolynomial.constant(10 ** 30)).leading == 10 ** 30

    def test_roots_as_dict_merges(self):
        assert roots_as_dict([(4, 1), (2, 2), (4, 2)]) == {4: 3, 2: 2}


class TestSettings:
    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("EPGLAB_ENUM_CAP", "20")
        monkeypatch.setenv("EPGLAB_THREADS", "3")
        config = Settings()
        assert config.enum_cap == 20
        assert config.threads == 3

    def test_rejects_non_positive(self, monkeypatch):
        monkeypatch.setenv("EPGLAB_DETOUR_CAP", "0")
        with pytest.raises(ValidationError):
            Settings()

    def test_with_overrides_skips_none(self):
        base = Settings(enum_cap=12)
        changed = base.with_overrides(enum_cap=None, detour_cap=5)
        assert changed.enum_cap == 12
        assert changed.detour_cap == 5


class TestWorkers:
    def test_split_range(self):
        ranges = split_range(10, 3)
        assert [list(r) for r in ranges] == [[0, 1, 2, 3], [4, 5, 6], [7, 8, 9]]
        assert split_range(0, 4) == [range(0, 0)]
        assert len(split_range(2, 8)) == 2

    @pytest.mark.parametrize("workers", [1, 2])
    def test_ordered_map_keeps_order(self, workers):
        assert ordered_map(square, list(range(7)), workers) == [x * x for x in range(7)]
