import pytest

from src.engine import AlgebraParams
from src.errors import UnknownCase
from src.presets import (
    CASE_IDS,
    CUSTOM,
    all_presets,
    alternative_5v,
    case_order,
    custom_preset,
    preset,
    validate_preset,
)
from src.scalars import default_field, symbol


class TestCatalog:
    """The fifteen bindings"""

    def test_fifteen_cases(self):
        assert len(all_presets()) == 15
        assert [p.id for p in all_presets()] == list(CASE_IDS)

    def test_unknown_case(self):
        with pytest.raises(UnknownCase):
            preset("6")

    def test_free_symbols(self):
        assert preset("2ii").free_symbols == {"beta", "b"}
        assert preset("5ii").free_symbols == frozenset()
        assert preset("4").free_symbols == {"alpha", "a1", "b1", "a2", "b2", "a3", "b3"}

    def test_type_four_shares_unit(self):
        params = preset("4").params
        assert params.alpha == params.beta == params.gamma

    def test_relations_render(self):
        yz, zx, xy = preset("5ii").relations()
        assert xy.endswith("= z")
        assert yz.endswith("= 0")

    def test_case_order(self):
        assert case_order("1") == 0
        assert case_order("5v") == 14
        assert case_order("custom") == 15


class TestValidation:
    """Confluence and unit pattern checks"""

    @pytest.mark.parametrize("case", CASE_IDS)
    def test_every_preset_passes(self, case):
        report = validate_preset(preset(case))
        assert report.passed, report.failures
        assert report.obstruction == "0"

    def test_alternative_5v_binding(self):
        """zx - xz = x together with yz - zy = a z leaves an obstruction"""
        alternative = alternative_5v()
        assert alternative.id == "5v-code"
        report = validate_preset(alternative)
        assert not report.passed
        assert report.obstruction != "0"

    def test_broken_unit_pattern(self):
        K = default_field()
        params = AlgebraParams.build(K, alpha=2, nu=(0, 0, 1, 0))
        broken = preset("5ii").model_copy(update={"params": params})
        report = validate_preset(broken)
        assert not report.unit_pattern_ok
        assert not report.passed

    def test_budget_exhaustion_is_reported(self):
        report = validate_preset(preset("4"), budget=1)
        assert report.obstruction == "budget-exhausted"
        assert not report.passed

    def test_custom(self):
        K = default_field()
        params = AlgebraParams.build(K, beta=symbol(K, "beta"))
        custom = custom_preset(params)
        assert custom.id == CUSTOM
        assert custom.free_symbols == {"beta"}
