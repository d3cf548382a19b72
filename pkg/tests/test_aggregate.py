import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.gtsf.aggregate import WeightVector, gtsfwaa, gtsfwga
from src.gtsf.core import GTSFValue, Params, is_valid_gtsfv
from src.gtsf.errors import InvalidWeights, LengthMismatch, ValidationFailure
from src.gtsf.operators import add, scalar_mul
from tests.conftest import gtsfvs, weight_vectors

T2 = Params(t=2)
A = GTSFValue.of(0.6, 0.5, 0.4, 0.3)
B = GTSFValue.of(0.5, 0.4, 0.3, 0.2)
HALVES = WeightVector((0.5, 0.5))


def _grades(v: GTSFValue):
    return (*v.center.grades(), v.radius)


def _powered(v: GTSFValue, t: int):
    """Grades raised to t, where the aggregation formulas are well conditioned."""
    return (*(g**t for g in v.center.grades()), v.radius)


@st.composite
def weighted_values(draw, max_size: int = 6):
    """(t, values, weights) with matching lengths."""
    t = draw(st.integers(1, 6))
    n = draw(st.integers(1, max_size))
    values = [draw(gtsfvs(t)) for _ in range(n)]
    return t, values, WeightVector(draw(weight_vectors(n)))


class TestWeightVector:
    """测试权重向量的校验。"""

    def test_uniform(self):
        assert WeightVector.uniform(4).weights == (0.25, 0.25, 0.25, 0.25)
        assert len(WeightVector.uniform(3)) == 3

    @pytest.mark.parametrize(
        "weights", [(), (0.5, 0.0, 0.5), (1.5, -0.5), (0.3, 0.3), (float("nan"), 1.0)]
    )
    def test_invalid_weights(self, weights):
        """测试空、非正或总和不为 1 的权重被拒绝。"""
        with pytest.raises(InvalidWeights):
            WeightVector(weights)

    def test_uniform_requires_positive_length(self):
        with pytest.raises(InvalidWeights):
            WeightVector.uniform(0)


class TestAggregationOperators:
    """测试加权平均 (WAA) 与加权几何 (WGA) 聚合。"""

    def test_weighted_average(self):
        result = gtsfwaa([A, B], HALVES, T2)
        assert _grades(result) == pytest.approx((0.55424, 0.44721, 0.34641, 0.24495), abs=1e-5)

    def test_weighted_geometric(self):
        result = gtsfwga([A, B], HALVES, T2)
        assert _grades(result) == pytest.approx((0.54772, 0.44721, 0.35454, 0.24495), abs=1e-5)

    def test_single_value_is_returned(self):
        """测试只有一个值、权重为 1 时结果就是该值。"""
        for op in (gtsfwaa, gtsfwga):
            assert _grades(op([A], WeightVector((1.0,)), T2)) == pytest.approx(
                _grades(A), abs=1e-12
            )

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            gtsfwaa([A, B], WeightVector.uniform(3), T2)

    def test_invalid_input_is_named(self):
        """测试非法输入值的错误路径指出其下标。"""
        outside = scalar_mul(0, A, T2)
        with pytest.raises(ValidationFailure) as exc_info:
            gtsfwga([A, outside], HALVES, T2)
        assert exc_info.value.path == "values[1]"

    def test_zero_radius_collapses(self):
        """测试任一输入半径为 0 时聚合半径为 0。"""
        flat = GTSFValue.of(0.5, 0.4, 0.3, 0.0)
        assert gtsfwaa([A, flat], HALVES, T2).radius == 0.0

    def test_dyadic_weights_match_operator_fold(self):
        """测试 WAA 等于按权重做数乘后再逐个 ⊕ 的结果。"""
        c = GTSFValue.of(0.3, 0.6, 0.5, 0.5)
        w = WeightVector((0.5, 0.25, 0.25))
        folded = add(
            add(scalar_mul(0.5, A, T2), scalar_mul(0.25, B, T2), T2),
            scalar_mul(0.25, c, T2),
            T2,
        )
        result = gtsfwaa([A, B, c], w, T2)
        assert result.center.grades() == pytest.approx(folded.center.grades(), abs=1e-9)

    @given(weighted_values())
    def test_closure_and_boundedness(self, case):
        """测试聚合结果合法，且各分量落在输入的最小值与最大值之间。"""
        t, values, w = case
        p = Params(t=t)
        for op in (gtsfwaa, gtsfwga):
            result = op(values, w, p)
            assert is_valid_gtsfv(result, p)
            for k, got in enumerate(_powered(result, t)):
                column = [_powered(v, t)[k] for v in values]
                assert min(column) - 1e-9 <= got <= max(column) + 1e-9

    @given(st.integers(1, 6).flatmap(lambda t: st.tuples(st.just(t), gtsfvs(t))), st.integers(1, 6))
    def test_idempotency(self, case, n):
        """测试 n 个相同值聚合后仍是该值。"""
        t, v = case
        p = Params(t=t)
        w = WeightVector.uniform(n)
        for op in (gtsfwaa, gtsfwga):
            assert _powered(op([v] * n, w, p), t) == pytest.approx(_powered(v, t), abs=1e-9)

    @given(weighted_values())
    def test_geometric_is_dual_of_average(self, case):
        """测试 WGA 等于 φ↔ψ 交换后做 WAA 再交换回来。"""
        t, values, w = case
        p = Params(t=t)
        swapped = [v.swapped() for v in values]
        assert gtsfwga(values, w, p) == gtsfwaa(swapped, w, p).swapped()

    @pytest.mark.parametrize("component", range(4))
    @given(weighted_values(), st.floats(0, 1))
    def test_monotone_in_each_component(self, component, case, shrink):
        """测试降低某个输入的 φ、χ、ψ 或 r 不会提高聚合结果的同一分量。"""
        t, values, w = case
        p = Params(t=t)
        grades = list(_grades(values[0]))
        grades[component] *= shrink
        smaller = [GTSFValue.of(*grades), *values[1:]]
        for op in (gtsfwaa, gtsfwga):
            lowered, original = _grades(op(smaller, w, p)), _grades(op(values, w, p))
            assert lowered[component] <= original[component] + 1e-9
