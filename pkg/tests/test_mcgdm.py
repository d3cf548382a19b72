import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.documents.parser import parse_gtsf_sets, parse_problem
from src.gtsf.aggregate import WeightVector
from src.gtsf.core import GTSFValue, Params, TSFValue
from src.gtsf.errors import ConstraintViolated, DegenerateValue, ProblemValidationError
from src.gtsf.mcgdm import (
    DecisionProblem,
    GTSFDecisionMatrix,
    build_gtsf_matrix,
    cell_path,
    ideal_alternative,
    order_by_similarity,
    rank,
    solve,
    validate_problem,
)
from src.gtsf.metrics import IDEAL_VALUE
from tests.conftest import tsfvs

# Printed averaged decision matrix (centers only).
PRINTED_CENTERS = {
    "v1": [(0.65, 0.36, 0.51), (0.70, 0.36, 0.48), (0.70, 0.37, 0.51), (0.72, 0.42, 0.56), (0.79, 0.40, 0.55)],
    "v2": [(0.73, 0.39, 0.56), (0.66, 0.36, 0.63), (0.68, 0.38, 0.55), (0.71, 0.35, 0.53), (0.81, 0.39, 0.52)],
    "v3": [(0.90, 0.21, 0.44), (0.87, 0.31, 0.38), (0.84, 0.32, 0.46), (0.86, 0.32, 0.47), (0.86, 0.26, 0.42)],
    "v4": [(0.82, 0.41, 0.51), (0.75, 0.36, 0.59), (0.73, 0.39, 0.51), (0.74, 0.33, 0.54), (0.66, 0.43, 0.46)],
}

# Printed radii.
PRINTED_RADII = {
    "v1": [0.11, 0.10, 0.23, 0.15, 0.13],
    "v2": [0.14, 0.10, 0.08, 0.06, 0.15],
    "v3": [0.07, 0.09, 0.10, 0.09, 0.14],
    "v4": [0.13, 0.08, 0.07, 0.10, 0.20],
}

PRINTED_SIMILARITIES = {"v1": 0.5299, "v2": 0.4931, "v3": 0.5447, "v4": 0.5257}

CRITERIA = ("f1", "f2", "f3", "f4", "f5")

# The venue problem without center rounding.
EXACT = Params(t=3, avg_t=1)


@pytest.fixture
def venue_problem(fixture_repo) -> DecisionProblem:
    return parse_problem(fixture_repo.get_text("example4"))


def _single_expert_problem(rows, params=None) -> DecisionProblem:
    """One expert, alternatives a1.., criteria c1..; rows are lists of grade triples."""
    alternatives = tuple(f"a{i + 1}" for i in range(len(rows)))
    criteria = tuple(f"c{j + 1}" for j in range(len(rows[0])))
    evaluations = {
        ("e1", a, c): TSFValue(*rows[i][j])
        for i, a in enumerate(alternatives)
        for j, c in enumerate(criteria)
    }
    return DecisionProblem(("e1",), alternatives, criteria, evaluations, params or Params())


class TestDecisionProblem:
    """测试决策问题的结构校验。"""

    def test_fixture_shape(self, venue_problem):
        assert venue_problem.experts == ("e1", "e2", "e3")
        assert venue_problem.alternatives == ("v1", "v2", "v3", "v4")
        assert venue_problem.criteria == CRITERIA
        assert venue_problem.evaluations[("e3", "v2", "f2")] == TSFValue(0.68, 0.38, 0.57)
        assert len(venue_problem.family("v1", "f1")) == 3

    def test_missing_cell(self):
        """测试评价张量不完整时抛出 ValueError。"""
        with pytest.raises(ValueError):
            DecisionProblem(("e1",), ("a1", "a2"), ("c1",), {("e1", "a1", "c1"): TSFValue(0.1, 0.1, 0.1)})

    def test_undeclared_cell(self):
        evaluations = {
            ("e1", "a1", "c1"): TSFValue(0.1, 0.1, 0.1),
            ("e2", "a1", "c1"): TSFValue(0.1, 0.1, 0.1),
        }
        with pytest.raises(ValueError):
            DecisionProblem(("e1",), ("a1",), ("c1",), evaluations)

    @pytest.mark.parametrize("field", ["experts", "alternatives", "criteria"])
    def test_empty_labels(self, field):
        labels = {"experts": ("e1",), "alternatives": ("a1",), "criteria": ("c1",), field: ()}
        with pytest.raises(ValueError):
            DecisionProblem(**labels, evaluations={})

    def test_duplicate_labels(self):
        with pytest.raises(ValueError):
            DecisionProblem(("e1", "e1"), ("a1",), ("c1",), {})

    def test_criterion_weight_length(self):
        with pytest.raises(ValueError):
            DecisionProblem(
                ("e1",),
                ("a1",),
                ("c1",),
                {("e1", "a1", "c1"): TSFValue(0.5, 0.1, 0.1)},
                Params(),
                WeightVector((0.5, 0.5)),
            )

    def test_validation_names_the_cell(self):
        """测试非法评价的错误指出 (专家, 方案, 准则) 坐标。"""
        problem = _single_expert_problem([[(0.5, 0.1, 0.1), (0.9, 0.7, 0.6)]], Params(t=2))
        with pytest.raises(ProblemValidationError) as exc_info:
            validate_problem(problem)
        assert exc_info.value.cell == cell_path("e1", "a1", "c2")
        assert isinstance(exc_info.value.cause, ConstraintViolated)
        assert "evaluations[e1][a1][c2]" in str(exc_info.value)


class TestBuildMatrix:
    """测试由专家评价构造 G-TSF 决策矩阵。"""

    def test_averaged_centers(self, venue_problem):
        """测试不舍入时平均指数 1 下的中心点与公开矩阵相差不超过 0.01（(v2, f1) 的 χ 除外）。"""
        matrix = build_gtsf_matrix(venue_problem.with_params(EXACT))
        for alt, row in PRINTED_CENTERS.items():
            for c, printed in zip(CRITERIA, row):
                got = matrix[(alt, c)].center.grades()
                for k, (g, want) in enumerate(zip(got, printed)):
                    if (alt, c, k) == ("v2", "f1", 1):
                        continue
                    assert g == pytest.approx(want, abs=0.01), (alt, c, k)
        assert matrix[("v2", "f1")].chi == pytest.approx(0.3667, abs=1e-4)
        assert matrix[("v1", "f1")].center.grades() == pytest.approx((0.65, 0.36, 0.51667), abs=1e-5)

    def test_rounded_centers(self, venue_problem):
        """测试样例固定的两位小数舍入：中心点取舍入值，半径从舍入后的中心点量起。"""
        assert venue_problem.params.center_decimals == 2
        matrix = build_gtsf_matrix(venue_problem)
        assert matrix[("v1", "f1")].center == TSFValue(0.65, 0.36, 0.52)
        assert matrix[("v2", "f1")].chi == 0.37
        for a in venue_problem.alternatives:
            for c in CRITERIA:
                entry = matrix[(a, c)]
                assert entry.center.grades() == tuple(round(g, 2) for g in entry.center.grades())
                assert entry.normal

    def test_radii_with_cubic_exponent(self, venue_problem):
        """测试半径指数 3 下的半径与公开结果相差不超过 0.03（(v4, f1–f3) 除外）。"""
        problem = venue_problem.with_params(Params(t=3, avg_t=1, radius_t=3))
        matrix = build_gtsf_matrix(problem)
        assert matrix[("v1", "f1")].radius == pytest.approx(0.12228, abs=1e-4)
        assert matrix[("v1", "f4")].radius == pytest.approx(0.17891, abs=1e-4)
        for alt, radii in PRINTED_RADII.items():
            for c, printed in zip(CRITERIA, radii):
                if alt == "v4" and c in ("f1", "f2", "f3"):
                    continue
                assert matrix[(alt, c)].radius == pytest.approx(printed, abs=0.03), (alt, c)

    def test_single_expert_keeps_evaluation(self):
        """测试只有一位专家时每个单元格就是其评价、半径为 0。"""
        problem = _single_expert_problem([[(0.5, 0.2, 0.1), (0.4, 0.3, 0.2)]])
        matrix = build_gtsf_matrix(problem)
        assert matrix[("a1", "c1")] == GTSFValue.of(0.5, 0.2, 0.1, 0.0)
        assert matrix.row("a1").labels == ("c1", "c2")

    def test_invalid_cell_is_rejected(self, venue_problem):
        """测试 t=1 时原始评价不满足约束，构造矩阵前即被拒绝。"""
        with pytest.raises(ProblemValidationError) as exc_info:
            build_gtsf_matrix(venue_problem.with_params(Params(t=1)))
        assert exc_info.value.cell.startswith("evaluations[")

    def test_duplicated_panel_is_invariant(self, venue_problem):
        """测试整组专家重复一次不改变决策矩阵。"""
        experts = venue_problem.experts + tuple(f"{e}-copy" for e in venue_problem.experts)
        evaluations = dict(venue_problem.evaluations)
        for (e, a, c), v in venue_problem.evaluations.items():
            evaluations[(f"{e}-copy", a, c)] = v
        doubled = DecisionProblem(
            experts, venue_problem.alternatives, venue_problem.criteria, evaluations, venue_problem.params
        )
        original, repeated = build_gtsf_matrix(venue_problem), build_gtsf_matrix(doubled)
        for a in venue_problem.alternatives:
            for c in venue_problem.criteria:
                assert repeated[(a, c)].center.grades() == pytest.approx(
                    original[(a, c)].center.grades(), abs=1e-12
                )
                assert repeated[(a, c)].radius == pytest.approx(original[(a, c)].radius, abs=1e-12)


class TestRanking:
    """测试按与理想方案的相似度排序。"""

    def test_ideal_alternative(self):
        ideal = ideal_alternative(3)
        assert ideal.labels == ("f1", "f2", "f3")
        assert all(v == IDEAL_VALUE for v in ideal.values())
        assert ideal_alternative(2, ("speed", "cost")).labels == ("speed", "cost")
        with pytest.raises(ValueError):
            ideal_alternative(0)

    def test_printed_matrix_ranking(self, fixture_repo):
        """测试公开决策矩阵得到的排序为 v3 > v1 > v4 > v2。"""
        sets, _ = parse_gtsf_sets(fixture_repo.get_text("table6"))
        entries = {(a, c): sets[a][c] for a in sets for c in CRITERIA}
        matrix = GTSFDecisionMatrix(tuple(sets), CRITERIA, entries)
        report = rank(matrix, Params(t=3))
        assert report.order == ("v3", "v1", "v4", "v2")
        assert report.best == "v3"
        assert report.ties == ()
        for alt, value in PRINTED_SIMILARITIES.items():
            assert report.similarities[alt] == pytest.approx(value, abs=0.005)

    def test_solve_from_raw_evaluations(self, venue_problem):
        """测试从原始评价出发得到 v3 > v1 > v4 > v2，相似度与公开结果相差不超过 0.01。"""
        report = solve(venue_problem)
        assert report.order == ("v3", "v1", "v4", "v2")
        assert report.ties == ()
        for alt, value in PRINTED_SIMILARITIES.items():
            assert report.similarities[alt] == pytest.approx(value, abs=0.01)

    def test_exact_centers_swap_close_alternatives(self, venue_problem):
        """测试不舍入中心点时 v1 与 v4 相差不到 0.002 且次序互换。"""
        report = solve(venue_problem.with_params(EXACT))
        assert report.order == ("v3", "v4", "v1", "v2")
        assert abs(report.similarities["v1"] - report.similarities["v4"]) < 0.002

    def test_all_ideal_alternatives_tie(self):
        """测试所有方案都等于理想方案时相似度均为 1，保持输入顺序并报告并列。"""
        ideal = ideal_alternative(2)
        entries = {(a, c): ideal[c] for a in ("a1", "a2", "a3") for c in ideal.labels}
        matrix = GTSFDecisionMatrix(("a1", "a2", "a3"), ideal.labels, entries)
        report = rank(matrix, Params())
        assert report.order == ("a1", "a2", "a3")
        assert report.ties == (("a1", "a2", "a3"),)
        assert all(s == 1.0 for s in report.similarities.values())

    def test_chained_ties_form_one_group(self):
        """测试相邻差值都在容差内的方案并成一组，组内保持输入顺序。"""
        sims = {"a": 0.5, "b": 0.5 + 0.6e-9, "c": 0.5 + 1.2e-9, "d": 0.4}
        order, ties = order_by_similarity(("a", "b", "c", "d"), sims)
        assert order == ("a", "b", "c", "d")
        assert ties == (("a", "b", "c"),)

    @given(rnd=st.randoms())
    def test_tie_groups_do_not_depend_on_input_order(self, rnd):
        sims = {"a": 0.5, "b": 0.5 + 0.6e-9, "c": 0.5 + 1.2e-9, "d": 0.4, "e": 0.7}
        labels = list(sims)
        rnd.shuffle(labels)
        order, ties = order_by_similarity(tuple(labels), sims)
        assert order[0] == "e"
        assert order[-1] == "d"
        assert [set(g) for g in ties] == [{"a", "b", "c"}]
        assert ties[0] == tuple(x for x in labels if x in "abc")

    def test_dominating_alternative_wins(self):
        problem = _single_expert_problem([[(0.3, 0.5, 0.5)], [(0.9, 0.1, 0.1)]])
        report = solve(problem)
        assert report.order == ("a2", "a1")

    def test_criterion_weights_change_the_ranking(self):
        """测试准则权重会改变排序。"""
        rows = [[(0.9, 0.1, 0.1), (0.2, 0.6, 0.6)], [(0.2, 0.6, 0.6), (0.9, 0.1, 0.1)]]
        problem = _single_expert_problem(rows)
        entries_matrix = build_gtsf_matrix(problem)
        assert rank(entries_matrix, problem.params, WeightVector((0.8, 0.2))).best == "a1"
        assert rank(entries_matrix, problem.params, WeightVector((0.2, 0.8))).best == "a2"

    def test_degenerate_alternative_is_named(self):
        problem = _single_expert_problem([[(0.5, 0.2, 0.1)], [(0.0, 0.0, 0.0)]])
        with pytest.raises(DegenerateValue) as exc_info:
            solve(problem)
        assert exc_info.value.context == "alternative=a2"

    @given(rnd=st.randoms())
    def test_expert_order_does_not_matter(self, fixture_repo, rnd):
        """测试打乱专家顺序不改变相似度与排序。"""
        problem = parse_problem(fixture_repo.get_text("example4"))
        experts = list(problem.experts)
        rnd.shuffle(experts)
        shuffled = DecisionProblem(
            tuple(experts), problem.alternatives, problem.criteria, problem.evaluations, problem.params
        )
        original, permuted = solve(problem), solve(shuffled)
        assert permuted.order == original.order
        for alt in problem.alternatives:
            assert permuted.similarities[alt] == pytest.approx(original.similarities[alt], abs=1e-12)

    @given(st.lists(tsfvs(3, nonzero=True), min_size=2, max_size=5))
    def test_report_is_sorted(self, centers):
        rows = [[(c.phi, c.chi, c.psi)] for c in centers]
        report = solve(_single_expert_problem(rows))
        sims = [report.similarities[a] for a in report.order]
        assert all(x >= y - 1e-9 for x, y in zip(sims, sims[1:]))
        assert sorted(report.order) == sorted(report.similarities)
