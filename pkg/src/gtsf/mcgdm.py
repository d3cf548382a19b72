# -*- coding: utf-8 -*-
"""
G-TSF 多准则群决策流水线：

    专家 TSFV 评价 -> (逐单元格) 幂平均中心点 + 最大距离半径 -> G-TSF 决策矩阵
    -> 与理想方案 ⟨1, 0, 0; 1⟩ 的余弦相似度 -> 按相似度降序排序
"""

import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Optional, Sequence

from src.config import SIMILARITY_TIE_TOLERANCE
from src.gtsf.aggregate import WeightVector
from src.gtsf.construct import make_gtsfv
from src.gtsf.core import GTSFSet, GTSFValue, Params, TSFValue, validate_tsfv
from src.gtsf.errors import DegenerateValue, ProblemValidationError, ValidationFailure
from src.gtsf.metrics import IDEAL_VALUE, ideal_similarity

logger = logging.getLogger(__name__)

Cell = tuple[str, str, str]


def cell_path(expert: str, alternative: str, criterion: str) -> str:
    return f"evaluations[{expert}][{alternative}][{criterion}]"


def _check_labels(kind: str, labels: Sequence[str]) -> tuple[str, ...]:
    labels = tuple(labels)
    if not labels:
        raise ValueError(f"{kind} 列表不能为空")
    if len(set(labels)) != len(labels):
        raise ValueError(f"{kind} 列表中有重复标签: {list(labels)}")
    return labels


# ===================================================================================
# 数据类型
# ===================================================================================


@dataclass(frozen=True)
class DecisionProblem:
    """
    (专家, 方案, 准则) 三维的 TSFV 评价张量及其计算参数。

    构造时检查标签非空、不重复以及张量完整；评价值本身的约束校验
    在 `build_gtsf_matrix` 中进行，以便报告单元格坐标。
    """

    experts: tuple[str, ...]
    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    evaluations: Mapping[Cell, TSFValue]
    params: Params = field(default_factory=Params)
    criterion_weights: Optional[WeightVector] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "experts", _check_labels("experts", self.experts))
        object.__setattr__(
            self, "alternatives", _check_labels("alternatives", self.alternatives)
        )
        object.__setattr__(self, "criteria", _check_labels("criteria", self.criteria))
        object.__setattr__(self, "evaluations", MappingProxyType(dict(self.evaluations)))

        expected = {
            (e, a, c)
            for e in self.experts
            for a in self.alternatives
            for c in self.criteria
        }
        missing = expected - set(self.evaluations)
        if missing:
            e, a, c = sorted(missing)[0]
            raise ValueError(f"评价张量不完整，缺少 {cell_path(e, a, c)}（共 {len(missing)} 处）")
        extra = set(self.evaluations) - expected
        if extra:
            e, a, c = sorted(extra)[0]
            raise ValueError(f"评价张量包含未声明的单元格 {cell_path(e, a, c)}")
        if self.criterion_weights is not None and len(self.criterion_weights) != len(
            self.criteria
        ):
            raise ValueError(
                f"准则权重数量 {len(self.criterion_weights)} 与准则数 {len(self.criteria)} 不一致"
            )

    def family(self, alternative: str, criterion: str) -> list[TSFValue]:
        """某个 (方案, 准则) 单元格上、按专家顺序排列的评价族。"""
        return [self.evaluations[(e, alternative, criterion)] for e in self.experts]

    def with_params(self, params: Params) -> "DecisionProblem":
        return DecisionProblem(
            self.experts,
            self.alternatives,
            self.criteria,
            self.evaluations,
            params,
            self.criterion_weights,
        )


@dataclass(frozen=True)
class GTSFDecisionMatrix:
    """(方案, 准则) 索引的 G-TSF 决策矩阵。"""

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    entries: Mapping[tuple[str, str], GTSFValue]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))
        for a in self.alternatives:
            for c in self.criteria:
                if (a, c) not in self.entries:
                    raise ValueError(f"决策矩阵缺少单元格 ({a}, {c})")

    def __getitem__(self, key: tuple[str, str]) -> GTSFValue:
        return self.entries[key]

    def row(self, alternative: str) -> GTSFSet:
        """某个方案在所有准则上的 G-TSF 集合。"""
        return GTSFSet({c: self.entries[(alternative, c)] for c in self.criteria})


@dataclass(frozen=True)
class RankingReport:
    """各方案相似度、由优到劣的顺序，以及并列组。"""

    similarities: Mapping[str, float]
    order: tuple[str, ...]
    ties: tuple[tuple[str, ...], ...] = ()

    @property
    def best(self) -> str:
        return self.order[0]


# ===================================================================================
# 流水线
# ===================================================================================


def validate_problem(problem: DecisionProblem) -> None:
    """逐单元格校验评价值，失败时抛出带坐标的 ProblemValidationError。"""
    for (e, a, c), v in problem.evaluations.items():
        try:
            validate_tsfv(v, problem.params)
        except ValidationFailure as err:
            raise ProblemValidationError(cell_path(e, a, c), err) from err


def build_gtsf_matrix(problem: DecisionProblem) -> GTSFDecisionMatrix:
    """把每个单元格的专家评价族构造成一个 G-TSF 值。"""
    validate_problem(problem)
    entries = {
        (a, c): make_gtsfv(problem.family(a, c), problem.params)
        for a in problem.alternatives
        for c in problem.criteria
    }
    logger.debug(
        f"已构造 {len(problem.alternatives)}×{len(problem.criteria)} 的 G-TSF 决策矩阵"
    )
    return GTSFDecisionMatrix(problem.alternatives, problem.criteria, entries)


def ideal_alternative(
    criteria_count: int, labels: Optional[Sequence[str]] = None
) -> GTSFSet:
    """每个准则上都取 ⟨1, 0, 0; 1⟩ 的理想方案，默认准则标签为 f1..fn。"""
    if criteria_count < 1:
        raise ValueError(f"准则数必须为正，收到 {criteria_count}")
    if labels is None:
        labels = [f"f{q}" for q in range(1, criteria_count + 1)]
    if len(labels) != criteria_count:
        raise ValueError(f"标签数量 {len(labels)} 与准则数 {criteria_count} 不一致")
    return GTSFSet.from_pairs((label, IDEAL_VALUE) for label in labels)


def order_by_similarity(
    alternatives: Sequence[str], sims: Mapping[str, float]
) -> tuple[tuple[str, ...], tuple[tuple[str, ...], ...]]:
    """
    按相似度降序排列方案，返回 (顺序, 并列组)。

    先按原始相似度排序，再把相邻差值不超过容差的方案并成一组，
    组内按输入顺序排列。结果与输入顺序无关（组内顺序除外）。
    """
    position = {alt: i for i, alt in enumerate(alternatives)}
    groups: list[list[str]] = []
    for alt in sorted(alternatives, key=lambda a: (-sims[a], position[a])):
        if groups and sims[groups[-1][-1]] - sims[alt] <= SIMILARITY_TIE_TOLERANCE:
            groups[-1].append(alt)
        else:
            groups.append([alt])
    groups = [sorted(g, key=position.__getitem__) for g in groups]
    order = tuple(alt for g in groups for alt in g)
    return order, tuple(tuple(g) for g in groups if len(g) > 1)


def rank(
    matrix: GTSFDecisionMatrix,
    p: Params,
    weights: Optional[WeightVector] = None,
) -> RankingReport:
    """
    计算每个方案对理想方案的相似度并降序排列。

    相似度在容差内相等的方案按输入顺序排列，并作为并列组写入报告。
    """
    weight_list = weights.weights if weights is not None else None
    sims: dict[str, float] = {}
    for alt in matrix.alternatives:
        try:
            sims[alt] = ideal_similarity(matrix.row(alt), p, weight_list)
        except DegenerateValue as e:
            raise DegenerateValue(str(e), context=f"alternative={alt}") from e

    order, ties = order_by_similarity(matrix.alternatives, sims)
    for group in ties:
        logger.debug(f"方案 {list(group)} 相似度并列，按输入顺序排列")
    return RankingReport(sims, tuple(order), tuple(ties))


def solve(problem: DecisionProblem) -> RankingReport:
    """完整流水线：build_gtsf_matrix 之后 rank。"""
    matrix = build_gtsf_matrix(problem)
    return rank(matrix, problem.params, problem.criterion_weights)
