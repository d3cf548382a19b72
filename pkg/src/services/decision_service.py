# -*- coding: utf-8 -*-
"""
决策服务，负责多准则群决策流水线的业务逻辑。
"""

import logging
from dataclasses import dataclass
from typing import Optional

from src.config import DEFAULT_AVG_T
from src.documents.parser import parse_evaluations_csv, parse_problem
from src.gtsf.aggregate import WeightVector
from src.gtsf.core import Params
from src.gtsf.errors import SchemaError
from src.gtsf.mcgdm import (
    DecisionProblem,
    GTSFDecisionMatrix,
    RankingReport,
    build_gtsf_matrix,
    rank,
)
from src.services.base import BaseService, ParamOverrides

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecisionOutcome:
    problem: DecisionProblem
    matrix: GTSFDecisionMatrix
    report: Optional[RankingReport] = None


class DecisionService(BaseService):
    """封装了从专家评价到方案排序的全部业务逻辑。"""

    def load_problem(
        self,
        ref: str,
        overrides: ParamOverrides = ParamOverrides(),
        criterion_weights: Optional[WeightVector] = None,
    ) -> DecisionProblem:
        """
        读取决策问题并合并命令行参数。

        以 .csv 结尾的路径按扁平评价张量解析，其余按 JSON 文档解析。
        """
        text = self.read_text(ref)
        if ref.lower().endswith(".csv"):
            params = overrides.apply(Params(), default_avg_t=DEFAULT_AVG_T)
            problem = parse_evaluations_csv(text, params, criterion_weights)
        else:
            problem = parse_problem(text)
            params = overrides.apply(problem.params, default_avg_t=DEFAULT_AVG_T)
            if params != problem.params:
                problem = problem.with_params(params)
            if criterion_weights is not None:
                try:
                    problem = DecisionProblem(
                        problem.experts,
                        problem.alternatives,
                        problem.criteria,
                        problem.evaluations,
                        problem.params,
                        criterion_weights,
                    )
                except ValueError as e:
                    raise SchemaError(str(e), path="criterion_weights") from e
        logger.info(
            f"已载入决策问题 {ref}：{len(problem.experts)} 位专家 × "
            f"{len(problem.alternatives)} 个方案 × {len(problem.criteria)} 个准则，"
            f"t={params.t}，平均指数={params.averaging_exponent}，半径指数={params.radius_exponent}"
        )
        return problem

    def build_matrix(self, problem: DecisionProblem) -> GTSFDecisionMatrix:
        matrix = build_gtsf_matrix(problem)
        logger.info(f"已构造 G-TSF 决策矩阵（{len(matrix.alternatives)}×{len(matrix.criteria)}）")
        return matrix

    def matrix(
        self, ref: str, overrides: ParamOverrides = ParamOverrides()
    ) -> DecisionOutcome:
        """只构造决策矩阵，不排序。"""
        problem = self.load_problem(ref, overrides)
        return DecisionOutcome(problem, self.build_matrix(problem))

    def solve(
        self,
        ref: str,
        overrides: ParamOverrides = ParamOverrides(),
        criterion_weights: Optional[WeightVector] = None,
    ) -> DecisionOutcome:
        """完整流水线：载入 -> 决策矩阵 -> 与理想方案的相似度 -> 排序。"""
        problem = self.load_problem(ref, overrides, criterion_weights)
        if problem.criterion_weights is not None:
            logger.info(f"使用准则权重 {list(problem.criterion_weights.weights)}")
        matrix = self.build_matrix(problem)
        report = rank(matrix, problem.params, problem.criterion_weights)
        for group in report.ties:
            logger.warning(f"方案 {list(group)} 的相似度并列，按输入顺序排列")
        logger.info(f"排序完成，最优方案为 {report.best}")
        return DecisionOutcome(problem, matrix, report)
