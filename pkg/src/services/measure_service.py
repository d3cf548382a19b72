# -*- coding: utf-8 -*-
"""
度量服务：G-TSF 集合之间的距离、余弦相似度、得分 / 精确函数，
以及按理想方案相似度对整组集合排序。
"""

import logging
from dataclasses import dataclass
from typing import Any, Optional

from src.documents.parser import document_weights, gtsf_sets_from_document, parse_gtsf_sets
from src.documents.schemas import SetsDocument
from src.gtsf.aggregate import WeightVector
from src.gtsf.core import GTSFSet, Params
from src.gtsf.errors import SchemaError, UniverseMismatch
from src.gtsf.mcgdm import GTSFDecisionMatrix, RankingReport, rank
from src.gtsf.metrics import cosine_sm, euclidean, euclidean_element, hamming, hamming_element
from src.gtsf.ranking import accuracy, rank_values, score
from src.services.base import BaseService, ParamOverrides

logger = logging.getLogger(__name__)

MEASURES = ("hamming", "euclidean")


@dataclass(frozen=True)
class LoadedSets:
    sets: dict[str, GTSFSet]
    params: Params
    weights: Optional[WeightVector]
    document: SetsDocument

    def pick(self, name: Optional[str], position: int) -> tuple[str, GTSFSet]:
        """按名称取集合；未给出名称时按文档中的位置取。"""
        names = list(self.sets)
        if name is None:
            if position >= len(names):
                raise SchemaError(f"文档只有 {len(names)} 个集合，无法取第 {position + 1} 个")
            name = names[position]
        if name not in self.sets:
            raise SchemaError(f"没有名为 {name!r} 的集合，可用: {names}")
        return name, self.sets[name]


class MeasureService(BaseService):
    """封装了距离、相似度和得分相关的业务逻辑。"""

    def load_sets(self, ref: str, overrides: ParamOverrides = ParamOverrides()) -> LoadedSets:
        sets, doc = parse_gtsf_sets(self.read_text(ref))
        params = overrides.apply(doc.params)
        if params != doc.params:
            sets = gtsf_sets_from_document(doc, params)
        logger.info(f"已载入 {len(sets)} 个 G-TSF 集合 ({ref})，t={params.t}")
        return LoadedSets(sets, params, document_weights(doc), doc)

    def distance(
        self,
        ref: str,
        left: Optional[str] = None,
        right: Optional[str] = None,
        overrides: ParamOverrides = ParamOverrides(),
    ) -> tuple[list[dict[str, Any]], dict[str, float]]:
        """
        计算两个集合之间逐元素和归一化的 Hamming / Euclidean 距离。

        :return: (逐元素记录, 归一化距离)
        """
        loaded = self.load_sets(ref, overrides)
        a_name, a = loaded.pick(left, 0)
        b_name, b = loaded.pick(right, 1)
        p = loaded.params
        if a.labels != b.labels:
            raise UniverseMismatch(a.labels, b.labels)
        rows = [
            {
                "element": x,
                "hamming": hamming_element(a[x], b[x], p),
                "euclidean": euclidean_element(a[x], b[x], p),
            }
            for x in a.labels
        ]
        totals = {"hamming": hamming(a, b, p), "euclidean": euclidean(a, b, p)}
        logger.info(f"{a_name} 与 {b_name} 的归一化距离: {totals}")
        return rows, totals

    def similarity(
        self,
        ref: str,
        left: Optional[str] = None,
        right: Optional[str] = None,
        overrides: ParamOverrides = ParamOverrides(),
    ) -> list[dict[str, Any]]:
        """两个集合逐元素的余弦相似度。"""
        loaded = self.load_sets(ref, overrides)
        _, a = loaded.pick(left, 0)
        _, b = loaded.pick(right, 1)
        if a.labels != b.labels:
            raise UniverseMismatch(a.labels, b.labels)
        return [
            {"element": x, "similarity": cosine_sm(a[x], b[x], loaded.params)}
            for x in a.labels
        ]

    def ideal_ranking(
        self, ref: str, overrides: ParamOverrides = ParamOverrides()
    ) -> tuple[GTSFDecisionMatrix, RankingReport]:
        """把文档中的每个集合当作一个方案，按与理想方案的相似度排序。"""
        loaded = self.load_sets(ref, overrides)
        names = list(loaded.sets)
        criteria = loaded.sets[names[0]].labels
        for name in names[1:]:
            if loaded.sets[name].labels != criteria:
                raise UniverseMismatch(criteria, loaded.sets[name].labels)
        entries = {(name, c): loaded.sets[name][c] for name in names for c in criteria}
        matrix = GTSFDecisionMatrix(tuple(names), criteria, entries)
        report = rank(matrix, loaded.params, loaded.weights)
        for group in report.ties:
            logger.warning(f"方案 {list(group)} 的相似度并列，按输入顺序排列")
        logger.info(f"排序完成，最优方案为 {report.best}")
        return matrix, report

    def score(
        self, ref: str, overrides: ParamOverrides = ParamOverrides()
    ) -> list[dict[str, Any]]:
        """
        每个集合中每个值的得分与精确度，以及按比较规则在集合内的名次。
        """
        loaded = self.load_sets(ref, overrides)
        p = loaded.params
        rows = []
        for name, s in loaded.sets.items():
            values = s.values()
            places = {idx: place for place, idx in enumerate(rank_values(values, p), start=1)}
            for idx, label in enumerate(s.labels):
                rows.append(
                    {
                        "set": name,
                        "element": label,
                        "score": score(values[idx], p),
                        "accuracy": accuracy(values[idx], p),
                        "place": places[idx],
                    }
                )
        return rows
