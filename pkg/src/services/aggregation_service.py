# -*- coding: utf-8 -*-
"""
聚合服务：加权平均 / 加权几何聚合，以及由 TSFV 族构造 G-TSF 值。
"""

import logging
from typing import Optional

from src.documents.parser import document_weights, parse_families
from src.gtsf.aggregate import WeightVector, gtsfwaa, gtsfwga
from src.gtsf.construct import make_gtsfs
from src.gtsf.core import GTSFSet, GTSFValue
from src.services.base import ParamOverrides
from src.services.measure_service import MeasureService

logger = logging.getLogger(__name__)

OPERATORS = {"waa": gtsfwaa, "wga": gtsfwga}


class AggregationService(MeasureService):
    """封装了聚合与构造相关的业务逻辑。"""

    def aggregate(
        self,
        ref: str,
        set_name: Optional[str] = None,
        weights: Optional[WeightVector] = None,
        operators: tuple[str, ...] = ("waa", "wga"),
        overrides: ParamOverrides = ParamOverrides(),
    ) -> dict[str, GTSFValue]:
        """
        聚合某个集合中的全部值。

        权重优先取命令行给出的值，其次取文档中的 weights，都没有时等权。
        """
        loaded = self.load_sets(ref, overrides)
        name, s = loaded.pick(set_name, 0)
        w = weights if weights is not None else document_weights(loaded.document)
        if w is None:
            w = WeightVector.uniform(len(s))
        values = s.values()
        logger.info(f"聚合集合 {name} 的 {len(values)} 个值，权重 {list(w.weights)}")
        return {op: OPERATORS[op](values, w, loaded.params) for op in operators}

    def construct(
        self, ref: str, overrides: ParamOverrides = ParamOverrides()
    ) -> GTSFSet:
        """由评价族文档构造 G-TSF 集合，每个族得到一个 G-TSF 值。"""
        families, doc = parse_families(self.read_text(ref))
        params = overrides.apply(doc.params)
        result = make_gtsfs(families, params)
        logger.info(
            f"已由 {len(families)} 个评价族构造 G-TSF 值，"
            f"平均指数={params.averaging_exponent}，半径指数={params.radius_exponent}"
        )
        return result
