# -*- coding: utf-8 -*-
"""
服务层的基类，提供公共依赖项和辅助方法。
"""

import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from src.documents.repositories.fixture import FixtureRepository
from src.gtsf.core import Params
from src.gtsf.errors import DocumentError

logger = logging.getLogger(__name__)

FIXTURE_PREFIX = "fixture:"


@dataclass(frozen=True)
class ParamOverrides:
    """命令行上显式给出的参数，None 表示沿用文档中的值。"""

    t: Optional[int] = None
    avg_t: Optional[int] = None
    radius_t: Optional[int] = None
    sigma: Optional[float] = None
    center_decimals: Optional[int] = None
    exact_centers: bool = False

    def apply(self, base: Params, *, default_avg_t: Optional[int] = None) -> Params:
        """
        把覆盖项合并到文档参数上。

        单独给出 t 时，所有指数都跟随 t；否则未设置平均指数的文档
        使用 default_avg_t。中心点舍入位数只由 center_decimals /
        exact_centers 改变，不受 t 影响。
        """
        data = base.model_dump()
        if self.t is not None:
            data["t"] = self.t
            if self.avg_t is None and self.radius_t is None:
                data["avg_t"] = None
                data["radius_t"] = None
        elif data["avg_t"] is None and self.avg_t is None and default_avg_t is not None:
            data["avg_t"] = default_avg_t
        if self.avg_t is not None:
            data["avg_t"] = self.avg_t
        if self.radius_t is not None:
            data["radius_t"] = self.radius_t
        if self.sigma is not None:
            data["sigma"] = self.sigma
        if self.exact_centers:
            data["center_decimals"] = None
        elif self.center_decimals is not None:
            data["center_decimals"] = self.center_decimals
        # 重新构造以触发 Params 的字段校验
        return Params(**data)


class BaseService:
    """所有服务类的基类，提供公共依赖项和辅助方法。"""

    def __init__(self, fixture_repo: FixtureRepository):
        """Service 类的构造函数，通过依赖注入传入所需组件。"""
        self.fixture_repo = fixture_repo

    def read_text(self, ref: str) -> str:
        """
        读取文档文本。

        :param ref: 文件路径；"-" 表示标准输入；"fixture:名称" 表示内置样例。
        """
        if ref.startswith(FIXTURE_PREFIX):
            name = ref[len(FIXTURE_PREFIX):]
            logger.debug(f"读取内置样例 {name}")
            return self.fixture_repo.get_text(name)
        if ref == "-":
            return sys.stdin.read()
        try:
            return Path(ref).read_text(encoding="utf-8")
        except OSError as e:
            raise DocumentError(f"无法读取文件 {ref}: {e}") from e

    def fixture_notes(self, ref: str) -> list[str]:
        """内置样例附带的说明；其他来源返回空列表。"""
        if not ref.startswith(FIXTURE_PREFIX):
            return []
        return list(self.fixture_repo.get(ref[len(FIXTURE_PREFIX):]).notes)
