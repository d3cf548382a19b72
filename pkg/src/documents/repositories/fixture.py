# -*- coding: utf-8 -*-
from pathlib import Path
from typing import Optional

from pydantic import TypeAdapter

from ..schemas import AnyDocument
from .base import BaseRepository

# 随包发布的样例文档目录
FIXTURES_DIR = Path(__file__).resolve().parents[2] / "fixtures"


class FixtureRepository(BaseRepository[AnyDocument]):
    def __init__(self, directory: Optional[Path] = None):
        super().__init__(directory or FIXTURES_DIR, TypeAdapter(AnyDocument))

    def describe(self, kind: Optional[str] = None) -> list[tuple[str, str, int]]:
        """
        列出内置样例的 (名称, 文档类型, 注释条数)，可按文档类型过滤。

        这是一个特定于 FixtureRepository 的查询方法，供 `fixtures` 子命令使用。
        """
        docs = self.get_multi(kind=kind) if kind is not None else self.get_multi()
        return [(name, doc.kind, len(doc.notes)) for name, doc in docs.items()]
