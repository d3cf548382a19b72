from pathlib import Path
from typing import Generic, TypeVar

from pydantic import TypeAdapter, ValidationError

from src.gtsf.errors import DocumentError, SchemaError

# --- 类型变量定义 ---
# 'DocumentType' 表示仓库中存放的文档模型（可以是 Pydantic 判别联合）
DocumentType = TypeVar("DocumentType")


class BaseRepository(Generic[DocumentType]):
    """
    以目录为存储的只读文档仓库。

    每个 `<name>.json` 文件是一条记录，读取时按给定的文档类型校验。
    """

    def __init__(self, directory: Path, adapter: TypeAdapter):
        """
        初始化仓库。

        :param directory: 存放 JSON 文档的目录。
        :param adapter: 用于校验文档的 Pydantic TypeAdapter。
        """
        self.directory = directory
        self.adapter = adapter

    def _path(self, name: str) -> Path:
        return self.directory / f"{name}.json"

    def names(self) -> list[str]:
        """按名称排序返回所有记录名。"""
        return sorted(p.stem for p in self.directory.glob("*.json") if p.is_file())

    def exists(self, name: str) -> bool:
        return self._path(name).is_file()

    def get_text(self, name: str) -> str:
        """
        获取记录的原始文本。

        :param name: 记录名（不含扩展名）。
        :return: 文件内容。
        """
        if not self.exists(name):
            raise DocumentError(f"找不到文档 {name!r}，可用: {self.names()}")
        return self._path(name).read_text(encoding="utf-8")

    def get(self, name: str) -> DocumentType:
        """
        根据名称获取并校验单个文档。

        :param name: 记录名。
        :return: 校验后的文档对象。
        """
        try:
            return self.adapter.validate_json(self.get_text(name))
        except ValidationError as err:
            raise SchemaError(f"文档 {name!r} 不符合格式: {err}") from err

    def get_multi(self, **kwargs: str) -> dict[str, DocumentType]:
        """
        按名称顺序获取字段值全部匹配的文档。

        :param kwargs: 用于过滤的字段和值；为空时返回全部文档。
        :return: 记录名到文档的映射。
        """
        docs = {}
        for name in self.names():
            doc = self.get(name)
            if all(getattr(doc, key, None) == value for key, value in kwargs.items()):
                docs[name] = doc
        return docs
