# -*- coding: utf-8 -*-
"""
输入文档的 Pydantic 模型。

所有文档都带有 `schema_version` 与 `kind` 字段，未知字段一律拒绝。
"""

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.config import SUPPORTED_SCHEMA_VERSIONS, SCHEMA_VERSION
from src.gtsf.core import Params

Triple = tuple[float, float, float]
Quadruple = tuple[float, float, float, float]
Label = Annotated[str, Field(min_length=1)]


class DocumentBase(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    schema_version: str = SCHEMA_VERSION
    params: Params = Field(default_factory=Params)
    notes: list[str] = Field(default_factory=list)

    @field_validator("schema_version")
    @classmethod
    def _check_version(cls, v: str) -> str:
        if v not in SUPPORTED_SCHEMA_VERSIONS:
            raise ValueError(
                f"不支持的 schema_version {v!r}，支持: {list(SUPPORTED_SCHEMA_VERSIONS)}"
            )
        return v


# ==================================
# 决策问题
# ==================================


class ProblemDocument(DocumentBase):
    """专家 × 方案 × 准则 的 TSFV 评价，evaluations[专家][方案][准则] = [φ, χ, ψ]。"""

    kind: Literal["problem"] = "problem"
    experts: list[Label] = Field(min_length=1)
    alternatives: list[Label] = Field(min_length=1)
    criteria: list[Label] = Field(min_length=1)
    evaluations: dict[str, dict[str, dict[str, Triple]]]
    criterion_weights: Optional[list[float]] = None


# ==================================
# G-TSF 集合
# ==================================


class SetsDocument(DocumentBase):
    """
    若干命名的 G-TSF 集合，sets[集合名][论域标签] = [φ, χ, ψ, r]。

    distance / similarity / aggregate / score 子命令读取这种文档。
    """

    kind: Literal["sets"] = "sets"
    sets: dict[str, dict[str, Quadruple]] = Field(min_length=1)
    weights: Optional[list[float]] = None


# ==================================
# TSFV 族
# ==================================


class FamiliesDocument(DocumentBase):
    """families[论域标签] = [[φ, χ, ψ], ...]，用于由评价族构造 G-TSF 值。"""

    kind: Literal["families"] = "families"
    families: dict[str, list[Triple]] = Field(min_length=1)


AnyDocument = Annotated[
    Union[ProblemDocument, SetsDocument, FamiliesDocument],
    Field(discriminator="kind"),
]
