# -*- coding: utf-8 -*-
"""
文档解析与序列化。

JSON 文档经 Pydantic 严格校验后转换为领域对象；语法错误抛出 ParseError，
字段错误抛出 SchemaError，约束校验失败抛出带单元格坐标的
ProblemValidationError。
"""

import csv
import io
import logging
from typing import NoReturn, Optional, Sequence, TypeVar

from pydantic import BaseModel, TypeAdapter, ValidationError

from src.config import CSV_HEADER
from src.documents.schemas import (
    AnyDocument,
    FamiliesDocument,
    ProblemDocument,
    SetsDocument,
)
from src.gtsf.aggregate import WeightVector
from src.gtsf.core import GTSFSet, GTSFValue, Params, TSFValue, validate_gtsfv
from src.gtsf.errors import (
    InvalidWeights,
    ParseError,
    ProblemValidationError,
    SchemaError,
    ValidationFailure,
)
from src.gtsf.mcgdm import DecisionProblem, validate_problem

logger = logging.getLogger(__name__)

DocT = TypeVar("DocT", bound=BaseModel)

_any_document = TypeAdapter(AnyDocument)


def _error_path(loc: Sequence) -> str:
    return ".".join(str(part) for part in loc) or "<root>"


def _raise_document_error(err: ValidationError) -> NoReturn:
    first = err.errors()[0]
    if first["type"] == "json_invalid":
        raise ParseError(f"JSON 语法错误: {first['msg']}") from err
    raise SchemaError(first["msg"], path=_error_path(first["loc"])) from err


def _validate(model: type[DocT], text: str) -> DocT:
    try:
        return model.model_validate_json(text)
    except ValidationError as err:
        _raise_document_error(err)


def load_document(text: str) -> AnyDocument:
    """按 `kind` 字段解析任意一种文档。"""
    try:
        return _any_document.validate_json(text)
    except ValidationError as err:
        _raise_document_error(err)


def _weights(values: Optional[list[float]], path: str) -> Optional[WeightVector]:
    if values is None:
        return None
    try:
        return WeightVector(tuple(values))
    except InvalidWeights as err:
        raise SchemaError(str(err), path=path) from err


# ===================================================================================
# 决策问题
# ===================================================================================


def problem_from_document(doc: ProblemDocument) -> DecisionProblem:
    evaluations: dict[tuple[str, str, str], TSFValue] = {}
    for expert, by_alt in doc.evaluations.items():
        for alternative, by_crit in by_alt.items():
            for criterion, grades in by_crit.items():
                evaluations[(expert, alternative, criterion)] = TSFValue(*grades)
    try:
        problem = DecisionProblem(
            experts=tuple(doc.experts),
            alternatives=tuple(doc.alternatives),
            criteria=tuple(doc.criteria),
            evaluations=evaluations,
            params=doc.params,
            criterion_weights=_weights(doc.criterion_weights, "criterion_weights"),
        )
    except ValueError as err:
        raise SchemaError(str(err), path="evaluations") from err
    validate_problem(problem)
    return problem


def parse_problem(text: str) -> DecisionProblem:
    """解析并校验一个决策问题文档。"""
    problem = problem_from_document(_validate(ProblemDocument, text))
    logger.debug(
        f"已解析决策问题：{len(problem.experts)} 位专家，"
        f"{len(problem.alternatives)} 个方案，{len(problem.criteria)} 个准则"
    )
    return problem


def document_from_problem(
    problem: DecisionProblem, notes: Sequence[str] = ()
) -> ProblemDocument:
    evaluations = {
        e: {
            a: {c: problem.evaluations[(e, a, c)].grades() for c in problem.criteria}
            for a in problem.alternatives
        }
        for e in problem.experts
    }
    weights = problem.criterion_weights
    return ProblemDocument(
        params=problem.params,
        experts=list(problem.experts),
        alternatives=list(problem.alternatives),
        criteria=list(problem.criteria),
        evaluations=evaluations,
        criterion_weights=list(weights.weights) if weights is not None else None,
        notes=list(notes),
    )


def dump_problem(problem: DecisionProblem, notes: Sequence[str] = ()) -> str:
    """`parse_problem` 的逆操作，数值保持完整精度。"""
    return document_from_problem(problem, notes).model_dump_json(indent=2)


def parse_evaluations_csv(
    text: str,
    params: Optional[Params] = None,
    criterion_weights: Optional[WeightVector] = None,
) -> DecisionProblem:
    """
    解析扁平的评价张量 CSV，表头固定为 expert,alternative,criterion,phi,chi,psi。

    标签顺序取首次出现的顺序。
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("CSV 为空")
    if tuple(h.strip() for h in header) != CSV_HEADER:
        raise SchemaError(f"CSV 表头应为 {','.join(CSV_HEADER)}，实际为 {','.join(header)}")

    experts: dict[str, None] = {}
    alternatives: dict[str, None] = {}
    criteria: dict[str, None] = {}
    evaluations: dict[tuple[str, str, str], TSFValue] = {}
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(CSV_HEADER):
            raise ParseError(f"第 {lineno} 行有 {len(row)} 列，应为 {len(CSV_HEADER)} 列")
        e, a, c = (cell.strip() for cell in row[:3])
        try:
            grades = [float(cell) for cell in row[3:]]
        except ValueError as err:
            raise ParseError(f"第 {lineno} 行的隶属度不是数字: {row[3:]}") from err
        if (e, a, c) in evaluations:
            raise SchemaError(f"第 {lineno} 行重复评价", path=f"evaluations[{e}][{a}][{c}]")
        experts.setdefault(e)
        alternatives.setdefault(a)
        criteria.setdefault(c)
        evaluations[(e, a, c)] = TSFValue(*grades)

    if not evaluations:
        raise SchemaError("CSV 中没有任何评价")
    try:
        problem = DecisionProblem(
            tuple(experts),
            tuple(alternatives),
            tuple(criteria),
            evaluations,
            params if params is not None else Params(),
            criterion_weights,
        )
    except ValueError as err:
        raise SchemaError(str(err), path="evaluations") from err
    validate_problem(problem)
    return problem


# ===================================================================================
# G-TSF 集合与 TSFV 族
# ===================================================================================


def gtsf_sets_from_document(
    doc: SetsDocument, params: Optional[Params] = None
) -> dict[str, GTSFSet]:
    """按 params（默认为文档参数）校验每个值并构造集合。"""
    params = params if params is not None else doc.params
    sets: dict[str, GTSFSet] = {}
    for name, elements in doc.sets.items():
        values: dict[str, GTSFValue] = {}
        for label, (phi, chi, psi, r) in elements.items():
            value = GTSFValue.of(phi, chi, psi, r)
            try:
                validate_gtsfv(value, params)
            except ValidationFailure as err:
                raise ProblemValidationError(f"sets[{name}][{label}]", err) from err
            values[label] = value
        sets[name] = GTSFSet(values)
    return sets


def parse_gtsf_sets(text: str) -> tuple[dict[str, GTSFSet], SetsDocument]:
    """解析 G-TSF 集合文档，返回已校验的集合和原始文档（含参数与权重）。"""
    doc = _validate(SetsDocument, text)
    return gtsf_sets_from_document(doc), doc


def document_weights(doc: SetsDocument) -> Optional[WeightVector]:
    return _weights(doc.weights, "weights")


def families_from_document(doc: FamiliesDocument) -> dict[str, list[TSFValue]]:
    families = {}
    for label, members in doc.families.items():
        if not members:
            raise SchemaError("TSFV 族不能为空", path=f"families.{label}")
        families[label] = [TSFValue(*grades) for grades in members]
    return families


def parse_families(text: str) -> tuple[dict[str, list[TSFValue]], FamiliesDocument]:
    doc = _validate(FamiliesDocument, text)
    return families_from_document(doc), doc
