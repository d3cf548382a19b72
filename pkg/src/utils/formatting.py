# -*- coding: utf-8 -*-
"""
格式化工具函数。

table 格式按 DISPLAY_DECIMALS 位小数显示，只用于阅读；
json 格式保留完整精度，可被重新解析。
"""

import json
from typing import Any, Mapping, Optional, Sequence

import pandas as pd

from src.config import DISPLAY_DECIMALS
from src.gtsf.core import GTSFSet, GTSFValue
from src.gtsf.mcgdm import GTSFDecisionMatrix, RankingReport

FORMATS = ("table", "json")


def format_value(v: GTSFValue, decimals: int = DISPLAY_DECIMALS) -> str:
    """<φ,χ,ψ;r>，与决策矩阵表格的写法一致。"""
    parts = ",".join(f"{x:.{decimals}f}" for x in v.center.grades())
    return f"<{parts};{v.radius:.{decimals}f}>"


def value_payload(v: GTSFValue) -> dict[str, Any]:
    payload: dict[str, Any] = {"phi": v.phi, "chi": v.chi, "psi": v.psi, "radius": v.radius}
    if not v.normal:
        payload["normal"] = False
    return payload


def dump_json(payload: Any) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2)


def _frame_text(frame: pd.DataFrame, decimals: int = DISPLAY_DECIMALS) -> str:
    return frame.to_string(float_format=lambda x: f"{x:.{decimals}f}")


# ===================================================================================
# 决策矩阵与排序报告
# ===================================================================================


def matrix_frame(matrix: GTSFDecisionMatrix) -> pd.DataFrame:
    return pd.DataFrame(
        [[format_value(matrix[(a, c)]) for c in matrix.criteria] for a in matrix.alternatives],
        index=list(matrix.alternatives),
        columns=list(matrix.criteria),
    )


def matrix_payload(matrix: GTSFDecisionMatrix) -> dict[str, Any]:
    return {
        "alternatives": list(matrix.alternatives),
        "criteria": list(matrix.criteria),
        "entries": {
            a: {c: value_payload(matrix[(a, c)]) for c in matrix.criteria}
            for a in matrix.alternatives
        },
    }


def emit_matrix(matrix: GTSFDecisionMatrix, fmt: str) -> str:
    if fmt == "json":
        return dump_json({"matrix": matrix_payload(matrix)})
    return "G-TSF 决策矩阵\n" + _frame_text(matrix_frame(matrix))


def report_payload(report: RankingReport) -> dict[str, Any]:
    return {
        "similarities": dict(report.similarities),
        "order": list(report.order),
        "best": report.best,
        "ties": [list(group) for group in report.ties],
    }


def emit_report(
    report: RankingReport, matrix: Optional[GTSFDecisionMatrix], fmt: str
) -> str:
    """
    渲染排序报告。

    table：决策矩阵（若给出）、各方案与理想方案的相似度、最终排序；
    json：相同内容，数值保持完整精度。
    """
    if fmt == "json":
        payload = report_payload(report)
        if matrix is not None:
            payload = {"matrix": matrix_payload(matrix), **payload}
        return dump_json(payload)

    sections = []
    if matrix is not None:
        sections.append("G-TSF 决策矩阵\n" + _frame_text(matrix_frame(matrix)))
    sims = pd.DataFrame(
        {"similarity": [report.similarities[a] for a in report.similarities]},
        index=list(report.similarities),
    )
    sections.append("与理想方案的相似度\n" + _frame_text(sims, decimals=4))
    ranking = "排序: " + " > ".join(report.order)
    if report.ties:
        ranking += "\n并列: " + "; ".join(" = ".join(g) for g in report.ties)
    sections.append(ranking)
    return "\n\n".join(sections)


# ===================================================================================
# 通用表格
# ===================================================================================


def emit_rows(
    title: str,
    rows: Sequence[Mapping[str, Any]],
    fmt: str,
    *,
    extra: Optional[Mapping[str, Any]] = None,
    decimals: int = 4,
) -> str:
    """把一组同构的记录渲染为表格或 JSON。"""
    if fmt == "json":
        payload: dict[str, Any] = {"rows": [dict(r) for r in rows]}
        if extra:
            payload.update(extra)
        return dump_json(payload)
    text = f"{title}\n" + _frame_text(pd.DataFrame(list(rows)), decimals=decimals)
    if extra:
        text += "\n" + "\n".join(f"{key}: {value}" for key, value in extra.items())
    return text


def set_rows(sets: Mapping[str, GTSFSet]) -> list[dict[str, Any]]:
    return [
        {"set": name, "element": label, "value": format_value(s[label])}
        for name, s in sets.items()
        for label in s
    ]
