# -*- coding: utf-8 -*-
"""
G-TSF 集合之间的 Hamming / Euclidean 距离，G-TSF 值之间的余弦相似度，
以及与理想方案的相似度。

所有分量差都在 t 次幂坐标下计算。
"""

import logging
from typing import Optional, Sequence

import numpy as np

from src.gtsf.core import GTSFSet, GTSFValue, Params
from src.gtsf.errors import DegenerateValue, EmptyUniverse, UniverseMismatch

logger = logging.getLogger(__name__)

IDEAL_VALUE = GTSFValue.of(1.0, 0.0, 0.0, 1.0)


def _powers(a: GTSFValue, t: int) -> np.ndarray:
    return np.array(a.center.grades(), dtype=float) ** t


def _set_arrays(a: GTSFSet, b: GTSFSet, t: int) -> tuple[np.ndarray, np.ndarray]:
    """返回 (n×3 的幂差, 长度 n 的半径差绝对值)。"""
    if a.labels != b.labels:
        raise UniverseMismatch(a.labels, b.labels)
    if len(a) == 0:
        raise EmptyUniverse("论域为空，归一化距离无定义")
    pa = np.array([v.center.grades() for v in a.values()], dtype=float) ** t
    pb = np.array([v.center.grades() for v in b.values()], dtype=float) ** t
    ra = np.array([v.radius for v in a.values()], dtype=float)
    rb = np.array([v.radius for v in b.values()], dtype=float)
    return pa - pb, np.abs(ra - rb)


# ===================================================================================
# 距离
# ===================================================================================


def hamming_element(a: GTSFValue, b: GTSFValue, p: Params) -> float:
    diff = np.abs(_powers(a, p.t) - _powers(b, p.t)).sum()
    return float(0.5 * (abs(a.radius - b.radius) + 0.5 * diff))


def euclidean_element(a: GTSFValue, b: GTSFValue, p: Params) -> float:
    sq = ((_powers(a, p.t) - _powers(b, p.t)) ** 2).sum()
    return float(0.5 * (abs(a.radius - b.radius) + np.sqrt(0.5 * sq)))


def hamming(a: GTSFSet, b: GTSFSet, p: Params) -> float:
    """归一化 Hamming 距离：(1/2n) Σ(|r − s| + ½ Σ|幂差|)。"""
    diff, dr = _set_arrays(a, b, p.t)
    n = len(dr)
    return float((dr + 0.5 * np.abs(diff).sum(axis=1)).sum() / (2 * n))


def euclidean(a: GTSFSet, b: GTSFSet, p: Params) -> float:
    """归一化 Euclidean 距离：½((1/n)Σ|r − s| + sqrt((1/2n) ΣΣ 幂差²))。"""
    diff, dr = _set_arrays(a, b, p.t)
    n = len(dr)
    return float(0.5 * (dr.mean() + np.sqrt((diff**2).sum() / (2 * n))))


# ===================================================================================
# 相似度
# ===================================================================================


def cosine_sm(a: GTSFValue, b: GTSFValue, p: Params) -> float:
    """
    ½(cos(幂向量夹角) + 1 − |r_a − r_b|)。

    任一中心点为 (0, 0, 0) 时余弦项为 0/0，抛出 DegenerateValue。
    """
    va, vb = _powers(a, p.t), _powers(b, p.t)
    na, nb = float(np.linalg.norm(va)), float(np.linalg.norm(vb))
    if na == 0.0 or nb == 0.0:
        raise DegenerateValue(f"中心点为零向量，余弦相似度无定义：{a} / {b}")
    if a.center == b.center:
        cos = 1.0
    else:
        cos = min(float(np.dot(va, vb)) / (na * nb), 1.0)
    return 0.5 * (cos + 1.0 - abs(a.radius - b.radius))


def ideal_similarity(
    alt: GTSFSet, p: Params, weights: Optional[Sequence[float]] = None
) -> float:
    """
    方案对理想方案 ⟨1, 0, 0; 1⟩ 的相似度，即各准则 cosine_sm 的平均。

    weights 为可选的准则权重（扩展功能，默认等权）。
    """
    if len(alt) == 0:
        raise EmptyUniverse("方案没有任何准则")
    terms = []
    for label in alt:
        try:
            terms.append(cosine_sm(alt[label], IDEAL_VALUE, p))
        except DegenerateValue as e:
            raise DegenerateValue(str(e), context=f"criterion={label}") from e
    if weights is None:
        return float(np.mean(terms))
    if len(weights) != len(terms):
        raise ValueError(f"准则权重数量 {len(weights)} 与准则数 {len(terms)} 不一致")
    return float(np.dot(np.asarray(weights, dtype=float), terms))
